#include "qg/spaces.hpp"

#include <cmath>

namespace qg {

WeightedTrigBasis gram_from_weighted_trig(double alpha, long maxfreq, const QuadConfig& quad,
                                          const Exec& exec) {
  require(std::abs(alpha) < 0.5, "gram_from_weighted_trig: |alpha| must be < 1/2 (A_2 range)");
  require(maxfreq >= 0, "gram_from_weighted_trig: maxfreq must be >= 0");

  const double gamma = 2.0 * alpha;
  std::vector<double> coeffs = weight_coeff_table(gamma, 2 * maxfreq, quad, exec);
  const double w0 = coeffs[0];
  require(w0 > 0.0, "weight has nonpositive mass");

  const int d = static_cast<int>(2 * maxfreq + 1);
  MatrixXcd gram(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const long diff = std::labs(trig_frequency(j) - trig_frequency(i));
      gram(i, j) = coeffs[static_cast<std::size_t>(diff)] / w0;
    }
  }

  WeightedTrigBasis out;
  out.space = std::make_shared<GramSpace>(std::move(gram));
  out.alpha = alpha;
  out.maxfreq = maxfreq;
  out.weight_coeffs = std::move(coeffs);

  std::vector<BasisLabel> labels(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    labels[static_cast<std::size_t>(j)].freq = trig_frequency(j);
    labels[static_cast<std::size_t>(j)].text = "exp(" + std::to_string(trig_frequency(j)) + "it)";
  }
  BasisInstance::Options options;
  options.check_invertible = false; // identity columns
  out.basis = std::make_shared<BasisInstance>(out.space, MatrixXcd::Identity(d, d),
                                              std::move(labels), options);
  return out;
}

double dirichlet_weighted_norm(long n_max, double gamma, const QuadConfig& quad,
                               const Exec& exec) {
  require(n_max >= 0, "dirichlet_weighted_norm: N must be >= 0");
  require(std::abs(gamma) < 1.0, "dirichlet_weighted_norm: |gamma| must be < 1");
  // Weight here is |t|^{gamma}; the coefficient routine works with |t|^{-g}.
  const std::vector<double> coeffs = weight_coeff_table(-gamma, 2 * n_max, quad, exec);
  const double count = static_cast<double>(2 * n_max + 1);
  double sum = count * coeffs[0];
  for (long j = 1; j <= 2 * n_max; ++j) {
    sum += 2.0 * (count - static_cast<double>(j)) * coeffs[static_cast<std::size_t>(j)];
  }
  return std::sqrt(std::max(sum, 0.0));
}

BasisPtr rotated_pair_basis(const BasisInstance& e_basis, const BasisInstance& f_basis) {
  require(e_basis.dim() == f_basis.dim(), "rotated_pair_basis: dimension mismatch");
  const int d = e_basis.dim();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  SpacePtr ambient = direct_sum({e_basis.ambient_ptr(), f_basis.ambient_ptr()});
  MatrixXcd columns = MatrixXcd::Zero(2 * d, 2 * d);
  std::vector<BasisLabel> labels(static_cast<std::size_t>(2 * d));
  for (int k = 0; k < d; ++k) {
    columns.col(2 * k).head(d) = inv_sqrt2 * e_basis.change_of_basis().col(k);
    columns.col(2 * k).tail(d) = inv_sqrt2 * f_basis.change_of_basis().col(k);
    columns.col(2 * k + 1).head(d) = inv_sqrt2 * e_basis.change_of_basis().col(k);
    columns.col(2 * k + 1).tail(d) = -inv_sqrt2 * f_basis.change_of_basis().col(k);

    BasisLabel plus;
    plus.pos = k + 1;
    plus.part = +1;
    plus.freq = e_basis.labels()[static_cast<std::size_t>(k)].freq;
    plus.text = "(e" + std::to_string(k + 1) + "+f" + std::to_string(k + 1) + ")/sqrt2";
    BasisLabel minus = plus;
    minus.part = -1;
    minus.text = "(e" + std::to_string(k + 1) + "-f" + std::to_string(k + 1) + ")/sqrt2";
    labels[static_cast<std::size_t>(2 * k)] = plus;
    labels[static_cast<std::size_t>(2 * k + 1)] = minus;
  }
  return std::make_shared<BasisInstance>(std::move(ambient), std::move(columns),
                                         std::move(labels));
}

BasisPtr canonical_sequence_basis(int dim, double p) {
  return identity_basis(std::make_shared<SequenceSpace>(dim, p));
}

} // namespace qg
