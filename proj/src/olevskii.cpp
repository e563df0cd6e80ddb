#include "qg/olevskii.hpp"

#include <cmath>

namespace qg {

std::pair<int, int> BlockLayout::block_of(long psi_idx) const {
  require(psi_idx >= 0 && psi_idx < psi_dim(), "psi index out of range");
  int k = 1;
  while ((1L << (k + 1)) - 2 <= psi_idx) ++k;
  return {k, static_cast<int>(psi_idx - ((1L << k) - 2)) + 1};
}

BlockLayout block_layout(int kmax) {
  require(kmax >= 1, "block_layout: kmax must be >= 1");
  BlockLayout layout;
  layout.kmax = kmax;
  layout.n.assign(static_cast<std::size_t>(kmax) + 2, 0);
  layout.n[1] = 0;
  for (int k = 1; k <= kmax; ++k) {
    layout.n[static_cast<std::size_t>(k) + 1] = layout.n[static_cast<std::size_t>(k)] + (1L << k) - 1;
  }
  return layout;
}

HaarMatrix haar_matrix(int k) {
  require(k >= 1 && k <= 20, "haar_matrix: k out of range [1,20]");
  const int size = 1 << k;
  HaarMatrix haar;
  haar.k = k;
  haar.entries = MatrixXd::Zero(size, size);
  haar.entries.col(0).setConstant(std::pow(2.0, -0.5 * k));
  for (int p = 0; p < k; ++p) {
    const int step = 1 << (k - p); // support length of a column at scale p
    const double value = std::pow(2.0, 0.5 * (p - k));
    for (int q = 0; q < (1 << p); ++q) {
      const int col = (1 << p) + q;
      const int start = q * step;
      haar.entries.col(col).segment(start, step / 2).setConstant(value);
      haar.entries.col(col).segment(start + step / 2, step / 2).setConstant(-value);
    }
  }
  return haar;
}

OlevskiiBasis olevskii_basis(BasisPtr inner, int kmax) {
  require(inner != nullptr, "olevskii_basis: null inner basis");
  require(kmax >= 1 && kmax <= 12, "olevskii_basis: kmax out of range [1,12]");
  require(inner->dim() >= kmax, "olevskii_basis: inner basis dimension below kmax");

  OlevskiiBasis out;
  out.inner = inner;
  out.layout = block_layout(kmax);

  const long e_dim = out.layout.e_dim();
  const long psi_dim = out.layout.psi_dim();
  const long ref_dim = kmax + e_dim;

  SpacePtr x_part = std::make_shared<PullbackSpace>(
      inner->ambient_ptr(), inner->change_of_basis().leftCols(kmax));
  SpacePtr h_part = std::make_shared<SequenceSpace>(static_cast<int>(e_dim), 2.0);
  SpacePtr ambient = direct_sum({x_part, h_part});

  MatrixXcd columns = MatrixXcd::Zero(ref_dim, psi_dim);
  std::vector<BasisLabel> labels(static_cast<std::size_t>(psi_dim));
  for (int k = 1; k <= kmax; ++k) {
    const HaarMatrix haar = haar_matrix(k);
    const int block = out.layout.block_size(k);
    for (int l = 1; l <= block; ++l) {
      const long col = out.layout.psi_index(k, l);
      columns(k - 1, col) = haar.entries(l - 1, 0); // x_k coefficient 2^{-k/2}
      for (int m = 2; m <= block; ++m) {
        const long row = kmax + out.layout.e_index(k, m) - 1;
        columns(row, col) = haar.entries(l - 1, m - 1);
      }
      BasisLabel label;
      label.block = k;
      label.pos = l;
      label.text = "psi(" + std::to_string(k) + "," + std::to_string(l) + ")";
      labels[static_cast<std::size_t>(col)] = label;
    }
  }

  out.psi = std::make_shared<BasisInstance>(std::move(ambient), std::move(columns),
                                            std::move(labels));
  return out;
}

ComponentSplit project_components(const OlevskiiBasis& basis, const CoeffVec& v) {
  const BlockLayout& layout = basis.layout;
  require(v.size() == layout.psi_dim(), "project_components: wrong coefficient dimension");

  ComponentSplit split;
  split.lambda = VectorXcd::Zero(layout.kmax);
  split.eta = VectorXcd::Zero(layout.psi_dim());
  for (int k = 1; k <= layout.kmax; ++k) {
    const int block = layout.block_size(k);
    const long base = layout.psi_index(k, 1);
    const Complex block_sum = v.segment(base, block).sum();
    split.lambda[k - 1] = std::pow(2.0, -0.5 * k) * block_sum;
    const Complex mean = block_sum / static_cast<double>(block);
    split.eta.segment(base, block) = v.segment(base, block).array() - mean;
  }
  return split;
}

std::pair<double, double> verify_bonek(const OlevskiiBasis& basis, int k,
                                       const SupportSet& block_subset) {
  require(k >= 1 && k <= basis.layout.kmax, "verify_bonek: block out of range");
  const int block = basis.layout.block_size(k);
  for (int l0 : block_subset) {
    require(l0 >= 0 && l0 < block, "verify_bonek: subset index outside block");
  }

  const HaarMatrix haar = haar_matrix(k);
  double lhs = 0.0;
  for (int m = 2; m <= block; ++m) {
    double column_sum = 0.0;
    for (int l0 : block_subset) column_sum += haar.entries(l0, m - 1);
    lhs += column_sum * column_sum;
  }
  const double count = static_cast<double>(block_subset.size());
  const double rhs = count * (1.0 - std::pow(2.0, -k) * count);
  return {lhs, rhs};
}

CoeffVec lift_to_psi(const OlevskiiBasis& basis, const CoeffVec& inner_coeffs) {
  const BlockLayout& layout = basis.layout;
  require(inner_coeffs.size() >= layout.kmax, "lift_to_psi: too few inner coefficients");
  for (long j = layout.kmax; j < inner_coeffs.size(); ++j) {
    require(std::abs(inner_coeffs[j]) == 0.0,
            "lift_to_psi: inner coefficient beyond kmax blocks");
  }

  CoeffVec out = CoeffVec::Zero(layout.psi_dim());
  for (int k = 1; k <= layout.kmax; ++k) {
    const int block = layout.block_size(k);
    const long base = layout.psi_index(k, 1);
    const Complex value = inner_coeffs[k - 1] * std::pow(2.0, -0.5 * k);
    out.segment(base, block).setConstant(value);
  }
  return out;
}

} // namespace qg
