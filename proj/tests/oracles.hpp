// Test-only oracles, deliberately independent of the library's computation
// paths: projection norms via LU-solve power iteration (no Cholesky, no
// eigensolver), inner minimization via norm-only parabolic descent.
#ifndef QG_TESTS_ORACLES_HPP
#define QG_TESTS_ORACLES_HPP

#include <Eigen/LU>
#include <cmath>

#include "qg/basis.hpp"
#include "qg/coeffs.hpp"
#include "qg/rng.hpp"
#include "qg/space.hpp"

namespace qg::oracle {

// Random Hermitian positive-definite Gram with unit diagonal.
inline MatrixXcd random_gram(int dim, Rng& rng, double ridge = 0.35) {
  MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = rng.cnormal();
  }
  MatrixXcd g = a.adjoint() * a / static_cast<double>(dim) +
                ridge * MatrixXcd::Identity(dim, dim);
  VectorXd scale(dim);
  for (int i = 0; i < dim; ++i) scale[i] = 1.0 / std::sqrt(std::real(g(i, i)));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) *= scale[i] * scale[j];
  }
  return 0.5 * (g + g.adjoint().eval());
}

// max_x ||restrict(x,A)||_M / ||x||_M by power iteration on M^{-1} D_A M D_A
// (the stationarity operator of the squared ratio), multiple random starts.
inline double projection_norm_bruteforce(const MatrixXcd& gram, const SupportSet& set,
                                         int starts = 12, int iterations = 300) {
  const int dim = static_cast<int>(gram.rows());
  if (set.empty()) return 0.0;
  Eigen::PartialPivLU<MatrixXcd> lu(gram);
  Rng rng(0xBEEF);

  auto ratio_sq = [&](const CoeffVec& x) {
    CoeffVec masked = CoeffVec::Zero(dim);
    for (int j : set) masked[j] = x[j];
    const double denom = std::real(x.dot(gram * x));
    if (denom <= 0.0) return 0.0;
    return std::max(0.0, std::real(masked.dot(gram * masked))) / denom;
  };

  double best = 0.0;
  for (int s = 0; s < starts; ++s) {
    CoeffVec x(dim);
    for (int j = 0; j < dim; ++j) x[j] = rng.cnormal();
    for (int it = 0; it < iterations; ++it) {
      CoeffVec masked = CoeffVec::Zero(dim);
      for (int j : set) masked[j] = x[j];
      CoeffVec y = gram * masked;
      CoeffVec masked_y = CoeffVec::Zero(dim);
      for (int j : set) masked_y[j] = y[j];
      x = lu.solve(masked_y);
      const double n = x.norm();
      if (n <= 1e-300) break;
      x /= n;
    }
    best = std::max(best, ratio_sq(x));
  }
  return std::sqrt(best);
}

// Norm-only inner minimization over a fixed support: per-real-coordinate
// 3-point parabolic steps (exact for the quadratic hilbert objective).
inline double nterm_error_bruteforce(const BasisInstance& basis, const CoeffVec& v,
                                     const std::vector<int>& support, int sweeps = 60) {
  const MatrixXcd& columns = basis.change_of_basis();
  CoeffVec residual = columns * v;
  VectorXcd coeffs = VectorXcd::Zero(static_cast<long>(support.size()));
  const auto& ambient = basis.ambient();

  auto objective = [&]() { return ambient.norm(residual); };
  double current = objective();
  const double h = 0.5;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t slot = 0; slot < support.size(); ++slot) {
      for (int axis = 0; axis < 2; ++axis) {
        const Complex dir = axis == 0 ? Complex(1, 0) : Complex(0, 1);
        const double f0 = current;
        residual -= h * dir * columns.col(support[slot]);
        const double fp = objective();
        residual += 2.0 * h * dir * columns.col(support[slot]);
        const double fm = objective();
        residual -= h * dir * columns.col(support[slot]); // back to center
        // parabola through (-h, fm^2), (0, f0^2), (h, fp^2)
        const double a = (fp * fp + fm * fm - 2.0 * f0 * f0) / (2.0 * h * h);
        const double b = (fp * fp - fm * fm) / (2.0 * h);
        if (a <= 0.0) continue;
        const double step = -b / (2.0 * a);
        residual -= step * dir * columns.col(support[slot]);
        coeffs[static_cast<long>(slot)] += step * dir;
        current = objective();
      }
    }
  }
  return current;
}

} // namespace qg::oracle

#endif
