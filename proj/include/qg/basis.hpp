#ifndef QG_BASIS_HPP
#define QG_BASIS_HPP

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Cholesky>

#include "qg/space.hpp"

namespace qg {

// Per-index metadata attached to constructed bases.
struct BasisLabel {
  long freq = 0;    // trigonometric frequency, when meaningful
  int block = -1;   // block id (Olevskii k), -1 if none
  int pos = 0;      // 1-based position inside the block
  int part = -1;    // direct-summand id for pair constructions
  std::string text; // display form
};

struct BasisOptions {
  bool check_normalized = true; // columns must have ambient norm 1 +- 1e-9
  bool check_invertible = true;
};

// A basis of a normed space: ambient norm evaluator plus the change-of-basis
// matrix from basis coefficients to reference coordinates (column j = basis
// vector j). Immutable; the Gram of the basis and its Cholesky factor are
// precomputed for hilbert ambients.
class BasisInstance {
public:
  using Options = BasisOptions;

  BasisInstance(SpacePtr ambient, MatrixXcd basis_columns, std::vector<BasisLabel> labels,
                BasisOptions options = BasisOptions{});

  int dim() const { return static_cast<int>(columns_.cols()); }
  const Space& ambient() const { return *ambient_; }
  const SpacePtr& ambient_ptr() const { return ambient_; }
  const MatrixXcd& change_of_basis() const { return columns_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  bool is_hilbert() const { return ambient_->is_hilbert(); }

  CoeffVec to_reference(const CoeffVec& coeffs) const { return columns_ * coeffs; }
  double norm(const CoeffVec& coeffs) const { return ambient_->norm(columns_ * coeffs); }
  Complex inner(const CoeffVec& x, const CoeffVec& y) const {
    return ambient_->inner(columns_ * x, columns_ * y);
  }

  // Gram of the basis vectors, B^H G_amb B. Hilbert ambients only.
  const MatrixXcd& basis_gram() const;
  const MatrixXcd& basis_chol_lower() const;   // L with basis_gram = L L^H
  const Eigen::LLT<MatrixXcd>& basis_llt() const;

private:
  SpacePtr ambient_;
  MatrixXcd columns_;
  std::vector<BasisLabel> labels_;
  MatrixXcd gram_;
  MatrixXcd chol_;
  Eigen::LLT<MatrixXcd> llt_;
};

using BasisPtr = std::shared_ptr<const BasisInstance>;

// Identity basis of a space (reference coordinates themselves).
BasisPtr identity_basis(SpacePtr space);

// The first `count` basis vectors as a basis of their own span (ambient is
// the pullback of the original ambient). Norms of zero-padded vectors agree
// with the original basis exactly.
BasisPtr prefix_basis(const BasisInstance& basis, int count);

} // namespace qg

#endif
