#include "qg/basis.hpp"

#include <cmath>

#include <Eigen/LU>

namespace qg {

BasisInstance::BasisInstance(SpacePtr ambient, MatrixXcd basis_columns,
                             std::vector<BasisLabel> labels, BasisOptions options)
    : ambient_(std::move(ambient)), columns_(std::move(basis_columns)), labels_(std::move(labels)) {
  require(ambient_ != nullptr, "basis ambient is null");
  require(columns_.rows() == ambient_->dim(), "basis columns do not match ambient dimension");
  require(columns_.rows() == columns_.cols(), "change-of-basis matrix must be square");
  require(labels_.empty() || static_cast<int>(labels_.size()) == dim(),
          "label count must match basis dimension");
  if (labels_.empty()) labels_.resize(dim());

  if (options.check_invertible) {
    Eigen::PartialPivLU<MatrixXcd> lu(columns_);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-14)) {
      throw validation_error("change-of-basis matrix is numerically singular");
    }
  }

  if (ambient_->is_hilbert()) {
    const MatrixXcd amb_gram = ambient_->gram_matrix();
    gram_ = columns_.adjoint() * amb_gram * columns_;
    gram_ = 0.5 * (gram_ + gram_.adjoint().eval());
    llt_.compute(gram_);
    if (llt_.info() != Eigen::Success) {
      throw validation_error("basis gram matrix is not positive definite");
    }
    chol_ = llt_.matrixL();
    if (options.check_normalized) {
      for (int j = 0; j < dim(); ++j) {
        require(std::abs(std::sqrt(std::abs(gram_(j, j))) - 1.0) <= 1e-9,
                "basis column is not normalized");
      }
    }
  } else if (options.check_normalized) {
    for (int j = 0; j < dim(); ++j) {
      require(std::abs(ambient_->norm(columns_.col(j)) - 1.0) <= 1e-9,
              "basis column is not normalized");
    }
  }
}

const MatrixXcd& BasisInstance::basis_gram() const {
  require(is_hilbert(), "basis gram requires a hilbert ambient");
  return gram_;
}

const MatrixXcd& BasisInstance::basis_chol_lower() const {
  require(is_hilbert(), "basis cholesky requires a hilbert ambient");
  return chol_;
}

const Eigen::LLT<MatrixXcd>& BasisInstance::basis_llt() const {
  require(is_hilbert(), "basis cholesky requires a hilbert ambient");
  return llt_;
}

BasisPtr identity_basis(SpacePtr space) {
  require(space != nullptr, "identity_basis: null space");
  const int d = space->dim();
  std::vector<BasisLabel> labels(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) labels[static_cast<std::size_t>(j)].text = "e" + std::to_string(j);
  BasisInstance::Options options;
  options.check_invertible = false; // identity
  return std::make_shared<BasisInstance>(std::move(space), MatrixXcd::Identity(d, d),
                                         std::move(labels), options);
}

BasisPtr prefix_basis(const BasisInstance& basis, int count) {
  require(count >= 1 && count <= basis.dim(), "prefix_basis: count out of range");
  SpacePtr span = std::make_shared<PullbackSpace>(basis.ambient_ptr(),
                                                  basis.change_of_basis().leftCols(count));
  std::vector<BasisLabel> labels(basis.labels().begin(), basis.labels().begin() + count);
  BasisInstance::Options options;
  options.check_invertible = false; // identity columns over the span
  return std::make_shared<BasisInstance>(std::move(span), MatrixXcd::Identity(count, count),
                                         std::move(labels), options);
}

} // namespace qg
