#include "qg/space.hpp"

#include <cmath>

#include "qg/rng.hpp"

namespace qg {

Complex Space::inner(const CoeffVec&, const CoeffVec&) const {
  throw validation_error("inner product is defined only for hilbert spaces");
}

MatrixXcd Space::gram_matrix() const {
  throw validation_error("gram matrix is defined only for hilbert spaces");
}

namespace {

// Power/inverse iteration condition estimate off the finished factorization.
double estimate_condition(const MatrixXcd& gram, const Eigen::LLT<MatrixXcd>& llt) {
  const int d = static_cast<int>(gram.rows());
  Rng rng(0x9d2c5680u);
  VectorXcd v(d);
  for (int i = 0; i < d; ++i) v[i] = rng.cnormal();
  v.normalize();
  double lambda_max = 1.0;
  for (int it = 0; it < 30; ++it) {
    VectorXcd w = gram * v;
    lambda_max = w.norm();
    if (lambda_max == 0.0) return 1.0;
    v = w / lambda_max;
  }
  VectorXcd u(d);
  for (int i = 0; i < d; ++i) u[i] = rng.cnormal();
  u.normalize();
  double inv_lambda_min = 1.0;
  for (int it = 0; it < 30; ++it) {
    VectorXcd w = llt.solve(u);
    inv_lambda_min = w.norm();
    if (inv_lambda_min == 0.0) return 1.0;
    u = w / inv_lambda_min;
  }
  return lambda_max * inv_lambda_min;
}

} // namespace

GramSpace::GramSpace(MatrixXcd gram)
    : Space(static_cast<int>(gram.rows()), Kind::hilbert), gram_(std::move(gram)) {
  require(gram_.rows() == gram_.cols(), "gram matrix must be square");
  const double scale = std::max(1.0, gram_.cwiseAbs().maxCoeff());
  const double herm_dev = (gram_ - gram_.adjoint()).cwiseAbs().maxCoeff();
  require(herm_dev <= 1e-12 * scale, "gram matrix is not Hermitian");
  gram_ = 0.5 * (gram_ + gram_.adjoint().eval()); // exact Hermitian symmetrization

  Eigen::LLT<MatrixXcd> llt(gram_);
  if (llt.info() != Eigen::Success) {
    throw validation_error("gram matrix is not positive definite");
  }
  chol_ = llt.matrixL();
  chol_inv_ = chol_.triangularView<Eigen::Lower>().solve(
      MatrixXcd::Identity(gram_.rows(), gram_.cols()));
  condition_estimate_ = estimate_condition(gram_, llt);
}

double GramSpace::norm(const CoeffVec& v) const {
  check_dim(v);
  return (chol_.adjoint() * v).norm();
}

Complex GramSpace::inner(const CoeffVec& x, const CoeffVec& y) const {
  check_dim(x);
  check_dim(y);
  return y.dot(gram_ * x); // Eigen's dot conjugates its callee: <x,y> = y^H (G x)
}

SequenceSpace::SequenceSpace(int dim, double p) : Space(dim, p == 2.0 ? Kind::hilbert : Kind::general), p_(p) {
  require(p >= 1.0, "sequence space needs p >= 1");
}

double SequenceSpace::norm(const CoeffVec& v) const {
  check_dim(v);
  if (std::isinf(p_)) return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  if (p_ == 2.0) return v.norm();
  if (p_ == 1.0) return v.cwiseAbs().sum();
  return std::pow(v.cwiseAbs().array().pow(p_).sum(), 1.0 / p_);
}

Complex SequenceSpace::inner(const CoeffVec& x, const CoeffVec& y) const {
  if (p_ != 2.0) return Space::inner(x, y);
  check_dim(x);
  check_dim(y);
  return y.dot(x);
}

MatrixXcd SequenceSpace::gram_matrix() const {
  if (p_ != 2.0) return Space::gram_matrix();
  return MatrixXcd::Identity(dim(), dim());
}

namespace {

int total_dim(const std::vector<SpacePtr>& parts) {
  require(!parts.empty(), "direct sum needs at least one part");
  int d = 0;
  for (const auto& part : parts) {
    require(part != nullptr, "direct sum part is null");
    d += part->dim();
  }
  return d;
}

Space::Kind joint_kind(const std::vector<SpacePtr>& parts) {
  for (const auto& part : parts) {
    if (!part->is_hilbert()) return Space::Kind::general;
  }
  return Space::Kind::hilbert;
}

} // namespace

DirectSum::DirectSum(std::vector<SpacePtr> parts)
    : Space(total_dim(parts), joint_kind(parts)), parts_(std::move(parts)) {
  offsets_.resize(parts_.size());
  int off = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    offsets_[i] = off;
    off += parts_[i]->dim();
  }
}

double DirectSum::norm(const CoeffVec& v) const {
  check_dim(v);
  double sumsq = 0.0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const double part_norm = parts_[i]->norm(v.segment(offsets_[i], parts_[i]->dim()));
    sumsq += part_norm * part_norm;
  }
  return std::sqrt(sumsq);
}

Complex DirectSum::inner(const CoeffVec& x, const CoeffVec& y) const {
  require(is_hilbert(), "inner product is defined only for hilbert spaces");
  check_dim(x);
  check_dim(y);
  Complex total = 0.0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    total += parts_[i]->inner(x.segment(offsets_[i], parts_[i]->dim()),
                              y.segment(offsets_[i], parts_[i]->dim()));
  }
  return total;
}

MatrixXcd DirectSum::gram_matrix() const {
  require(is_hilbert(), "gram matrix is defined only for hilbert spaces");
  MatrixXcd g = MatrixXcd::Zero(dim(), dim());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    g.block(offsets_[i], offsets_[i], parts_[i]->dim(), parts_[i]->dim()) =
        parts_[i]->gram_matrix();
  }
  return g;
}

SpacePtr direct_sum(std::vector<SpacePtr> parts) {
  return std::make_shared<DirectSum>(std::move(parts));
}

PullbackSpace::PullbackSpace(SpacePtr target, MatrixXcd map)
    : Space(static_cast<int>(map.cols()), target ? target->kind() : Space::Kind::general),
      target_(std::move(target)),
      map_(std::move(map)) {
  require(target_ != nullptr, "pullback target is null");
  require(static_cast<int>(map_.rows()) == target_->dim(), "pullback map has wrong row count");
}

double PullbackSpace::norm(const CoeffVec& v) const {
  check_dim(v);
  return target_->norm(map_ * v);
}

Complex PullbackSpace::inner(const CoeffVec& x, const CoeffVec& y) const {
  check_dim(x);
  check_dim(y);
  return target_->inner(map_ * x, map_ * y);
}

MatrixXcd PullbackSpace::gram_matrix() const {
  return map_.adjoint() * target_->gram_matrix() * map_;
}

} // namespace qg
