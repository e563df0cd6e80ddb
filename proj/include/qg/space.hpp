#ifndef QG_SPACE_HPP
#define QG_SPACE_HPP

#include <memory>
#include <vector>

#include <Eigen/Cholesky>

#include "qg/coeffs.hpp"
#include "qg/common.hpp"

namespace qg {

// Normed-space contract over reference coordinates. Implementations are
// immutable after construction and safe to share across threads.
class Space {
public:
  enum class Kind { hilbert, general };

  Space(int dim, Kind kind) : dim_(dim), kind_(kind) { require(dim > 0, "space dim must be positive"); }
  virtual ~Space() = default;

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  bool is_hilbert() const { return kind_ == Kind::hilbert; }

  virtual double norm(const CoeffVec& v) const = 0;

  // <x,y>, linear in x, conjugate-linear in y. Hilbert spaces only.
  virtual Complex inner(const CoeffVec& x, const CoeffVec& y) const;

  // Gram matrix of the reference coordinates. Hilbert spaces only.
  virtual MatrixXcd gram_matrix() const;

protected:
  void check_dim(const CoeffVec& v) const {
    require(static_cast<int>(v.size()) == dim_, "coefficient vector has wrong dimension");
  }

private:
  int dim_;
  Kind kind_;
};

using SpacePtr = std::shared_ptr<const Space>;

// Hilbert space defined by a Hermitian positive-definite Gram matrix G,
// norm(v)^2 = v^H G v, evaluated through the Cholesky factor G = L L^H.
class GramSpace : public Space {
public:
  explicit GramSpace(MatrixXcd gram);

  double norm(const CoeffVec& v) const override;
  Complex inner(const CoeffVec& x, const CoeffVec& y) const override;
  MatrixXcd gram_matrix() const override { return gram_; }

  const MatrixXcd& gram() const { return gram_; }
  const MatrixXcd& chol_lower() const { return chol_; }
  const MatrixXcd& chol_inv() const { return chol_inv_; }
  double condition_estimate() const { return condition_estimate_; }

private:
  MatrixXcd gram_;
  MatrixXcd chol_;     // lower-triangular L
  MatrixXcd chol_inv_; // L^{-1}
  double condition_estimate_ = 1.0;
};

// Finite section of an l^p space (p = inf encodes the sup norm used as the
// finite-dimensional stand-in for c_0).
class SequenceSpace : public Space {
public:
  SequenceSpace(int dim, double p);

  double p() const { return p_; }
  double norm(const CoeffVec& v) const override;
  Complex inner(const CoeffVec& x, const CoeffVec& y) const override;
  MatrixXcd gram_matrix() const override;

private:
  double p_;
};

// l^2-direct sum: norm(v)^2 = sum of squared part norms over a partition of
// the coordinates. Hilbert iff every part is.
class DirectSum : public Space {
public:
  explicit DirectSum(std::vector<SpacePtr> parts);

  int part_count() const { return static_cast<int>(parts_.size()); }
  const SpacePtr& part(int i) const { return parts_[i]; }
  int offset(int i) const { return offsets_[i]; }

  double norm(const CoeffVec& v) const override;
  Complex inner(const CoeffVec& x, const CoeffVec& y) const override;
  MatrixXcd gram_matrix() const override;

private:
  std::vector<SpacePtr> parts_;
  std::vector<int> offsets_;
};

SpacePtr direct_sum(std::vector<SpacePtr> parts);

// Norms of a subspace seen through a linear map into a target space:
// norm(v) = target_norm(map * v). Models the span of a basis prefix.
class PullbackSpace : public Space {
public:
  PullbackSpace(SpacePtr target, MatrixXcd map);

  double norm(const CoeffVec& v) const override;
  Complex inner(const CoeffVec& x, const CoeffVec& y) const override;
  MatrixXcd gram_matrix() const override;

private:
  SpacePtr target_;
  MatrixXcd map_;
};

} // namespace qg

#endif
