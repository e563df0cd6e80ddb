#ifndef QG_COEFFS_HPP
#define QG_COEFFS_HPP

#include <vector>

#include "qg/common.hpp"

namespace qg {

// Dense complex coefficient array over 0-based basis positions.
using CoeffVec = VectorXcd;

// Sorted duplicate-free set of basis positions, all < dim of the owning basis.
class SupportSet {
public:
  SupportSet() = default;

  // Validates: sorts, rejects duplicates and indices outside [0, dim).
  static SupportSet from_indices(std::vector<int> indices, int dim);

  // All of [0, dim).
  static SupportSet full(int dim);

  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }
  const std::vector<int>& indices() const { return idx_; }
  bool contains(int j) const;
  SupportSet complement(int dim) const;

  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  friend bool operator==(const SupportSet& a, const SupportSet& b) { return a.idx_ == b.idx_; }
  // Lexicographic; used as the deterministic tie-break in parallel reductions.
  friend bool operator<(const SupportSet& a, const SupportSet& b) { return a.idx_ < b.idx_; }

private:
  std::vector<int> idx_;
};

// Indices with |entry| > tol.
SupportSet support(const CoeffVec& v, double tol = 0.0);

// Entries in A copied, all others zero. Rejects indices outside v's range.
CoeffVec restrict_to(const CoeffVec& v, const SupportSet& a);

// Definition of the >= ordering on vectors: disjoint supports (at tol) and
// every nonzero modulus of x at least every modulus of y.
bool dominates(const CoeffVec& x, const CoeffVec& y, double tol = 0.0);

} // namespace qg

#endif
