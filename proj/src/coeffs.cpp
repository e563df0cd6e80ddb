#include "qg/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qg {

SupportSet SupportSet::from_indices(std::vector<int> indices, int dim) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] >= 0 && indices[i] < dim, "support index out of range");
    require(i == 0 || indices[i] != indices[i - 1], "duplicate support index");
  }
  SupportSet s;
  s.idx_ = std::move(indices);
  return s;
}

SupportSet SupportSet::full(int dim) {
  SupportSet s;
  s.idx_.resize(dim);
  for (int j = 0; j < dim; ++j) s.idx_[j] = j;
  return s;
}

bool SupportSet::contains(int j) const {
  return std::binary_search(idx_.begin(), idx_.end(), j);
}

SupportSet SupportSet::complement(int dim) const {
  SupportSet s;
  s.idx_.reserve(dim - size());
  std::size_t p = 0;
  for (int j = 0; j < dim; ++j) {
    if (p < idx_.size() && idx_[p] == j) {
      ++p;
    } else {
      s.idx_.push_back(j);
    }
  }
  return s;
}

SupportSet support(const CoeffVec& v, double tol) {
  require(tol >= 0.0, "support tolerance must be nonnegative");
  std::vector<int> idx;
  for (int j = 0; j < v.size(); ++j) {
    if (std::abs(v[j]) > tol) idx.push_back(j);
  }
  return SupportSet::from_indices(std::move(idx), static_cast<int>(v.size()));
}

CoeffVec restrict_to(const CoeffVec& v, const SupportSet& a) {
  CoeffVec out = CoeffVec::Zero(v.size());
  for (int j : a) {
    require(j < v.size(), "restriction index out of range");
    out[j] = v[j];
  }
  return out;
}

bool dominates(const CoeffVec& x, const CoeffVec& y, double tol) {
  require(x.size() == y.size(), "dominates: dimension mismatch");
  double min_x = std::numeric_limits<double>::infinity();
  double max_y = 0.0;
  for (int j = 0; j < x.size(); ++j) {
    const double ax = std::abs(x[j]);
    const double ay = std::abs(y[j]);
    if (ax > tol && ay > tol) return false; // overlapping supports
    if (ax > tol) min_x = std::min(min_x, ax);
    if (ay > tol) max_y = std::max(max_y, ay);
  }
  return min_x >= max_y;
}

} // namespace qg
