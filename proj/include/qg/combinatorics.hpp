#ifndef QG_COMBINATORICS_HPP
#define QG_COMBINATORICS_HPP

#include <algorithm>
#include <vector>

namespace qg {

// Advances a sorted m-combination of {0,...,n-1} to its lexicographic
// successor; returns false after the last one.
inline bool next_combination(std::vector<int>& comb, int n) {
  const int m = static_cast<int>(comb.size());
  for (int i = m - 1; i >= 0; --i) {
    if (comb[i] < n - m + i) {
      ++comb[i];
      for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<int> first_combination(int m) {
  std::vector<int> comb(m);
  for (int i = 0; i < m; ++i) comb[i] = i;
  return comb;
}

// C(n,m) in double precision (saturates to inf for huge counts, which is all
// the budget checks need).
inline double binomial_double(int n, int m) {
  if (m < 0 || m > n) return 0.0;
  m = std::min(m, n - m);
  double result = 1.0;
  for (int i = 1; i <= m; ++i) result *= static_cast<double>(n - m + i) / static_cast<double>(i);
  return result;
}

// sum_{m=1..count} C(dim,m).
inline double subsets_up_to(int dim, int count) {
  double total = 0.0;
  for (int m = 1; m <= count && m <= dim; ++m) total += binomial_double(dim, m);
  return total;
}

} // namespace qg

#endif
