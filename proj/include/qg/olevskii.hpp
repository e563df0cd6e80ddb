#ifndef QG_OLEVSKII_HPP
#define QG_OLEVSKII_HPP

#include <utility>

#include "qg/basis.hpp"
#include "qg/coeffs.hpp"

namespace qg {

// Index bookkeeping for the block construction: n_1 = 0, n_{k+1} = n_k + 2^k - 1;
// block k couples x_k with e_{n_k+1}, ..., e_{n_{k+1}} and carries 2^k psi vectors.
struct BlockLayout {
  int kmax = 0;
  std::vector<long> n; // n[k], k = 1..kmax+1 (index 0 unused)

  int block_size(int k) const { return 1 << k; }
  long e_dim() const { return n[static_cast<std::size_t>(kmax) + 1]; }
  long psi_dim() const { return (1L << (kmax + 1)) - 2; }

  // Global psi index of psi_{k,l} (l is 1-based inside block k).
  long psi_index(int k, int l) const { return (1L << k) - 2 + (l - 1); }
  // Inverse map.
  std::pair<int, int> block_of(long psi_idx) const;
  // 1-based index of the l^2 coordinate carrying g_{k,m}, m = 2..2^k.
  long e_index(int k, int m) const { return n[static_cast<std::size_t>(k)] + m - 1; }
};

BlockLayout block_layout(int kmax);

// Discrete Haar orthogonal matrix: columns h_0, ..., h_{2^k-1} with h_0 = 2^{-k/2}.
struct HaarMatrix {
  int k = 0;
  MatrixXd entries; // 2^k x 2^k
};

HaarMatrix haar_matrix(int k);

// The assembled quasi-greedy system Psi over span{x_1..x_kmax} + l^2 section.
// Reference coordinates: kmax inner-prefix coefficients, then e_1..e_{n_{kmax+1}}.
struct OlevskiiBasis {
  BasisPtr inner; // the original inner basis (dimension >= kmax)
  BlockLayout layout;
  BasisPtr psi;
};

OlevskiiBasis olevskii_basis(BasisPtr inner, int kmax);

// Decomposition of psi-coefficients c_{k,l} = 2^{-k/2} lambda_k + eta_{k,l}:
// lambda_k carries the x_k component, eta the l^2 block component.
struct ComponentSplit {
  VectorXcd lambda; // size kmax, entry k-1 for block k
  VectorXcd eta;    // psi-indexed
};

ComponentSplit project_components(const OlevskiiBasis& basis, const CoeffVec& v);

// Left: squared l^2-part norm of sum_{l in block_subset} psi_{k,l}; right: the
// closed form |Lambda_k| (1 - 2^{-k} |Lambda_k|). block_subset holds 0-based
// in-block positions (l-1).
std::pair<double, double> verify_bonek(const OlevskiiBasis& basis, int k,
                                       const SupportSet& block_subset);

// Psi-coefficients of sum_k a_k x_k via x_k = 2^{-k/2} sum_l psi_{k,l}.
// Rejects coefficients beyond the first kmax inner positions.
CoeffVec lift_to_psi(const OlevskiiBasis& basis, const CoeffVec& inner_coeffs);

} // namespace qg

#endif
