#ifndef QG_SPACES_HPP
#define QG_SPACES_HPP

#include "qg/basis.hpp"
#include "qg/quadrature.hpp"
#include "qg/space.hpp"

namespace qg {

// Frequency of the j-th element (0-based) of the trigonometric enumeration
// {1, e^{it}, e^{-it}, e^{2it}, e^{-2it}, ...}.
inline long trig_frequency(int j) { return (j % 2 == 1) ? (j + 1) / 2 : -(j / 2); }

struct WeightedTrigBasis {
  std::shared_ptr<const GramSpace> space; // normalized Gram of the system
  BasisPtr basis;                         // identity columns with frequency labels
  double alpha = 0.0;                     // weight |t|^{-2 alpha}
  long maxfreq = 0;
  std::vector<double> weight_coeffs; // w_hat(0 .. 2 maxfreq), unnormalized
};

// The trigonometric system {e^{int}, |n| <= maxfreq} in L^2([-pi,pi], |t|^{-2 alpha} dt),
// normalized. Gram entry for frequencies (lambda, mu) is w_hat(mu - lambda) / w_hat(0);
// only the 2*maxfreq+1 distinct coefficients are computed.
WeightedTrigBasis gram_from_weighted_trig(double alpha, long maxfreq, const QuadConfig& quad = {},
                                          const Exec& exec = {});

// || sum_{|n|<=N} e^{int} ||_{L^2(|t|^gamma dt)} via the Gram quadratic form.
double dirichlet_weighted_norm(long n_max, double gamma, const QuadConfig& quad = {},
                               const Exec& exec = {});

// Pairwise-rotated basis over direct_sum(E.ambient, F.ambient):
//   x_{2k-1} = (e_k + f_k)/sqrt2,   x_{2k} = (e_k - f_k)/sqrt2.
BasisPtr rotated_pair_basis(const BasisInstance& e_basis, const BasisInstance& f_basis);

// Canonical basis of a finite l^p section (p = inf for the c_0 stand-in).
BasisPtr canonical_sequence_basis(int dim, double p);

} // namespace qg

#endif
