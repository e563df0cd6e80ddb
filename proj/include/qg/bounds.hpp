#ifndef QG_BOUNDS_HPP
#define QG_BOUNDS_HPP

#include <utility>
#include <vector>

#include "qg/coeffs.hpp"
#include "qg/space.hpp"

namespace qg {

// delta(K) = sqrt(1 - 1/K^2); the near-orthogonality defect of a quasi-greedy
// basis with constant K.
double delta_of_k(double k_const);

enum class ExponentBranch { first, second, besselian, p_case_i, p_case_ii };

struct ExponentReport {
  double alpha = 0.0;
  double delta = 0.0; // delta(K) in the hilbert case
  double c_p = 0.0;   // c_p(kappa) in the L^p case
  ExponentBranch branch = ExponentBranch::first;
  double alpha_besselian = 0.0; // hilbert case only
  // 1 - alpha computed in full precision; strictly positive even where the
  // rounded alpha itself would collapse to 1.0 (huge kappa*p grids).
  double one_minus_alpha = 1.0;
};

// alpha(K) = (1/2) min{ log2((1+d)/(1-d)), 1 + log2(1+d) }, d = delta(K);
// the first branch wins for d <= 1/2. The besselian variant is
// (1/2) log2(1+d) < 1/2.
ExponentReport alpha_of_k(double k_const);

struct PairCheck {
  double lower_slack = 0.0; // ||x+y||^2 - (1-delta)(...)
  double upper_slack = 0.0; // (1+delta)(...) - ||x+y||^2
  double r = 0.0;           // 2|<x,y>| / (||x||^2 + ||y||^2)
};

// The two-sided near-parallelogram inequality for a dominated pair x >= y.
PairCheck pair_inequality_check(const Space& space, const CoeffVec& x, const CoeffVec& y,
                                double delta);

struct KLowerResult {
  double k_lower = 1.0;
  std::size_t witness_pair = 0;
};

// Inverts 2|<x,y>| <= sqrt(1-1/K^2)(||x||^2+||y||^2): K >= (1-r^2)^{-1/2}.
KLowerResult infer_k_lower_from_pairs(const Space& space,
                                      const std::vector<std::pair<CoeffVec, CoeffVec>>& pairs);

// Envelope (1 -+ delta)^{ceil(log2 m)} * sum of squared norms for chains of m
// successively dominating vectors.
std::pair<double, double> lemma_l2_envelope(const std::vector<double>& norms_sq, double delta);

// Checks an actual chain against the envelope; returns (lower, actual, upper).
struct EnvelopeCheck {
  double lower = 0.0;
  double actual = 0.0;
  double upper = 0.0;
  bool inside = false;
};
EnvelopeCheck lemma_l2_envelope_check(const Space& space, const std::vector<CoeffVec>& chain,
                                      double delta);

// c_p of the L^p pair inequality: 2 - (p-1)/(2 kappa^2) for 1 < p <= 2,
// 2^{p-1} - 1/(2 kappa^p) for p >= 2 (both branches agree at p = 2).
double c_p_const(double p, double kappa);

// alpha(kappa,p): (1 + log2 c_p)/2 for p <= 2, (1 + log2 c_p)/p for p >= 2;
// < 1 in both cases.
ExponentReport alpha_p(double p, double kappa);

struct ParallelogramCheck {
  double slack = 0.0; // >= 0 when the inequality holds
  ExponentBranch branch = ExponentBranch::p_case_i;
};

// Bynum-Drew (p <= 2) / Clarkson (p >= 2) weak parallelogram laws.
ParallelogramCheck weak_parallelogram_check(double p, const CoeffVec& x, const CoeffVec& y,
                                            const SequenceSpace& space);

} // namespace qg

#endif
