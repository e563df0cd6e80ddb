#ifndef QG_GREEDY_HPP
#define QG_GREEDY_HPP

#include <cstdint>
#include <optional>

#include "qg/basis.hpp"
#include "qg/coeffs.hpp"
#include "qg/exec.hpp"

namespace qg {

// Greedy sets are non-unique when moduli tie; the policy picks either the
// deterministic ascending-index set or enumerates every valid set up to a cap.
struct TiePolicy {
  enum class Mode { ascending_index, enumerate_all };
  Mode mode = Mode::ascending_index;
  std::size_t budget = 10000;
};

// The deterministic greedy set: N largest moduli, ascending-index tie break.
SupportSet greedy_support(const CoeffVec& v, int count, double tol = 0.0);

// restrict(v, greedy_support(v, count)).
CoeffVec greedy_projection(const CoeffVec& v, int count, double tol = 0.0);

struct GreedySetFamily {
  std::vector<SupportSet> sets;
  bool truncated = false; // enumeration hit the policy budget
};

// Every valid greedy set of size min(count, |supp v|) under the policy.
GreedySetFamily greedy_sets(const CoeffVec& v, int count, const TiePolicy& policy,
                            double tol = 0.0);

enum class SamplerKind { gaussian, sign_flat, block_indicator, geometric_decay };

struct QgSampler {
  std::vector<SamplerKind> kinds = {SamplerKind::gaussian, SamplerKind::sign_flat,
                                    SamplerKind::block_indicator, SamplerKind::geometric_decay};
};

struct GreedyWitness {
  CoeffVec x;
  int count = 0; // the N at which the ratio was attained
  double ratio = 0.0;
};

// Lower estimates of the quasi-greedy constants: Khat for ||G_N x|| <= K ||x||,
// kappaHat additionally for ||x - G_N x|| <= kappa ||x||. Both are lower
// bounds only; finite sections cannot certify upper bounds.
struct GreedyReport {
  double k_hat = 1.0;
  double kappa_hat = 1.0;
  std::vector<GreedyWitness> witnesses; // projection witnesses; max ratio == k_hat
  GreedyWitness residual_witness;       // attains the residual part of kappa_hat
  long trials = 0;
  std::uint64_t seed = 0;
};

GreedyReport estimate_qg_constant(const BasisInstance& basis, const QgSampler& sampler,
                                  long trials, std::uint64_t seed, const Exec& exec = {});

struct NTermResult {
  double value = 0.0;
  SupportSet achieving;
  bool exact = false; // exhaustive outer search + exact inner minimization
};

// Best N-term approximation error sigma_N(v). Hilbert ambients solve the
// inner problem by the normal equations on the Gram subsystem and enumerate
// supports exhaustively while C(d,N) <= enum_budget; otherwise (and for
// general ambients) a greedy-start pairwise-swap local search is used and the
// result is flagged heuristic.
NTermResult best_nterm_error(const BasisInstance& basis, const CoeffVec& v, int count,
                             long enum_budget = 200000);

struct LebesgueRatio {
  double ratio = 0.0;
  bool defined = false;     // false when sigma_N(v) == 0
  bool sigma_exact = false; // whether the denominator came from the exact path
};

// ||v - G_N v|| / sigma_N(v) under the ascending-index policy.
LebesgueRatio lebesgue_ratio(const BasisInstance& basis, const CoeffVec& v, int count,
                             long enum_budget = 200000);

} // namespace qg

#endif
