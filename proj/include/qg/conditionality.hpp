#ifndef QG_CONDITIONALITY_HPP
#define QG_CONDITIONALITY_HPP

#include <optional>
#include <string>

#include "qg/basis.hpp"
#include "qg/coeffs.hpp"
#include "qg/exec.hpp"
#include "qg/olevskii.hpp"
#include "qg/spaces.hpp"

namespace qg {

enum class WitnessMethod { exact_spectral, sign_partition, odd_block, olevskii_block, random_search };

std::string witness_method_name(WitnessMethod method);

// A certified lower bound on some ||S_A||: the pair (A, x) with the achieved
// ratio ||S_A x|| / ||x||, always recomputable from the stored data.
struct WitnessReport {
  SupportSet set;
  CoeffVec x;
  double ratio = 0.0;
  WitnessMethod method = WitnessMethod::random_search;
};

// ||S_A x|| / ||x|| in the basis norm (the quantity every witness certifies).
double witness_ratio(const BasisInstance& basis, const SupportSet& set, const CoeffVec& x);

struct ProjectionNorm {
  double value = 0.0;
  bool exact = false; // spectral (hilbert) vs certified lower bound (general)
  CoeffVec maximizer;
};

// ||S_A||. Hilbert ambient: sigma_max of the similarity L^H D_A L^{-H} via a
// Hermitian eigensolver on the d x d matrix. General ambient: sampled ratio
// maximization with coordinate-ascent refinement (lower bound, exact=false).
ProjectionNorm projection_norm(const BasisInstance& basis, const SupportSet& set,
                               std::uint64_t seed = 1);

struct KnExact {
  double value = 0.0;
  SupportSet argmax;
};

// Exact k_N = max over all subsets with 1 <= |A| <= N (every size enumerated;
// ||S_A|| is not monotone under inclusion). Refuses via budget_error when
// sum_{m<=N} C(d,m) exceeds subset_budget.
KnExact k_n_exact(const BasisInstance& basis, int count, double subset_budget,
                  const Exec& exec = {});

struct KnLowerOptions {
  long random_trials = 64;
  int ascent_sweeps = 5;
  int position_cap = 0; // >0: restrict witness supports to the first cap positions
};

struct KnRow {
  int count = 0;       // the N of k_N
  double lower = 0.0;  // best ratio found
  std::optional<double> exact;
  WitnessReport best;
  std::vector<WitnessReport> per_strategy;
};

KnRow k_n_lower(const BasisInstance& basis, int count,
                const std::vector<WitnessMethod>& strategies, std::uint64_t seed,
                const Exec& exec = {}, const KnLowerOptions& options = {});

struct SignSearchResult {
  WitnessReport witness;
  double mean_sq_norm = 0.0; // sample mean of ||sum eps_n e^{int}||^2 (normalized basis)
  double min_sq_norm = 0.0;
  long trials = 0;
};

// Proposition-style witness on the weighted trigonometric system: random sign
// vectors over frequencies |n| <= N, keep the one of least norm, return the
// half of the induced partition carrying at least half the Dirichlet norm.
SignSearchResult sign_partition_witness(const WeightedTrigBasis& trig, long freq_count,
                                        long trials, std::uint64_t seed, const Exec& exec = {});

struct DemocracyRow {
  int count = 0;
  double sup_est = 0.0;
  double inf_est = 0.0;
};

// max / min of ||1_Lambda|| over random and structured Lambda of each size.
std::vector<DemocracyRow> democracy_profile(const BasisInstance& basis,
                                            const std::vector<int>& sizes, long trials,
                                            std::uint64_t seed, const Exec& exec = {});

struct KnhResult {
  WitnessReport witness; // over psi coordinates; method olevskii_block
  KnRow inner;           // the inner-basis witness it was lifted from
  long m_target = 0;     // the M of k_M(Psi)
  int level = 0;         // N = ceil(log2 M)
};

// Lifts an inner k_N witness through the block construction: Lambda is the
// union of the full psi-blocks over the inner witness set, x is the witness
// expanded via x_k = 2^{-k/2} sum_l psi_{k,l}.
KnhResult knh_witness(const OlevskiiBasis& olevskii, long m_target,
                      const std::vector<WitnessMethod>& inner_strategies, std::uint64_t seed,
                      const Exec& exec = {});

} // namespace qg

#endif
