#include "qg/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qg/combinatorics.hpp"
#include "qg/rng.hpp"

namespace qg {

namespace {

// Support indices ordered by modulus descending, index ascending on ties.
std::vector<int> greedy_order(const CoeffVec& v, double tol) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(v.size()));
  for (int j = 0; j < v.size(); ++j) {
    if (std::abs(v[j]) > tol) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&v](int a, int b) { return std::abs(v[a]) > std::abs(v[b]); });
  return order;
}

} // namespace

SupportSet greedy_support(const CoeffVec& v, int count, double tol) {
  require(count >= 0 && count <= v.size(), "greedy: N out of range");
  std::vector<int> order = greedy_order(v, tol);
  const int take = std::min<int>(count, static_cast<int>(order.size()));
  order.resize(static_cast<std::size_t>(take));
  return SupportSet::from_indices(std::move(order), static_cast<int>(v.size()));
}

CoeffVec greedy_projection(const CoeffVec& v, int count, double tol) {
  return restrict_to(v, greedy_support(v, count, tol));
}

GreedySetFamily greedy_sets(const CoeffVec& v, int count, const TiePolicy& policy, double tol) {
  require(count >= 0 && count <= v.size(), "greedy: N out of range");
  GreedySetFamily family;
  if (policy.mode == TiePolicy::Mode::ascending_index) {
    family.sets.push_back(greedy_support(v, count, tol));
    return family;
  }

  const std::vector<int> order = greedy_order(v, tol);
  const int take = std::min<int>(count, static_cast<int>(order.size()));
  if (take == 0) {
    family.sets.push_back(SupportSet::from_indices({}, static_cast<int>(v.size())));
    return family;
  }

  // Indices strictly above the boundary modulus are forced; the remaining
  // slots range over the tied group.
  const double boundary = std::abs(v[order[static_cast<std::size_t>(take) - 1]]);
  std::vector<int> forced;
  std::vector<int> tied;
  for (int j : order) {
    const double mod = std::abs(v[j]);
    if (mod > boundary) {
      forced.push_back(j);
    } else if (mod == boundary) {
      tied.push_back(j);
    }
  }
  const int slots = take - static_cast<int>(forced.size());
  std::sort(tied.begin(), tied.end());

  std::vector<int> comb = first_combination(slots);
  do {
    std::vector<int> indices = forced;
    for (int c : comb) indices.push_back(tied[static_cast<std::size_t>(c)]);
    family.sets.push_back(SupportSet::from_indices(std::move(indices), static_cast<int>(v.size())));
    if (family.sets.size() >= policy.budget) {
      family.truncated = next_combination(comb, static_cast<int>(tied.size()));
      return family;
    }
  } while (next_combination(comb, static_cast<int>(tied.size())));
  return family;
}

namespace {

CoeffVec sample_vector(SamplerKind kind, int dim, Rng& rng) {
  CoeffVec x = CoeffVec::Zero(dim);
  switch (kind) {
    case SamplerKind::gaussian:
      for (int j = 0; j < dim; ++j) x[j] = rng.cnormal();
      break;
    case SamplerKind::sign_flat:
      for (int j = 0; j < dim; ++j) x[j] = static_cast<double>(rng.sign());
      break;
    case SamplerKind::block_indicator: {
      const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)));
      const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(dim - len + 1)));
      for (int j = start; j < start + len; ++j) x[j] = 1.0;
      break;
    }
    case SamplerKind::geometric_decay: {
      // Random dyadic levels, mimicking the F_l modulus shells.
      const int levels = std::max(2, static_cast<int>(std::ceil(std::log2(dim + 1))));
      for (int j = 0; j < dim; ++j) {
        const int level = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(levels)));
        x[j] = rng.unit_phase() * std::pow(2.0, -level);
      }
      break;
    }
  }
  return x;
}

struct TrialOutcome {
  double best_ratio = 0.0;
  int best_count = 0;
  double best_residual = 0.0;
  int best_residual_count = 0;
};

// Scans every greedy prefix of x (ascending-index policy) and records the
// largest projection and residual ratios. O(d^2) per trial.
TrialOutcome scan_prefixes(const BasisInstance& basis, const CoeffVec& x) {
  TrialOutcome outcome;
  const int dim = basis.dim();
  const std::vector<int> order = greedy_order(x, 0.0);
  if (order.empty()) return outcome;

  if (basis.is_hilbert()) {
    const MatrixXcd& gram = basis.basis_gram();
    const CoeffVec gram_x = gram * x;
    const double norm_sq = std::max(0.0, std::real(x.dot(gram_x)));
    if (norm_sq <= 0.0) return outcome;

    CoeffVec gram_prefix = CoeffVec::Zero(dim); // gram * (current prefix)
    double prefix_sq = 0.0;
    Complex cross = 0.0; // <prefix, x>_gram
    for (std::size_t step = 0; step < order.size(); ++step) {
      const int j = order[step];
      const Complex c = x[j];
      prefix_sq += std::norm(c) * std::real(gram(j, j)) + 2.0 * std::real(std::conj(c) * gram_prefix[j]);
      gram_prefix += c * gram.col(j);
      cross += std::conj(c) * gram_x[j];

      double ratio_sq;
      double residual_sq;
      if (step + 1 == order.size()) {
        ratio_sq = 1.0; // the full greedy prefix is x itself
        residual_sq = 0.0;
      } else {
        ratio_sq = std::max(0.0, prefix_sq) / norm_sq;
        residual_sq = std::max(0.0, norm_sq - 2.0 * std::real(cross) + prefix_sq) / norm_sq;
      }
      const int count = static_cast<int>(step) + 1;
      if (ratio_sq > outcome.best_ratio * outcome.best_ratio) {
        outcome.best_ratio = std::sqrt(ratio_sq);
        outcome.best_count = count;
      }
      if (residual_sq > outcome.best_residual * outcome.best_residual) {
        outcome.best_residual = std::sqrt(residual_sq);
        outcome.best_residual_count = count;
      }
    }
    return outcome;
  }

  const MatrixXcd& columns = basis.change_of_basis();
  const Space& ambient = basis.ambient();
  const double norm_x = ambient.norm(columns * x);
  if (norm_x <= 0.0) return outcome;

  CoeffVec ref_prefix = CoeffVec::Zero(ambient.dim());
  CoeffVec ref_residual = columns * x;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const int j = order[step];
    ref_prefix += x[j] * columns.col(j);
    ref_residual -= x[j] * columns.col(j);
    double ratio;
    double residual;
    if (step + 1 == order.size()) {
      ratio = 1.0;
      residual = 0.0;
    } else {
      ratio = ambient.norm(ref_prefix) / norm_x;
      residual = ambient.norm(ref_residual) / norm_x;
    }
    const int count = static_cast<int>(step) + 1;
    if (ratio > outcome.best_ratio) {
      outcome.best_ratio = ratio;
      outcome.best_count = count;
    }
    if (residual > outcome.best_residual) {
      outcome.best_residual = residual;
      outcome.best_residual_count = count;
    }
  }
  return outcome;
}

} // namespace

GreedyReport estimate_qg_constant(const BasisInstance& basis, const QgSampler& sampler,
                                  long trials, std::uint64_t seed, const Exec& exec) {
  require(trials >= 1, "estimate_qg_constant: trials must be >= 1");
  require(!sampler.kinds.empty(), "estimate_qg_constant: no samplers configured");

  const int dim = basis.dim();
  auto trial_vector = [&](long t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), 0x51));
    return sample_vector(sampler.kinds[static_cast<std::size_t>(t) % sampler.kinds.size()], dim,
                         rng);
  };

  std::vector<TrialOutcome> outcomes;
  fill_indexed(exec, outcomes, trials,
               [&](std::int64_t t) { return scan_prefixes(basis, trial_vector(t)); });

  GreedyReport report;
  report.trials = trials;
  report.seed = seed;

  // Deterministic reduction in trial order; ties keep the earliest trial.
  long best_trial = -1;
  long best_residual_trial = -1;
  double best_ratio = 0.0;
  double best_residual = 0.0;
  for (long t = 0; t < trials; ++t) {
    const TrialOutcome& outcome = outcomes[static_cast<std::size_t>(t)];
    if (outcome.best_ratio > best_ratio) {
      best_ratio = outcome.best_ratio;
      best_trial = t;
    }
    if (outcome.best_residual > best_residual) {
      best_residual = outcome.best_residual;
      best_residual_trial = t;
    }
  }

  if (best_trial >= 0) {
    const TrialOutcome& outcome = outcomes[static_cast<std::size_t>(best_trial)];
    report.k_hat = outcome.best_ratio;
    report.witnesses.push_back(
        GreedyWitness{trial_vector(best_trial), outcome.best_count, outcome.best_ratio});
  }
  if (best_residual_trial >= 0) {
    const TrialOutcome& outcome = outcomes[static_cast<std::size_t>(best_residual_trial)];
    report.residual_witness = GreedyWitness{trial_vector(best_residual_trial),
                                            outcome.best_residual_count, outcome.best_residual};
  }
  report.kappa_hat = std::max(report.k_hat, best_residual);
  return report;
}

namespace {

// Squared inner-minimized error over a fixed support (normal equations).
double nterm_error_sq_normal(const MatrixXcd& gram, const CoeffVec& gram_v, double norm_sq,
                             const std::vector<int>& spt) {
  const int m = static_cast<int>(spt.size());
  if (m == 0) return norm_sq;
  MatrixXcd sub(m, m);
  VectorXcd rhs(m);
  for (int a = 0; a < m; ++a) {
    rhs[a] = gram_v[spt[static_cast<std::size_t>(a)]];
    for (int b = 0; b < m; ++b) {
      sub(a, b) = gram(spt[static_cast<std::size_t>(a)], spt[static_cast<std::size_t>(b)]);
    }
  }
  const VectorXcd coeffs = sub.ldlt().solve(rhs);
  return std::max(0.0, norm_sq - std::real(rhs.dot(coeffs)));
}

// Inner minimization by coordinate descent on the ambient norm; used for
// general ambients where no normal equations exist. Convex but possibly
// non-smooth, so this is only a heuristic upper bound.
double nterm_error_general(const BasisInstance& basis, const CoeffVec& v,
                           const std::vector<int>& spt, int sweeps = 12) {
  const MatrixXcd& columns = basis.change_of_basis();
  const Space& ambient = basis.ambient();
  CoeffVec residual = columns * v;
  VectorXcd coeffs = VectorXcd::Zero(static_cast<long>(spt.size()));

  double scale = ambient.norm(residual);
  if (scale == 0.0) return 0.0;

  auto eval = [&](std::size_t slot, Complex candidate) {
    const Complex delta = candidate - coeffs[static_cast<long>(slot)];
    return ambient.norm(residual - delta * columns.col(spt[slot]));
  };

  double current = scale;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double step = scale / std::pow(2.0, sweep);
    for (std::size_t slot = 0; slot < spt.size(); ++slot) {
      // Axis moves in the complex plane, halving steps within the sweep.
      double local_step = step;
      for (int refine = 0; refine < 8; ++refine) {
        bool improved = false;
        for (const Complex dir : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
          const Complex candidate = coeffs[static_cast<long>(slot)] + local_step * dir;
          const double value = eval(slot, candidate);
          if (value < current) {
            const Complex delta = candidate - coeffs[static_cast<long>(slot)];
            residual -= delta * columns.col(spt[slot]);
            coeffs[static_cast<long>(slot)] = candidate;
            current = value;
            improved = true;
          }
        }
        if (!improved) local_step *= 0.5;
      }
    }
  }
  return current;
}

} // namespace

NTermResult best_nterm_error(const BasisInstance& basis, const CoeffVec& v, int count,
                             long enum_budget) {
  require(static_cast<int>(v.size()) == basis.dim(), "best_nterm_error: dimension mismatch");
  require(count >= 0 && count <= basis.dim(), "best_nterm_error: N out of range");

  const int dim = basis.dim();
  NTermResult result;

  if (count == 0) {
    result.value = basis.norm(v);
    result.achieving = SupportSet::from_indices({}, dim);
    result.exact = true;
    return result;
  }

  const bool hilbert = basis.is_hilbert();
  MatrixXcd gram;
  CoeffVec gram_v;
  double norm_sq = 0.0;
  if (hilbert) {
    gram = basis.basis_gram();
    gram_v = gram * v;
    norm_sq = std::max(0.0, std::real(v.dot(gram_v)));
  }

  auto error_for = [&](const std::vector<int>& spt) {
    return hilbert ? std::sqrt(nterm_error_sq_normal(gram, gram_v, norm_sq, spt))
                   : nterm_error_general(basis, v, spt);
  };

  const bool exhaustive = hilbert && binomial_double(dim, count) <= static_cast<double>(enum_budget);
  if (exhaustive) {
    std::vector<int> comb = first_combination(count);
    std::vector<int> best = comb;
    double best_err = error_for(comb);
    while (next_combination(comb, dim)) {
      const double err = error_for(comb);
      if (err < best_err) {
        best_err = err;
        best = comb;
      }
    }
    result.value = best_err;
    result.achieving = SupportSet::from_indices(std::move(best), dim);
    result.exact = true;
    return result;
  }

  // Greedy-support start, then pairwise in/out swaps (first improvement),
  // within an evaluation budget of 200 d.
  std::vector<int> current = greedy_support(v, count).indices();
  while (static_cast<int>(current.size()) < count) { // pad when supp(v) < N
    for (int j = 0; j < dim && static_cast<int>(current.size()) < count; ++j) {
      if (std::find(current.begin(), current.end(), j) == current.end()) current.push_back(j);
    }
  }
  std::sort(current.begin(), current.end());
  double current_err = error_for(current);
  long evals = 1;
  const long eval_budget = 200L * dim;
  bool improved = true;
  while (improved && evals < eval_budget && current_err > 0.0) {
    improved = false;
    for (std::size_t slot = 0; slot < current.size() && evals < eval_budget; ++slot) {
      for (int j = 0; j < dim && evals < eval_budget; ++j) {
        if (std::binary_search(current.begin(), current.end(), j)) continue;
        std::vector<int> candidate = current;
        candidate[slot] = j;
        std::sort(candidate.begin(), candidate.end());
        const double err = error_for(candidate);
        ++evals;
        if (err < current_err - 1e-15) {
          current = std::move(candidate);
          current_err = err;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
  }

  result.value = current_err;
  result.achieving = SupportSet::from_indices(std::move(current), dim);
  result.exact = false;
  return result;
}

LebesgueRatio lebesgue_ratio(const BasisInstance& basis, const CoeffVec& v, int count,
                             long enum_budget) {
  LebesgueRatio out;
  const NTermResult sigma = best_nterm_error(basis, v, count, enum_budget);
  out.sigma_exact = sigma.exact;
  const double norm_v = basis.norm(v);
  if (sigma.value <= 1e-12 * std::max(1.0, norm_v)) {
    out.defined = false; // sigma_N(v) = 0: ratio undefined
    return out;
  }
  const CoeffVec residual = v - greedy_projection(v, count);
  out.ratio = basis.norm(residual) / sigma.value;
  out.defined = true;
  return out;
}

} // namespace qg
