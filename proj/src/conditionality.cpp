#include "qg/conditionality.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qg/combinatorics.hpp"
#include "qg/greedy.hpp"
#include "qg/rng.hpp"

namespace qg {

std::string witness_method_name(WitnessMethod method) {
  switch (method) {
    case WitnessMethod::exact_spectral: return "exact-spectral";
    case WitnessMethod::sign_partition: return "sign-partition";
    case WitnessMethod::odd_block: return "odd-block";
    case WitnessMethod::olevskii_block: return "olevskii-block";
    case WitnessMethod::random_search: return "random-search";
  }
  return "unknown";
}

double witness_ratio(const BasisInstance& basis, const SupportSet& set, const CoeffVec& x) {
  const double denom = basis.norm(x);
  require(denom > 0.0, "witness_ratio: zero vector");
  return basis.norm(restrict_to(x, set)) / denom;
}

namespace {

// Sampled + coordinate-ascent lower bound for ||S_A|| on general ambients.
ProjectionNorm projection_norm_search(const BasisInstance& basis, const SupportSet& set,
                                      std::uint64_t seed, int sweeps) {
  const int dim = basis.dim();
  Rng rng(derive_seed(seed, 0x5eed, 0xA));

  auto ratio_of = [&](const CoeffVec& x) {
    const double nx = basis.norm(x);
    if (nx <= 0.0) return 0.0;
    return basis.norm(restrict_to(x, set)) / nx;
  };

  CoeffVec best;
  double best_ratio = -1.0;
  const int starts = 8;
  for (int s = 0; s < starts; ++s) {
    CoeffVec x(dim);
    if (s == 0) {
      x = CoeffVec::Zero(dim);
      for (int j : set) x[j] = 1.0; // indicator start
    } else if (s == 1) {
      x = CoeffVec::Ones(dim);
    } else {
      for (int j = 0; j < dim; ++j) x[j] = rng.cnormal();
    }
    double current = ratio_of(x);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
      const double scale = x.cwiseAbs().maxCoeff();
      const double step = scale > 0 ? scale * std::pow(0.5, sweep) : 1.0;
      for (int j = 0; j < dim; ++j) {
        for (const Complex dir :
             {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
          CoeffVec candidate = x;
          candidate[j] += step * dir;
          const double value = ratio_of(candidate);
          if (value > current) {
            x = std::move(candidate);
            current = value;
          }
        }
      }
    }
    if (current > best_ratio) {
      best_ratio = current;
      best = x;
    }
  }

  ProjectionNorm out;
  out.value = std::max(best_ratio, 0.0);
  out.exact = false;
  out.maximizer = best;
  return out;
}

} // namespace

ProjectionNorm projection_norm(const BasisInstance& basis, const SupportSet& set,
                               std::uint64_t seed) {
  const int dim = basis.dim();
  for (int j : set) require(j < dim, "projection_norm: index out of range");

  if (set.empty()) {
    ProjectionNorm out;
    out.value = 0.0;
    out.exact = true;
    out.maximizer = CoeffVec::Zero(dim);
    return out;
  }

  if (!basis.is_hilbert()) return projection_norm_search(basis, set, seed, 5);

  // T = L^H D_A L^{-H}; ||S_A|| = sigma_max(T) via the Hermitian matrix T^H T.
  const MatrixXcd& chol = basis.basis_chol_lower();
  const MatrixXcd inv_adjoint = chol.adjoint()
                                    .triangularView<Eigen::Upper>()
                                    .solve(MatrixXcd::Identity(dim, dim)); // L^{-H}
  MatrixXcd masked = MatrixXcd::Zero(dim, dim);
  for (int j : set) masked.row(j) = inv_adjoint.row(j);
  const MatrixXcd similarity = chol.adjoint() * masked;
  MatrixXcd hermitian = similarity.adjoint() * similarity;
  hermitian = 0.5 * (hermitian + hermitian.adjoint().eval());

  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(hermitian);
  if (solver.info() != Eigen::Success) throw numerical_error("projection_norm: eigensolver failed");
  const int top = dim - 1; // eigenvalues ascending
  ProjectionNorm out;
  out.value = std::sqrt(std::max(0.0, solver.eigenvalues()[top]));
  out.exact = true;
  out.maximizer = inv_adjoint * solver.eigenvectors().col(top);
  return out;
}

KnExact k_n_exact(const BasisInstance& basis, int count, double subset_budget, const Exec& exec) {
  require(basis.is_hilbert(), "k_n_exact requires a hilbert ambient; use k_n_lower");
  require(count >= 1 && count <= basis.dim(), "k_n_exact: N out of range");
  const int dim = basis.dim();

  const double total = subsets_up_to(dim, count);
  if (!(total <= subset_budget)) {
    throw budget_error("k_n_exact: " + std::to_string(total) +
                       " subsets exceed the budget; use k_n_lower");
  }

  std::vector<SupportSet> subsets;
  subsets.reserve(static_cast<std::size_t>(total));
  for (int m = 1; m <= count; ++m) {
    std::vector<int> comb = first_combination(m);
    do {
      subsets.push_back(SupportSet::from_indices(comb, dim));
    } while (next_combination(comb, dim));
  }

  std::vector<double> values;
  fill_indexed(exec, values, static_cast<std::int64_t>(subsets.size()), [&](std::int64_t i) {
    return projection_norm(basis, subsets[static_cast<std::size_t>(i)]).value;
  });

  // Deterministic reduction: strictly-greater keeps the earliest subset in
  // (size, lexicographic) enumeration order.
  KnExact out;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > out.value) {
      out.value = values[i];
      arg = i;
    }
  }
  out.argmax = subsets[arg];
  return out;
}

namespace {

// x = indicator of the first `count` positions, A = the alternating half
// (1-based odd positions). Stays inside the first `count` positions.
WitnessReport odd_block_witness(const BasisInstance& basis, int count) {
  const int dim = basis.dim();
  const int width = std::min(count, dim);
  WitnessReport report;
  report.method = WitnessMethod::odd_block;
  std::vector<int> odds;
  for (int j = 0; j < width; j += 2) odds.push_back(j);
  report.set = SupportSet::from_indices(std::move(odds), dim);
  CoeffVec x = CoeffVec::Zero(dim);
  for (int j = 0; j < width; ++j) x[j] = 1.0;
  report.x = x;
  report.ratio = witness_ratio(basis, report.set, report.x);
  return report;
}

// Exhaustive subset scan (all |A| <= count) when feasible; the best exact
// spectral witness. Falls back to sampled subsets above the cap.
WitnessReport spectral_scan_witness(const BasisInstance& basis, int count, std::uint64_t seed,
                                    const Exec& exec, const KnLowerOptions& options);

WitnessReport random_search_witness(const BasisInstance& basis, int count, std::uint64_t seed,
                                    const Exec& exec, const KnLowerOptions& options) {
  const int dim = basis.dim();
  const int cap = dim;
  const long trials = options.random_trials;

  struct Outcome {
    double ratio = -1.0;
    SupportSet set;
    CoeffVec x;
  };

  std::vector<Outcome> outcomes;
  fill_indexed(exec, outcomes, trials, [&](std::int64_t t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), 0xB10C));
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                             std::min(count, cap))));
    // Reservoir-free subset draw: shuffle-select from [0, cap).
    std::vector<int> pool(static_cast<std::size_t>(cap));
    for (int j = 0; j < cap; ++j) pool[static_cast<std::size_t>(j)] = j;
    for (int j = 0; j < size; ++j) {
      const int swap_with = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - j)));
      std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(swap_with)]);
    }
    pool.resize(static_cast<std::size_t>(size));
    Outcome outcome;
    outcome.set = SupportSet::from_indices(std::move(pool), dim);
    if (basis.is_hilbert()) {
      const ProjectionNorm norm = projection_norm(basis, outcome.set);
      outcome.x = norm.maximizer;
      outcome.ratio = witness_ratio(basis, outcome.set, outcome.x);
    } else {
      const ProjectionNorm norm = projection_norm_search(
          basis, outcome.set, derive_seed(seed, static_cast<std::uint64_t>(t), 0xCA),
          options.ascent_sweeps);
      outcome.x = norm.maximizer;
      outcome.ratio = norm.value > 0.0 ? witness_ratio(basis, outcome.set, outcome.x) : 0.0;
    }
    return outcome;
  });

  WitnessReport report;
  report.method = basis.is_hilbert() ? WitnessMethod::exact_spectral : WitnessMethod::random_search;
  long best = -1;
  double best_ratio = -1.0;
  for (long t = 0; t < trials; ++t) {
    if (outcomes[static_cast<std::size_t>(t)].ratio > best_ratio) {
      best_ratio = outcomes[static_cast<std::size_t>(t)].ratio;
      best = t;
    }
  }
  require(best >= 0, "random_search_witness: no trial succeeded");
  report.set = outcomes[static_cast<std::size_t>(best)].set;
  report.x = outcomes[static_cast<std::size_t>(best)].x;
  report.ratio = outcomes[static_cast<std::size_t>(best)].ratio;
  return report;
}

WitnessReport spectral_scan_witness(const BasisInstance& basis, int count, std::uint64_t seed,
                                    const Exec& exec, const KnLowerOptions& options) {
  const int dim = basis.dim();
  if (!basis.is_hilbert() || subsets_up_to(dim, std::min(count, dim)) > 4096.0) {
    return random_search_witness(basis, count, seed, exec, options);
  }

  std::vector<SupportSet> subsets;
  for (int m = 1; m <= std::min(count, dim); ++m) {
    std::vector<int> comb = first_combination(m);
    do {
      subsets.push_back(SupportSet::from_indices(comb, dim));
    } while (next_combination(comb, dim));
  }
  std::vector<double> values;
  fill_indexed(exec, values, static_cast<std::int64_t>(subsets.size()), [&](std::int64_t i) {
    return projection_norm(basis, subsets[static_cast<std::size_t>(i)]).value;
  });
  std::size_t arg = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[arg]) arg = i;
  }

  WitnessReport report;
  report.method = WitnessMethod::exact_spectral;
  report.set = subsets[arg];
  report.x = projection_norm(basis, subsets[arg]).maximizer;
  report.ratio = witness_ratio(basis, report.set, report.x);
  return report;
}

} // namespace

KnRow k_n_lower(const BasisInstance& basis, int count,
                const std::vector<WitnessMethod>& strategies, std::uint64_t seed,
                const Exec& exec, const KnLowerOptions& options) {
  require(count >= 1 && count <= basis.dim(), "k_n_lower: N out of range");
  require(!strategies.empty(), "k_n_lower: no strategies given");

  // With a position cap, search on the prefix sub-basis and zero-pad the
  // witnesses back; padded ratios are identical by construction.
  if (options.position_cap > 0 && options.position_cap < basis.dim()) {
    const int cap = options.position_cap;
    const BasisPtr sub = prefix_basis(basis, cap);
    KnLowerOptions sub_options = options;
    sub_options.position_cap = 0;
    KnRow sub_row = k_n_lower(*sub, std::min(count, cap), strategies, seed, exec, sub_options);

    KnRow row;
    row.count = count;
    auto pad = [&](const WitnessReport& report) {
      WitnessReport padded;
      padded.method = report.method;
      padded.set = SupportSet::from_indices(report.set.indices(), basis.dim());
      padded.x = CoeffVec::Zero(basis.dim());
      padded.x.head(cap) = report.x;
      padded.ratio = witness_ratio(basis, padded.set, padded.x);
      return padded;
    };
    for (const WitnessReport& report : sub_row.per_strategy) {
      row.per_strategy.push_back(pad(report));
    }
    row.best = pad(sub_row.best);
    row.lower = row.best.ratio;
    return row;
  }

  KnRow row;
  row.count = count;
  for (const WitnessMethod method : strategies) {
    WitnessReport report;
    switch (method) {
      case WitnessMethod::odd_block:
        report = odd_block_witness(basis, count);
        break;
      case WitnessMethod::exact_spectral:
        report = spectral_scan_witness(basis, count, seed, exec, options);
        break;
      case WitnessMethod::random_search:
        report = random_search_witness(basis, count, seed, exec, options);
        break;
      default:
        throw validation_error("k_n_lower: strategy " + witness_method_name(method) +
                               " is not available for generic bases");
    }
    row.per_strategy.push_back(std::move(report));
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < row.per_strategy.size(); ++i) {
    if (row.per_strategy[i].ratio > row.per_strategy[best].ratio) best = i;
  }
  row.best = row.per_strategy[best];
  row.lower = row.best.ratio;
  return row;
}

SignSearchResult sign_partition_witness(const WeightedTrigBasis& trig, long freq_count,
                                        long trials, std::uint64_t seed, const Exec& exec) {
  require(trig.basis != nullptr, "sign_partition_witness: empty system");
  require(freq_count >= 1 && freq_count <= trig.maxfreq,
          "sign_partition_witness: basis frequencies do not cover |n| <= N");
  require(trials >= 1, "sign_partition_witness: trials must be >= 1");

  const BasisInstance& basis = *trig.basis;
  const int dim = basis.dim();
  const int section = static_cast<int>(2 * freq_count + 1); // frequencies 0, +-1, ..., +-N
  const MatrixXcd gram_section = basis.basis_gram().topLeftCorner(section, section);

  auto quad_form = [&](const VectorXd& signs) {
    double total = 0.0;
    for (int i = 0; i < section; ++i) {
      for (int j = 0; j < section; ++j) {
        total += signs[i] * signs[j] * std::real(gram_section(i, j));
      }
    }
    return total;
  };

  struct Trial {
    VectorXd signs;
    double sq_norm = 0.0;
  };
  std::vector<Trial> entries;
  fill_indexed(exec, entries, trials, [&](std::int64_t t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), 0x51C));
    Trial trial;
    trial.signs = VectorXd(section);
    for (int j = 0; j < section; ++j) trial.signs[j] = static_cast<double>(rng.sign());
    trial.sq_norm = quad_form(trial.signs);
    return trial;
  });

  double mean = 0.0;
  long best = 0;
  for (long t = 0; t < trials; ++t) {
    mean += entries[static_cast<std::size_t>(t)].sq_norm;
    if (entries[static_cast<std::size_t>(t)].sq_norm <
        entries[static_cast<std::size_t>(best)].sq_norm) {
      best = t;
    }
  }
  mean /= static_cast<double>(trials);

  const VectorXd& signs = entries[static_cast<std::size_t>(best)].signs;
  std::vector<int> plus;
  std::vector<int> minus;
  for (int j = 0; j < section; ++j) {
    (signs[j] > 0 ? plus : minus).push_back(j);
  }

  auto indicator_sq = [&](const std::vector<int>& idx) {
    double total = 0.0;
    for (int i : idx) {
      for (int j : idx) total += std::real(gram_section(i, j));
    }
    return total;
  };
  const std::vector<int>& half =
      indicator_sq(plus) >= indicator_sq(minus) ? plus : minus;

  SignSearchResult out;
  out.trials = trials;
  out.mean_sq_norm = mean;
  out.min_sq_norm = entries[static_cast<std::size_t>(best)].sq_norm;

  CoeffVec x = CoeffVec::Zero(dim);
  for (int j = 0; j < section; ++j) x[j] = signs[j];
  out.witness.method = WitnessMethod::sign_partition;
  out.witness.set = SupportSet::from_indices(half, dim);
  out.witness.x = std::move(x);
  out.witness.ratio = witness_ratio(basis, out.witness.set, out.witness.x);
  return out;
}

std::vector<DemocracyRow> democracy_profile(const BasisInstance& basis,
                                            const std::vector<int>& sizes, long trials,
                                            std::uint64_t seed, const Exec& exec) {
  const int dim = basis.dim();
  require(trials >= 0, "democracy_profile: negative trials");

  // Block structure from the labels, when present (full-block unions are the
  // structured sets that matter for the block construction).
  std::vector<std::vector<int>> blocks;
  for (int j = 0; j < dim; ++j) {
    const int b = basis.labels()[static_cast<std::size_t>(j)].block;
    if (b >= 1) {
      if (static_cast<int>(blocks.size()) < b) blocks.resize(static_cast<std::size_t>(b));
      blocks[static_cast<std::size_t>(b) - 1].push_back(j);
    }
  }

  std::vector<DemocracyRow> rows;
  for (const int count : sizes) {
    require(count >= 1 && count <= dim, "democracy_profile: size out of range");

    std::vector<SupportSet> candidates;
    // prefixes / suffix / shifted runs
    std::vector<int> run(static_cast<std::size_t>(count));
    auto push_run = [&](int start) {
      for (int i = 0; i < count; ++i) run[static_cast<std::size_t>(i)] = start + i;
      candidates.push_back(SupportSet::from_indices(run, dim));
    };
    push_run(0);
    push_run(dim - count);
    if (dim / 2 + count <= dim) push_run(dim / 2);
    if (dim / 4 + count <= dim) push_run(dim / 4);

    if (!blocks.empty()) {
      // union of whole blocks (ascending), padded from the next block
      std::vector<int> uni;
      for (const auto& block : blocks) {
        for (int j : block) {
          if (static_cast<int>(uni.size()) < count) uni.push_back(j);
        }
        if (static_cast<int>(uni.size()) >= count) break;
      }
      if (static_cast<int>(uni.size()) == count) {
        candidates.push_back(SupportSet::from_indices(std::move(uni), dim));
      }
      // first N inside a single block, for the smallest block that fits
      for (const auto& block : blocks) {
        if (static_cast<int>(block.size()) >= count) {
          std::vector<int> single(block.begin(), block.begin() + count);
          candidates.push_back(SupportSet::from_indices(std::move(single), dim));
          break;
        }
      }
    }

    const std::size_t structured = candidates.size();
    candidates.resize(structured + static_cast<std::size_t>(trials));
    for (long t = 0; t < trials; ++t) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), 0xDE30 + count));
      std::vector<int> pool(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) pool[static_cast<std::size_t>(j)] = j;
      for (int j = 0; j < count; ++j) {
        const int swap_with = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim - j)));
        std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(swap_with)]);
      }
      pool.resize(static_cast<std::size_t>(count));
      candidates[structured + static_cast<std::size_t>(t)] =
          SupportSet::from_indices(std::move(pool), dim);
    }

    std::vector<double> norms;
    fill_indexed(exec, norms, static_cast<std::int64_t>(candidates.size()), [&](std::int64_t i) {
      CoeffVec indicator = CoeffVec::Zero(dim);
      for (int j : candidates[static_cast<std::size_t>(i)]) indicator[j] = 1.0;
      return basis.norm(indicator);
    });

    DemocracyRow row;
    row.count = count;
    row.sup_est = *std::max_element(norms.begin(), norms.end());
    row.inf_est = *std::min_element(norms.begin(), norms.end());
    rows.push_back(row);
  }
  return rows;
}

KnhResult knh_witness(const OlevskiiBasis& olevskii, long m_target,
                      const std::vector<WitnessMethod>& inner_strategies, std::uint64_t seed,
                      const Exec& exec) {
  require(m_target >= 2, "knh_witness: M must be >= 2");
  const int level = static_cast<int>(std::ceil(std::log2(static_cast<double>(m_target))));
  require(level >= 1 && level <= olevskii.layout.kmax,
          "knh_witness: blocks up to ceil(log2 M) must exist");

  KnLowerOptions options;
  options.position_cap = level; // witness support within the first N inner positions
  KnRow inner = k_n_lower(*olevskii.inner, level, inner_strategies, seed, exec, options);

  // Lift: inner coefficients over x_1..x_kmax, blocks over the witness set.
  CoeffVec inner_coeffs = CoeffVec::Zero(olevskii.inner->dim());
  for (int j = 0; j < olevskii.inner->dim() && j < static_cast<int>(inner.best.x.size()); ++j) {
    inner_coeffs[j] = inner.best.x[j];
  }

  CoeffVec lifted = lift_to_psi(olevskii, inner_coeffs.head(olevskii.layout.kmax).eval());

  std::vector<int> lambda;
  for (int j : inner.best.set) {
    const int k = j + 1; // inner position j holds x_{j+1}
    const int block = olevskii.layout.block_size(k);
    const long base = olevskii.layout.psi_index(k, 1);
    for (int l = 0; l < block; ++l) lambda.push_back(static_cast<int>(base) + l);
  }

  KnhResult out;
  out.inner = std::move(inner);
  out.m_target = m_target;
  out.level = level;
  out.witness.method = WitnessMethod::olevskii_block;
  out.witness.set = SupportSet::from_indices(std::move(lambda),
                                             static_cast<int>(olevskii.layout.psi_dim()));
  out.witness.x = std::move(lifted);
  out.witness.ratio = witness_ratio(*olevskii.psi, out.witness.set, out.witness.x);
  return out;
}

} // namespace qg
