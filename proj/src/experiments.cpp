#include "qg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qg/bounds.hpp"
#include "qg/combinatorics.hpp"
#include "qg/conditionality.hpp"
#include "qg/csv.hpp"
#include "qg/fit.hpp"
#include "qg/greedy.hpp"
#include "qg/olevskii.hpp"
#include "qg/rng.hpp"
#include "qg/spaces.hpp"
#include "qg/svg.hpp"

namespace qg {

namespace {

std::string out_path(const ExperimentConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  return (std::filesystem::path(config.out_dir) / name).string();
}

QuadConfig quad_of(const ExperimentConfig& config) {
  QuadConfig quad;
  quad.rel_tol = config.quad_rel_tol;
  quad.abs_tol = config.quad_abs_tol;
  return quad;
}

std::vector<long> dyadic_grid(long lo, long hi) {
  std::vector<long> grid;
  for (long n = lo; n <= hi; n *= 2) grid.push_back(n);
  return grid;
}

// || sum_{|n|<=N} e^{int} ||^2 from a Toeplitz coefficient table.
double dirichlet_norm_sq_from_table(long n_max, const std::vector<double>& table) {
  const double count = static_cast<double>(2 * n_max + 1);
  double sum = count * table[0];
  for (long j = 1; j <= 2 * n_max; ++j) {
    sum += 2.0 * (count - static_cast<double>(j)) * table[static_cast<std::size_t>(j)];
  }
  return std::max(sum, 0.0);
}

std::string method_field(const WitnessReport& witness) {
  return witness_method_name(witness.method);
}

void note_fit(ExperimentResult& result, const std::string& label, const FitResult& fit) {
  std::ostringstream line;
  line << label << ": " << fit_model_name(fit.model) << " exponent " << g17(fit.exponent)
       << ", constant " << g17(fit.constant) << ", R^2 " << g17(fit.r_squared);
  result.notes.push_back(line.str());
}

} // namespace

ExperimentResult run_dirichlet_table(const ExperimentConfig& config) {
  ExperimentResult result;
  const std::uint64_t seed = config.required_seed(); // unused randomness, but kept mandatory
  (void)seed;
  const Exec exec = config.exec();
  const QuadConfig quad = quad_of(config);

  std::vector<long> grid = config.n_grid.empty() ? dyadic_grid(8, 1024) : config.n_grid;
  const long n_max = *std::max_element(grid.begin(), grid.end());

  for (const double gamma : config.gammas) {
    require(std::abs(gamma) < 1.0, "dirichlet: gammas must lie in (-1,1)");
  }

  CsvWriter csv(out_path(config, "dirichlet.csv"));
  csv.header({"gamma", "N", "norm", "ratio"});
  CsvWriter summary(out_path(config, "dirichlet_summary.csv"));
  summary.header({"gamma", "min_ratio", "max_ratio", "spread"});

  std::vector<SvgSeries> series;
  for (const double gamma : config.gammas) {
    const std::vector<double> table = weight_coeff_table(-gamma, 2 * n_max, quad, exec);
    double lo = 1e300;
    double hi = 0.0;
    SvgSeries curve;
    curve.name = "gamma=" + g17(gamma);
    for (const long n : grid) {
      const double norm = std::sqrt(dirichlet_norm_sq_from_table(n, table));
      const double ratio = norm / std::pow(static_cast<double>(n), 0.5 * (1.0 - gamma));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      csv.row({g17(gamma), std::to_string(n), g17(norm), g17(ratio)});
      curve.points.emplace_back(static_cast<double>(n), norm);
    }
    summary.row({g17(gamma), g17(lo), g17(hi), g17(hi / lo)});
    series.push_back(std::move(curve));
    std::ostringstream note;
    note << "gamma " << g17(gamma) << ": ratio spread " << g17(hi / lo);
    result.notes.push_back(note.str());
  }
  result.outputs.push_back(out_path(config, "dirichlet.csv"));
  result.outputs.push_back(out_path(config, "dirichlet_summary.csv"));

  if (config.write_svg) {
    SvgOptions options;
    options.title = "Dirichlet kernel norms in L2(|t|^gamma dt)";
    options.x_label = "N";
    options.y_label = "norm";
    options.log_x = true;
    options.log_y = true;
    const std::string path = out_path(config, "dirichlet.svg");
    write_svg_plot(path, series, options);
    result.outputs.push_back(path);
  }
  return result;
}

ExperimentResult run_babenko_kn(const ExperimentConfig& config) {
  ExperimentResult result;
  const std::uint64_t seed = config.required_seed();
  const Exec exec = config.exec();
  require(std::abs(config.alpha) < 0.5, "babenko: |alpha| must be < 1/2");

  const WeightedTrigBasis trig =
      gram_from_weighted_trig(config.alpha, config.maxfreq, quad_of(config), exec);
  const BasisInstance& basis = *trig.basis;
  const int dim = basis.dim();

  std::vector<long> grid = config.n_grid.empty()
                               ? dyadic_grid(8, std::min<long>(config.maxfreq, 64))
                               : config.n_grid;

  CsvWriter csv(out_path(config, "babenko_kn.csv"));
  csv.header({"N", "lower_ratio", "lower_method", "sampled_max", "exact_kn", "witness_A",
              "witness_x"});

  std::vector<std::pair<double, double>> lower_curve;
  std::vector<std::pair<double, double>> sampled_curve;
  for (const long n : grid) {
    require(n <= config.maxfreq, "babenko: N grid exceeds maxfreq");
    const SignSearchResult sign =
        sign_partition_witness(trig, n, config.trials, derive_seed(seed, n, 0xBA), exec);

    // sampled projection norms over random subsets with |A| <= N
    struct Sample {
      double value = 0.0;
    };
    std::vector<Sample> samples;
    fill_indexed(exec, samples, config.sample_sets, [&](std::int64_t t) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), 0x5A17 + n));
      const int size = (t % 2 == 0) ? static_cast<int>(std::min<long>(n, dim))
                                    : 1 + static_cast<int>(rng.below(
                                              static_cast<std::uint64_t>(std::min<long>(n, dim))));
      std::vector<int> pool(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) pool[static_cast<std::size_t>(j)] = j;
      for (int j = 0; j < size; ++j) {
        const int swap_with =
            j + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim - j)));
        std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(swap_with)]);
      }
      pool.resize(static_cast<std::size_t>(size));
      Sample sample;
      sample.value = projection_norm(basis, SupportSet::from_indices(std::move(pool), dim)).value;
      return sample;
    });
    double sampled_max = 0.0;
    for (const Sample& sample : samples) sampled_max = std::max(sampled_max, sample.value);

    std::string exact_field;
    if (subsets_up_to(dim, static_cast<int>(n)) <= config.subset_budget) {
      exact_field = g17(k_n_exact(basis, static_cast<int>(n), config.subset_budget, exec).value);
    } else {
      result.notes.push_back("N=" + std::to_string(n) +
                             ": exhaustive k_N refused (subset budget), lower bounds only");
    }

    csv.row({std::to_string(n), g17(sign.witness.ratio), method_field(sign.witness), g17(sampled_max),
             exact_field, encode_support(sign.witness.set), encode_vector(sign.witness.x)});
    lower_curve.emplace_back(static_cast<double>(n), sign.witness.ratio);
    sampled_curve.emplace_back(static_cast<double>(n), sampled_max);
  }
  result.outputs.push_back(out_path(config, "babenko_kn.csv"));

  CsvWriter fits(out_path(config, "babenko_fit.csv"));
  fits.header({"curve", "model", "exponent", "constant", "r_squared"});
  const FitResult lower_fit = fit_power_law(lower_curve);
  const FitResult sampled_fit = fit_power_law(sampled_curve);
  fits.row({"sign_partition_lower", "power", g17(lower_fit.exponent), g17(lower_fit.constant),
            g17(lower_fit.r_squared)});
  fits.row({"sampled_max", "power", g17(sampled_fit.exponent), g17(sampled_fit.constant),
            g17(sampled_fit.r_squared)});
  result.outputs.push_back(out_path(config, "babenko_fit.csv"));
  note_fit(result, "sign-partition lower curve", lower_fit);
  note_fit(result, "sampled-max curve", sampled_fit);

  if (config.write_svg) {
    SvgOptions options;
    options.title = "Weighted trigonometric system: projection norms vs N";
    options.x_label = "N";
    options.y_label = "ratio";
    options.log_x = true;
    options.log_y = true;
    const std::string path = out_path(config, "babenko_kn.svg");
    write_svg_plot(path,
                   {SvgSeries{"sign-partition lower", lower_curve},
                    SvgSeries{"sampled max", sampled_curve}},
                   options);
    result.outputs.push_back(path);
  }
  return result;
}

// The coefficient routine builds the weight |t|^{-2 alpha}, so the two
// factors use -alpha/2 and +alpha/2.
BasisPtr th2_inner_basis(double alpha, int min_dim, const QuadConfig& quad, const Exec& exec) {
  long maxfreq = 1;
  while (2 * (2 * maxfreq + 1) < min_dim) ++maxfreq;
  const WeightedTrigBasis e_system = gram_from_weighted_trig(-alpha / 2.0, maxfreq, quad, exec);
  const WeightedTrigBasis f_system = gram_from_weighted_trig(+alpha / 2.0, maxfreq, quad, exec);
  return rotated_pair_basis(*e_system.basis, *f_system.basis);
}

ExperimentResult run_th2_pipeline(const ExperimentConfig& config) {
  ExperimentResult result;
  const std::uint64_t seed = config.required_seed();
  const Exec exec = config.exec();
  require(config.alpha > 0.0 && config.alpha < 1.0, "th2: alpha must be in (0,1)");
  require(config.kmax >= 2 && config.kmax <= 10, "th2: kmax must be in [2,10]");

  BasisPtr inner = th2_inner_basis(config.alpha, config.kmax, quad_of(config), exec);
  const OlevskiiBasis olevskii = olevskii_basis(inner, config.kmax);

  CsvWriter csv(out_path(config, "th2_kn.csv"));
  csv.header({"M", "level", "ratio", "inner_ratio", "inner_method", "witness_cardinality",
              "witness_A", "witness_x"});

  std::vector<std::pair<double, double>> curve;
  double previous_ratio = 0.0;
  bool monotone = true;
  for (long m = 8; m <= (1L << config.kmax); m *= 2) {
    const KnhResult lifted =
        knh_witness(olevskii, m, {WitnessMethod::odd_block, WitnessMethod::exact_spectral},
                    derive_seed(seed, m, 0x712), exec);
    csv.row({std::to_string(m), std::to_string(lifted.level), g17(lifted.witness.ratio),
             g17(lifted.inner.lower), method_field(lifted.inner.best),
             std::to_string(lifted.witness.set.size()), encode_support(lifted.witness.set),
             encode_vector(lifted.witness.x)});
    curve.emplace_back(static_cast<double>(m), lifted.witness.ratio);
    if (lifted.witness.ratio < previous_ratio - 1e-12) monotone = false;
    previous_ratio = lifted.witness.ratio;
  }
  result.outputs.push_back(out_path(config, "th2_kn.csv"));
  if (!monotone) {
    ++result.failed_checks;
    result.notes.push_back("witness ratios are not monotone over the dyadic M grid");
  }

  const FitResult fit = fit_polylog_law(curve);
  note_fit(result, "knH witness curve", fit);

  const GreedyReport report = estimate_qg_constant(*olevskii.psi, QgSampler{}, config.qg_trials,
                                                   derive_seed(seed, 0xF, 0x9), exec);
  std::ostringstream qg_note;
  qg_note << "Khat(Psi) = " << g17(report.k_hat) << ", kappaHat = " << g17(report.kappa_hat)
          << " over " << report.trials << " samples";
  result.notes.push_back(qg_note.str());

  std::vector<int> demo_sizes;
  for (long n = 2; n <= olevskii.layout.psi_dim() / 2; n *= 2) {
    demo_sizes.push_back(static_cast<int>(n));
  }
  const std::vector<DemocracyRow> democracy =
      democracy_profile(*olevskii.psi, demo_sizes, config.trials, derive_seed(seed, 0xD, 0x3), exec);

  CsvWriter demo_csv(out_path(config, "th2_democracy.csv"));
  demo_csv.header({"N", "sup_est", "inf_est", "ratio"});
  double worst_demo = 1.0;
  for (const DemocracyRow& row : democracy) {
    demo_csv.row({std::to_string(row.count), g17(row.sup_est), g17(row.inf_est),
                  g17(row.sup_est / row.inf_est)});
    worst_demo = std::max(worst_demo, row.sup_est / row.inf_est);
  }
  result.outputs.push_back(out_path(config, "th2_democracy.csv"));
  result.notes.push_back("democracy sup/inf ratio <= " + g17(worst_demo));
  if (worst_demo > 10.0) {
    ++result.failed_checks;
    result.notes.push_back("democracy sup/inf ratio exceeded 10");
  }

  CsvWriter summary(out_path(config, "th2_summary.csv"));
  summary.header({"quantity", "value"});
  summary.row({"alpha", g17(config.alpha)});
  summary.row({"kmax", std::to_string(config.kmax)});
  summary.row({"psi_dim", std::to_string(olevskii.layout.psi_dim())});
  summary.row({"fit_exponent", g17(fit.exponent)});
  summary.row({"fit_constant", g17(fit.constant)});
  summary.row({"fit_r_squared", g17(fit.r_squared)});
  summary.row({"khat", g17(report.k_hat)});
  summary.row({"kappa_hat", g17(report.kappa_hat)});
  summary.row({"democracy_worst_ratio", g17(worst_demo)});
  summary.row({"ratios_monotone", monotone ? "1" : "0"});
  result.outputs.push_back(out_path(config, "th2_summary.csv"));

  if (config.write_svg) {
    SvgOptions options;
    options.title = "k_M(Psi) witness ratios vs M";
    options.x_label = "M";
    options.y_label = "ratio";
    options.log_x = true;
    const std::string path = out_path(config, "th2_kn.svg");
    std::vector<std::pair<double, double>> overlay;
    for (const auto& [m, ratio] : curve) {
      overlay.emplace_back(m, fit.constant * std::pow(std::log2(m), fit.exponent));
    }
    write_svg_plot(path, {SvgSeries{"witness ratio", curve}, SvgSeries{"fit", overlay}}, options);
    result.outputs.push_back(path);
  }
  return result;
}

ExperimentResult run_seqspace_kn(const ExperimentConfig& config) {
  ExperimentResult result;
  const std::uint64_t seed = config.required_seed();
  const Exec exec = config.exec();
  require(config.kmax >= 2 && config.kmax <= 9, "seqspace: kmax must be in [2,9]");

  // Part 1: the rotated c0 + l1 witness family, checked against the closed form.
  std::vector<long> grid = config.n_grid.empty() ? dyadic_grid(1, 256) : config.n_grid;
  CsvWriter inner_csv(out_path(config, "seqspace_inner.csv"));
  inner_csv.header({"N", "ratio", "closed_form", "abs_error", "witness_A", "witness_x"});
  double worst_inner = 0.0;
  for (const long n : grid) {
    auto c0 = canonical_sequence_basis(static_cast<int>(n),
                                       std::numeric_limits<double>::infinity());
    auto l1 = canonical_sequence_basis(static_cast<int>(n), 1.0);
    BasisPtr pair_basis = rotated_pair_basis(*c0, *l1);

    CoeffVec x = CoeffVec::Ones(2 * n);
    std::vector<int> odd;
    for (long k = 0; k < n; ++k) odd.push_back(static_cast<int>(2 * k));
    const SupportSet set = SupportSet::from_indices(std::move(odd), static_cast<int>(2 * n));
    const double ratio = witness_ratio(*pair_basis, set, x);
    const double closed = std::sqrt(1.0 + static_cast<double>(n) * static_cast<double>(n)) / 2.0;
    worst_inner = std::max(worst_inner, std::abs(ratio - closed));
    inner_csv.row({std::to_string(n), g17(ratio), g17(closed), g17(std::abs(ratio - closed)),
                   encode_support(set), encode_vector(x)});
  }
  result.outputs.push_back(out_path(config, "seqspace_inner.csv"));
  result.notes.push_back("inner witness worst |ratio - closed form| = " + g17(worst_inner));
  if (worst_inner > 1e-9) {
    ++result.failed_checks;
    result.notes.push_back("inner witness deviates from sqrt(1+N^2)/2 beyond 1e-9");
  }

  // Part 2: the block construction over a small c0 + l1 inner system.
  const int pairs = (config.kmax + 1) / 2 + 1;
  auto c0 = canonical_sequence_basis(pairs, std::numeric_limits<double>::infinity());
  auto l1 = canonical_sequence_basis(pairs, 1.0);
  BasisPtr inner = rotated_pair_basis(*c0, *l1);
  const OlevskiiBasis olevskii = olevskii_basis(inner, config.kmax);

  CsvWriter psi_csv(out_path(config, "seqspace_psi.csv"));
  psi_csv.header({"M", "level", "ratio", "inner_ratio", "witness_cardinality", "witness_A",
                  "witness_x"});
  std::vector<std::pair<double, double>> curve;
  for (long m = 8; m <= (1L << config.kmax); m *= 2) {
    const KnhResult lifted =
        knh_witness(olevskii, m, {WitnessMethod::odd_block}, derive_seed(seed, m, 0x5E9), exec);
    psi_csv.row({std::to_string(m), std::to_string(lifted.level), g17(lifted.witness.ratio),
                 g17(lifted.inner.lower), std::to_string(lifted.witness.set.size()),
                 encode_support(lifted.witness.set), encode_vector(lifted.witness.x)});
    curve.emplace_back(static_cast<double>(m), lifted.witness.ratio);
  }
  result.outputs.push_back(out_path(config, "seqspace_psi.csv"));

  const FitResult fit = fit_polylog_law(curve);
  note_fit(result, "seqspace psi witness curve", fit);

  if (curve.size() >= 2) {
    const double growth = curve.back().second / curve.front().second;
    result.notes.push_back("ratio growth from M=" + g17(curve.front().first) +
                           " to M=" + g17(curve.back().first) + ": " + g17(growth));
  }
  return result;
}

ExperimentResult run_bounds_report(const ExperimentConfig& config) {
  ExperimentResult result;
  config.required_seed();

  std::vector<double> k_grid = config.k_grid;
  if (k_grid.empty()) {
    for (double k = 1.0; k <= 100.0; k *= 1.25) k_grid.push_back(k);
    k_grid.push_back(100.0);
  }
  std::vector<double> p_grid = config.p_grid;
  if (p_grid.empty()) p_grid = {1.1, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 5.0, 7.5, 10.0};
  std::vector<double> kappa_grid = config.kappa_grid;
  if (kappa_grid.empty()) kappa_grid = {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};

  CsvWriter k_csv(out_path(config, "bounds_K.csv"));
  k_csv.header({"K", "delta", "alpha", "branch", "alpha_besselian", "one_minus_alpha"});
  int alpha_violations = 0;
  for (const double k_const : k_grid) {
    const ExponentReport report = alpha_of_k(k_const);
    k_csv.row({g17(k_const), g17(report.delta), g17(report.alpha),
               report.branch == ExponentBranch::first ? "first" : "second",
               g17(report.alpha_besselian), g17(report.one_minus_alpha)});
    if (!(report.one_minus_alpha > 0.0) || !(report.alpha_besselian < 0.5)) ++alpha_violations;
  }
  result.outputs.push_back(out_path(config, "bounds_K.csv"));

  CsvWriter p_csv(out_path(config, "bounds_p.csv"));
  p_csv.header({"p", "kappa", "c_p", "alpha", "branch", "one_minus_alpha"});
  for (const double p : p_grid) {
    for (const double kappa : kappa_grid) {
      const ExponentReport report = alpha_p(p, kappa);
      p_csv.row({g17(p), g17(kappa), g17(report.c_p), g17(report.alpha),
                 report.branch == ExponentBranch::p_case_i ? "i" : "ii",
                 g17(report.one_minus_alpha)});
      if (!(report.one_minus_alpha > 0.0)) ++alpha_violations;
    }
  }
  result.outputs.push_back(out_path(config, "bounds_p.csv"));

  // Embedded consistency checks.
  CsvWriter checks(out_path(config, "bounds_checks.csv"));
  checks.header({"check", "value", "pass"});

  const double k_at_half = 1.0 / std::sqrt(1.0 - 0.25); // delta = 1/2
  const ExponentReport at_half = alpha_of_k(k_at_half);
  const double branch_gap = std::abs(at_half.alpha - 0.5 * std::log2(3.0));
  checks.row({"branch_agreement_at_delta_half", g17(branch_gap),
              branch_gap <= 1e-12 ? "1" : "0"});
  if (branch_gap > 1e-12) ++result.failed_checks;

  double worst_p2_gap = 0.0;
  for (const double kappa : {1.0, 2.0, 5.0}) {
    const double from_i = 2.0 - 1.0 / (2.0 * kappa * kappa);
    const double from_ii = 2.0 - 1.0 / (2.0 * kappa * kappa);
    worst_p2_gap = std::max(worst_p2_gap, std::abs(c_p_const(2.0, kappa) - from_i) +
                                              std::abs(from_i - from_ii));
  }
  checks.row({"c_p_agreement_at_p2", g17(worst_p2_gap), worst_p2_gap <= 1e-14 ? "1" : "0"});
  if (worst_p2_gap > 1e-14) ++result.failed_checks;

  checks.row({"alpha_below_one_violations", std::to_string(alpha_violations),
              alpha_violations == 0 ? "1" : "0"});
  if (alpha_violations > 0) ++result.failed_checks;

  // weak parallelogram Monte-Carlo
  Rng rng(config.required_seed());
  double min_slack = 1e300;
  for (const double p : {1.5, 3.0}) {
    SequenceSpace space(64, p);
    for (int rep = 0; rep < 10000; ++rep) {
      CoeffVec x(64), y(64);
      for (int j = 0; j < 64; ++j) {
        x[j] = rng.cnormal();
        y[j] = rng.cnormal();
      }
      min_slack = std::min(min_slack, weak_parallelogram_check(p, x, y, space).slack);
    }
  }
  checks.row({"weak_parallelogram_min_slack", g17(min_slack), min_slack >= -1e-9 ? "1" : "0"});
  if (min_slack < -1e-9) ++result.failed_checks;

  result.outputs.push_back(out_path(config, "bounds_checks.csv"));
  result.notes.push_back("branch gap at delta=1/2: " + g17(branch_gap));
  result.notes.push_back("weak parallelogram min slack: " + g17(min_slack));
  return result;
}

namespace {

BasisPtr build_inner_basis(const ExperimentConfig& config, const Exec& exec) {
  if (config.inner == "onb") {
    return canonical_sequence_basis(std::max(config.kmax, 2), 2.0);
  }
  if (config.inner == "babenko") {
    return gram_from_weighted_trig(config.alpha, std::max<long>(config.maxfreq, config.kmax),
                                   QuadConfig{}, exec)
        .basis;
  }
  if (config.inner == "pair-trig") {
    return th2_inner_basis(config.alpha, config.kmax, QuadConfig{}, exec);
  }
  if (config.inner == "pair-seq") {
    const int pairs = (config.kmax + 1) / 2 + 1;
    auto c0 = canonical_sequence_basis(pairs, std::numeric_limits<double>::infinity());
    auto l1 = canonical_sequence_basis(pairs, 1.0);
    return rotated_pair_basis(*c0, *l1);
  }
  throw validation_error("unknown inner basis kind: " + config.inner);
}

} // namespace

ExperimentResult run_olevskii_build(const ExperimentConfig& config) {
  ExperimentResult result;
  const std::uint64_t seed = config.required_seed();
  const Exec exec = config.exec();
  require(config.kmax >= 1 && config.kmax <= 10, "olevskii-build: kmax must be in [1,10]");

  BasisPtr inner = build_inner_basis(config, exec);
  const OlevskiiBasis olevskii = olevskii_basis(inner, config.kmax);
  const BlockLayout& layout = olevskii.layout;

  CsvWriter layout_csv(out_path(config, "olevskii_layout.csv"));
  layout_csv.header({"k", "n_k", "block_size", "psi_start", "e_start", "e_end"});
  for (int k = 1; k <= layout.kmax; ++k) {
    layout_csv.row({std::to_string(k), std::to_string(layout.n[static_cast<std::size_t>(k)]),
                    std::to_string(layout.block_size(k)),
                    std::to_string(layout.psi_index(k, 1)),
                    std::to_string(layout.e_index(k, 2)),
                    std::to_string(layout.e_index(k, layout.block_size(k)))});
  }
  result.outputs.push_back(out_path(config, "olevskii_layout.csv"));

  CsvWriter checks(out_path(config, "olevskii_checks.csv"));
  checks.header({"check", "value", "pass"});

  // bonek identity over random subsets of every block
  Rng rng(seed);
  double worst_bonek = 0.0;
  for (int k = 1; k <= layout.kmax; ++k) {
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<int> subset;
      for (int l = 0; l < layout.block_size(k); ++l) {
        if (rng.uniform() < 0.5) subset.push_back(l);
      }
      const auto [lhs, rhs] =
          verify_bonek(olevskii, k, SupportSet::from_indices(subset, layout.block_size(k)));
      worst_bonek = std::max(worst_bonek, std::abs(lhs - rhs));
    }
  }
  checks.row({"bonek_max_abs_error", g17(worst_bonek), worst_bonek < 1e-9 ? "1" : "0"});
  if (worst_bonek >= 1e-9) ++result.failed_checks;

  // block sums collapse onto the inner vectors
  double worst_collapse = 0.0;
  for (int k = 1; k <= layout.kmax; ++k) {
    CoeffVec ones = CoeffVec::Zero(layout.psi_dim());
    for (int l = 1; l <= layout.block_size(k); ++l) ones[layout.psi_index(k, l)] = 1.0;
    CoeffVec ref = olevskii.psi->to_reference(ones);
    ref[k - 1] -= std::pow(2.0, 0.5 * k);
    worst_collapse = std::max(worst_collapse, ref.cwiseAbs().maxCoeff());
  }
  checks.row({"block_sum_collapse_error", g17(worst_collapse), worst_collapse < 1e-9 ? "1" : "0"});
  if (worst_collapse >= 1e-9) ++result.failed_checks;

  if (olevskii.psi->is_hilbert() && config.inner == "onb") {
    const double gram_dev = (olevskii.psi->basis_gram() -
                             MatrixXcd::Identity(layout.psi_dim(), layout.psi_dim()))
                                .cwiseAbs()
                                .maxCoeff();
    checks.row({"onb_gram_identity_deviation", g17(gram_dev), gram_dev < 1e-10 ? "1" : "0"});
    if (gram_dev >= 1e-10) ++result.failed_checks;
  }

  result.outputs.push_back(out_path(config, "olevskii_checks.csv"));
  result.notes.push_back("psi dimension " + std::to_string(layout.psi_dim()));
  result.notes.push_back("bonek max |lhs-rhs| = " + g17(worst_bonek));
  return result;
}

ExperimentResult run_kn_adhoc(const ExperimentConfig& config) {
  ExperimentResult result;
  const std::uint64_t seed = config.required_seed();
  const Exec exec = config.exec();
  require(!config.gram_file.empty(), "kn: a gram file is required (first line d, then d rows)");

  std::ifstream in(config.gram_file);
  require(in.good(), "kn: cannot open gram file: " + config.gram_file);
  int dim = 0;
  in >> dim;
  require(dim >= 1 && dim <= 4096, "kn: bad dimension in gram file");
  MatrixXcd gram(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double value;
      if (!(in >> value)) throw validation_error("kn: gram file ended early");
      gram(i, j) = value;
    }
  }
  const double asym = (gram - gram.transpose()).cwiseAbs().maxCoeff();
  require(asym <= 1e-12 * std::max(1.0, gram.cwiseAbs().maxCoeff()),
          "kn: gram file is not symmetric");

  // normalize the diagonal so the basis is normalized
  bool renormalized = false;
  for (int i = 0; i < dim; ++i) {
    if (std::abs(std::real(gram(i, i)) - 1.0) > 1e-12) renormalized = true;
  }
  if (renormalized) {
    VectorXd scale(dim);
    for (int i = 0; i < dim; ++i) {
      require(std::real(gram(i, i)) > 0.0, "kn: nonpositive diagonal entry");
      scale[i] = 1.0 / std::sqrt(std::real(gram(i, i)));
    }
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) gram(i, j) *= scale[i] * scale[j];
    }
    result.notes.push_back("gram diagonal renormalized to 1");
  }

  auto basis = identity_basis(std::make_shared<GramSpace>(std::move(gram)));

  std::vector<long> grid = config.n_grid.empty()
                               ? dyadic_grid(1, std::min<long>(dim, 8))
                               : config.n_grid;
  CsvWriter csv(out_path(config, "kn.csv"));
  csv.header({"N", "kind", "value", "witness_A", "witness_x", "witness_ratio"});
  for (const long n : grid) {
    require(n >= 1 && n <= dim, "kn: N out of range");
    const bool within = subsets_up_to(dim, static_cast<int>(n)) <= config.subset_budget;
    if (config.force_exact && !within) {
      throw budget_error("kn: exhaustive enumeration for N=" + std::to_string(n) +
                         " exceeds the subset budget");
    }
    if (within) {
      const KnExact exact = k_n_exact(*basis, static_cast<int>(n), config.subset_budget, exec);
      const ProjectionNorm witness = projection_norm(*basis, exact.argmax);
      csv.row({std::to_string(n), "exact", g17(exact.value), encode_support(exact.argmax),
               encode_vector(witness.maximizer),
               g17(witness_ratio(*basis, exact.argmax, witness.maximizer))});
    } else {
      const KnRow row =
          k_n_lower(*basis, static_cast<int>(n),
                    {WitnessMethod::random_search, WitnessMethod::odd_block},
                    derive_seed(seed, n, 0xAD), exec);
      csv.row({std::to_string(n), "lower", g17(row.lower), encode_support(row.best.set),
               encode_vector(row.best.x), g17(row.best.ratio)});
      result.notes.push_back("N=" + std::to_string(n) + ": budget refused, lower bound reported");
    }
  }
  result.outputs.push_back(out_path(config, "kn.csv"));
  return result;
}

} // namespace qg
