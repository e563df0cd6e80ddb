// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code; run with an optional
// list of criterion numbers to restrict (e.g. "qg_acceptance 1 4 8").
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qg/bounds.hpp"
#include "qg/combinatorics.hpp"
#include "qg/conditionality.hpp"
#include "qg/csv.hpp"
#include "qg/experiments.hpp"
#include "qg/fit.hpp"
#include "qg/greedy.hpp"
#include "qg/olevskii.hpp"
#include "qg/rng.hpp"
#include "qg/spaces.hpp"
#include "oracles.hpp"

using namespace qg;

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << "  FAILED: " << what << "\n";
    }
  }
  void note(const std::string& line) { detail << "  " << line << "\n"; }
};

// ---------------------------------------------------------------- criterion 1
// Exact identities: bonek to 1e-9 (k <= 8, 200 random subsets per block),
// component reconstruction to 1e-12, Haar orthogonality to 1e-12 (k <= 10).
void criterion_exact_identities(Check& check) {
  const OlevskiiBasis psi = olevskii_basis(canonical_sequence_basis(8, 2.0), 8);
  Rng rng(2024);
  double worst_bonek = 0.0;
  for (int k = 1; k <= 8; ++k) {
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<int> subset;
      for (int l = 0; l < psi.layout.block_size(k); ++l) {
        if (rng.uniform() < 0.5) subset.push_back(l);
      }
      const auto [lhs, rhs] =
          verify_bonek(psi, k, SupportSet::from_indices(subset, psi.layout.block_size(k)));
      worst_bonek = std::max(worst_bonek, std::abs(lhs - rhs));
    }
  }
  check.note("bonek max |lhs-rhs| = " + g17(worst_bonek));
  check.expect(worst_bonek < 1e-9, "bonek identity beyond 1e-9");

  double worst_recon = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    CoeffVec v(psi.layout.psi_dim());
    for (long j = 0; j < v.size(); ++j) v[j] = rng.cnormal();
    const ComponentSplit split = project_components(psi, v);
    for (int k = 1; k <= psi.layout.kmax; ++k) {
      for (int l = 1; l <= psi.layout.block_size(k); ++l) {
        const long idx = psi.layout.psi_index(k, l);
        const Complex recon = std::pow(2.0, -0.5 * k) * split.lambda[k - 1] + split.eta[idx];
        worst_recon = std::max(worst_recon, std::abs(v[idx] - recon));
      }
    }
  }
  check.note("component reconstruction max error = " + g17(worst_recon));
  check.expect(worst_recon < 1e-12, "component reconstruction beyond 1e-12");

  double worst_haar = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const HaarMatrix haar = haar_matrix(k);
    const int size = 1 << k;
    worst_haar = std::max(worst_haar,
                          (haar.entries.transpose() * haar.entries -
                           MatrixXd::Identity(size, size))
                              .cwiseAbs()
                              .maxCoeff());
  }
  check.note("haar orthogonality max deviation = " + g17(worst_haar));
  check.expect(worst_haar < 1e-12, "haar orthogonality beyond 1e-12");
}

// ---------------------------------------------------------------- criterion 2
// ONB degeneration at psi dimension 30 (kmax 4): gram = I to 1e-10,
// Khat = 1 +- 1e-9, exact k_N = 1 for N <= 4, democracy exactly sqrt(N).
void criterion_onb_degeneration(Check& check) {
  const OlevskiiBasis psi = olevskii_basis(canonical_sequence_basis(4, 2.0), 4);
  const long dim = psi.layout.psi_dim();
  check.expect(dim == 30, "psi dimension is not 30");

  const double gram_dev =
      (psi.psi->basis_gram() - MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  check.note("gram deviation from identity = " + g17(gram_dev));
  check.expect(gram_dev < 1e-10, "gram deviates from the identity beyond 1e-10");

  const GreedyReport report = estimate_qg_constant(*psi.psi, QgSampler{}, 2000, 7);
  check.note("Khat = " + g17(report.k_hat));
  check.expect(std::abs(report.k_hat - 1.0) <= 1e-9, "Khat differs from 1 beyond 1e-9");

  for (int count = 1; count <= 4; ++count) {
    const KnExact exact = k_n_exact(*psi.psi, count, 40000.0);
    check.expect(std::abs(exact.value - 1.0) <= 1e-9,
                 "k_" + std::to_string(count) + " differs from 1");
  }

  const std::vector<DemocracyRow> rows = democracy_profile(*psi.psi, {1, 2, 4, 8, 15}, 64, 7);
  double worst = 0.0;
  for (const DemocracyRow& row : rows) {
    const double expected = std::sqrt(static_cast<double>(row.count));
    worst = std::max({worst, std::abs(row.sup_est - expected), std::abs(row.inf_est - expected)});
  }
  check.note("democracy deviation from sqrt(N) = " + g17(worst));
  check.expect(worst <= 1e-9, "democracy profile deviates from sqrt(N)");
}

// ---------------------------------------------------------------- criterion 3
// Oracle equivalence: spectral projection norms vs brute-force maximization
// on 50 random grams (dim <= 8, all subsets); normal-equation n-term errors
// vs norm-only descent on dim <= 6.
void criterion_oracle_equivalence(Check& check) {
  Rng rng(501);
  double worst_proj = 0.0;
  for (int instance = 0; instance < 50; ++instance) {
    const int dim = 2 + static_cast<int>(rng.below(7)); // 2..8
    const MatrixXcd gram = oracle::random_gram(dim, rng);
    auto basis = identity_basis(std::make_shared<GramSpace>(gram));
    std::vector<int> comb;
    for (int m = 1; m <= dim; ++m) {
      comb = first_combination(m);
      do {
        const SupportSet set = SupportSet::from_indices(comb, dim);
        const double spectral = projection_norm(*basis, set).value;
        const double brute = oracle::projection_norm_bruteforce(gram, set, 10, 250);
        worst_proj = std::max(worst_proj, std::abs(spectral - brute));
      } while (next_combination(comb, dim));
    }
  }
  check.note("projection norm worst |spectral - bruteforce| = " + g17(worst_proj));
  check.expect(worst_proj <= 1e-6, "projection norm oracle disagreement beyond 1e-6");

  double worst_nterm = 0.0;
  for (int instance = 0; instance < 20; ++instance) {
    const int dim = 3 + static_cast<int>(rng.below(4)); // 3..6
    auto basis = identity_basis(std::make_shared<GramSpace>(oracle::random_gram(dim, rng)));
    CoeffVec v(dim);
    for (int j = 0; j < dim; ++j) v[j] = rng.cnormal();
    for (int count = 1; count < dim; ++count) {
      const NTermResult impl = best_nterm_error(*basis, v, count);
      double best_oracle = 1e300;
      std::vector<int> comb = first_combination(count);
      do {
        best_oracle = std::min(best_oracle, oracle::nterm_error_bruteforce(*basis, v, comb));
      } while (next_combination(comb, dim));
      worst_nterm = std::max(worst_nterm, std::abs(impl.value - best_oracle));
    }
  }
  check.note("n-term error worst |normal eq - dense search| = " + g17(worst_nterm));
  check.expect(worst_nterm <= 1e-6, "n-term oracle disagreement beyond 1e-6");
}

// ---------------------------------------------------------------- criterion 4
// Dirichlet norms: max/min of ||D_N|| / N^{(1-g)/2} below 3 over the dyadic
// grid for gamma in {+-0.5, +-0.9}; the gamma = 0 column exact to 1e-9.
void criterion_dirichlet(Check& check) {
  const std::vector<long> grid = {8, 16, 32, 64, 128, 256, 512, 1024};
  for (const double gamma : {0.5, -0.5, 0.9, -0.9}) {
    const std::vector<double> table = weight_coeff_table(-gamma, 2 * grid.back());
    double lo = 1e300;
    double hi = 0.0;
    for (const long n : grid) {
      const double count = static_cast<double>(2 * n + 1);
      double sum = count * table[0];
      for (long j = 1; j <= 2 * n; ++j) {
        sum += 2.0 * (count - static_cast<double>(j)) * table[static_cast<std::size_t>(j)];
      }
      const double ratio =
          std::sqrt(std::max(sum, 0.0)) / std::pow(static_cast<double>(n), 0.5 * (1.0 - gamma));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    check.note("gamma " + g17(gamma) + ": ratio spread " + g17(hi / lo));
    check.expect(hi / lo < 3.0, "ratio spread at gamma " + g17(gamma) + " reaches 3");
  }

  double worst_rel = 0.0;
  for (const long n : grid) {
    const double exact = std::sqrt(2.0 * std::numbers::pi * (2.0 * n + 1.0));
    const double computed = dirichlet_weighted_norm(n, 0.0);
    worst_rel = std::max(worst_rel, std::abs(computed - exact) / exact);
  }
  check.note("gamma 0 worst relative error = " + g17(worst_rel));
  check.expect(worst_rel <= 1e-9, "gamma 0 column off beyond 1e-9 relative");
}

// ---------------------------------------------------------------- criterion 5
// Rotated-pair growth: odd-block witness ratios at scales 8..512 fit a power
// law with exponent alpha +- 0.1 and R^2 >= 0.98, for alpha in {0.3,0.6,0.9}.
void criterion_p1bis_growth(Check& check) {
  const long top_scale = 512;
  for (const double alpha : {0.3, 0.6, 0.9}) {
    // || sum_{k<=m} e_k ||^2 in L^2(|t|^{a}) via the Toeplitz table, where the
    // enumeration 1, e^{it}, e^{-it}, ... maps k to trig_frequency(k-1).
    const std::vector<double> table_e = weight_coeff_table(-alpha, 2 * top_scale);
    const std::vector<double> table_f = weight_coeff_table(+alpha, 2 * top_scale);
    const double w0_e = table_e[0];
    const double w0_f = table_f[0];

    auto partial_sum_sq = [&](const std::vector<double>& table, double w0, long m) {
      double sum = 0.0;
      for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
          const long diff = std::labs(trig_frequency(static_cast<int>(i)) -
                                      trig_frequency(static_cast<int>(j)));
          sum += table[static_cast<std::size_t>(diff)] / w0;
        }
      }
      return sum;
    };

    std::vector<std::pair<double, double>> curve;
    for (long m = 8; m <= top_scale; m *= 2) {
      const double e_sq = partial_sum_sq(table_e, w0_e, m);
      const double f_sq = partial_sum_sq(table_f, w0_f, m);
      // x = sum of the first 2m rotated vectors, A = odd positions:
      // ratio^2 = (e_sq + f_sq) / (4 e_sq)
      curve.emplace_back(static_cast<double>(m), std::sqrt((e_sq + f_sq) / (4.0 * e_sq)));
    }
    const FitResult fit = fit_power_law(curve);
    check.note("alpha " + g17(alpha) + ": fitted exponent " + g17(fit.exponent) + ", R^2 " +
               g17(fit.r_squared));
    check.expect(std::abs(fit.exponent - alpha) <= 0.1,
                 "fitted exponent misses alpha beyond 0.1 at alpha " + g17(alpha));
    check.expect(fit.r_squared >= 0.98, "R^2 below 0.98 at alpha " + g17(alpha));

    // tie the closed-form evaluation to the basis machinery at small scale
    BasisPtr pair_basis = th2_inner_basis(alpha, 34);
    const KnRow row = k_n_lower(*pair_basis, 16, {WitnessMethod::odd_block}, 1);
    const double e_sq = partial_sum_sq(table_e, w0_e, 8);
    const double f_sq = partial_sum_sq(table_f, w0_f, 8);
    const double closed = std::sqrt((e_sq + f_sq) / (4.0 * e_sq));
    check.expect(std::abs(row.lower - closed) <= 1e-8,
                 "odd-block witness disagrees with the closed form at alpha " + g17(alpha));
  }
}

// ---------------------------------------------------------------- criterion 6
// Theorem-2 pipeline at alpha 0.9, kmax 9: polylog exponent >= 0.6, monotone
// dyadic ratios, and Khat(Psi) < 50 over 10^4 samples.
void criterion_th2(Check& check) {
  BasisPtr inner = th2_inner_basis(0.9, 9);
  const OlevskiiBasis olevskii = olevskii_basis(inner, 9);

  std::vector<std::pair<double, double>> curve;
  bool monotone = true;
  double previous = 0.0;
  for (long m = 8; m <= 512; m *= 2) {
    const KnhResult lifted = knh_witness(
        olevskii, m, {WitnessMethod::odd_block, WitnessMethod::exact_spectral}, 11);
    curve.emplace_back(static_cast<double>(m), lifted.witness.ratio);
    if (lifted.witness.ratio < previous - 1e-12) monotone = false;
    previous = lifted.witness.ratio;
  }
  const FitResult fit = fit_polylog_law(curve);
  check.note("polylog exponent " + g17(fit.exponent) + ", R^2 " + g17(fit.r_squared));
  check.expect(fit.exponent >= 0.6, "polylog exponent below 0.6");
  check.expect(monotone, "witness ratios not monotone over dyadic M");

  const GreedyReport report = estimate_qg_constant(*olevskii.psi, QgSampler{}, 10000, 23);
  check.note("Khat(Psi) = " + g17(report.k_hat) + " over 10^4 samples");
  check.expect(report.k_hat < 50.0, "Khat reached 50 (quasi-greedy sanity bound)");
  check.expect(report.k_hat >= 1.0, "Khat below 1");
}

// ---------------------------------------------------------------- criterion 7
// Babenko at alpha 0.25, maxfreq 64: sampled-max exponent <= 0.40, sign-
// partition lower exponent >= 0.15 (2000 sets per N, exact spectral norms).
// The lower point at each N is the median witness of five independent
// 512-trial searches: still an achieved (re-verifiable) ratio, with less
// Monte-Carlo noise in the regression.
void criterion_p2_upper(Check& check) {
  const double alpha = 0.25;
  const WeightedTrigBasis trig = gram_from_weighted_trig(alpha, 64);
  const BasisInstance& basis = *trig.basis;
  const int dim = basis.dim();

  std::vector<std::pair<double, double>> lower_curve;
  std::vector<std::pair<double, double>> sampled_curve;
  for (const long n : {8L, 16L, 32L, 64L}) { // dyadic grid starts at 8
    std::vector<double> ratios;
    for (int rep = 0; rep < 5; ++rep) {
      const SignSearchResult sign =
          sign_partition_witness(trig, n, 512, derive_seed(31, n, 0xBA + rep));
      ratios.push_back(sign.witness.ratio);
    }
    std::sort(ratios.begin(), ratios.end());
    lower_curve.emplace_back(static_cast<double>(n), ratios[ratios.size() / 2]);

    std::vector<double> values;
    fill_indexed(Exec{}, values, 2000, [&](std::int64_t t) {
      Rng rng(derive_seed(31, static_cast<std::uint64_t>(t), 0x200 + n));
      const int cap = static_cast<int>(std::min<long>(n, dim));
      const int size = (t % 2 == 0) ? cap : 1 + static_cast<int>(rng.below(cap));
      std::vector<int> pool(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) pool[static_cast<std::size_t>(j)] = j;
      for (int j = 0; j < size; ++j) {
        const int swap_with = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim - j)));
        std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(swap_with)]);
      }
      pool.resize(static_cast<std::size_t>(size));
      return projection_norm(basis, SupportSet::from_indices(std::move(pool), dim)).value;
    });
    double sampled_max = 0.0;
    for (const double value : values) sampled_max = std::max(sampled_max, value);
    sampled_curve.emplace_back(static_cast<double>(n), sampled_max);
  }

  const FitResult lower_fit = fit_power_law(lower_curve);
  const FitResult sampled_fit = fit_power_law(sampled_curve);
  check.note("lower exponent " + g17(lower_fit.exponent) + ", sampled-max exponent " +
             g17(sampled_fit.exponent));
  check.expect(sampled_fit.exponent <= 0.40, "sampled-max exponent above 0.40");
  check.expect(lower_fit.exponent >= 0.15, "sign-partition exponent below 0.15");
}

// ---------------------------------------------------------------- criterion 8
// Closed-form suite: branch agreements, alpha < 1 across the grids, weak
// parallelogram slacks above -1e-9 over 10^4 random pairs.
void criterion_closed_forms(Check& check) {
  const double k_at_half = 1.0 / std::sqrt(1.0 - 0.25); // delta(K) = 1/2
  const ExponentReport at_half = alpha_of_k(k_at_half);
  const double gap = std::abs(at_half.alpha - 0.5 * std::log2(3.0));
  check.note("branch gap at delta = 1/2: " + g17(gap));
  check.expect(gap <= 1e-12, "branches disagree at delta = 1/2 beyond 1e-12");

  for (const double kappa : {1.0, 2.0, 5.0}) {
    const double gap_p2 = std::abs(c_p_const(2.0, kappa) - (2.0 - 1.0 / (2.0 * kappa * kappa)));
    check.expect(gap_p2 <= 1e-14, "c_p branches disagree at p = 2, kappa " + g17(kappa));
  }

  for (double k_const = 1.0; k_const <= 100.0; k_const += 0.25) {
    const ExponentReport report = alpha_of_k(k_const);
    check.expect(report.alpha < 1.0 && report.one_minus_alpha > 0.0,
                 "alpha(K) reached 1 at K = " + g17(k_const));
    check.expect(report.alpha_besselian < 0.5, "besselian alpha reached 1/2");
  }
  for (double p = 1.01; p <= 10.0; p += 0.07) {
    for (double kappa = 1.0; kappa <= 100.0; kappa *= 1.6) {
      const ExponentReport report = alpha_p(std::min(p, 10.0), std::min(kappa, 100.0));
      // strict inequality certified through the full-precision gap; the
      // rounded alpha may collapse onto 1.0 at the extreme corner
      check.expect(report.one_minus_alpha > 0.0 && report.alpha <= 1.0,
                   "alpha(p,kappa) not below 1 at p " + g17(p) + ", kappa " + g17(kappa));
    }
  }

  Rng rng(2718);
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
  check.note("weak parallelogram min slack = " + g17(min_slack));
  check.expect(min_slack >= -1e-9, "weak parallelogram slack below -1e-9");
}

// ---------------------------------------------------------------- criterion 9
// c0 + l1 model: inner ratio equals sqrt(1+N^2)/2 to 1e-9 up to N = 256; the
// composite ratio grows by >= 1.5x from M = 2^4 to M = 2^9.
void criterion_seqspace(Check& check) {
  double worst = 0.0;
  for (long n = 1; n <= 256; n = (n < 4 ? n + 1 : n * 2)) {
    auto c0 = canonical_sequence_basis(static_cast<int>(n),
                                       std::numeric_limits<double>::infinity());
    auto l1 = canonical_sequence_basis(static_cast<int>(n), 1.0);
    BasisPtr pair_basis = rotated_pair_basis(*c0, *l1);
    CoeffVec x = CoeffVec::Ones(2 * n);
    std::vector<int> odd;
    for (long k = 0; k < n; ++k) odd.push_back(static_cast<int>(2 * k));
    const double ratio =
        witness_ratio(*pair_basis, SupportSet::from_indices(std::move(odd), 2 * static_cast<int>(n)), x);
    const double closed = std::sqrt(1.0 + static_cast<double>(n) * static_cast<double>(n)) / 2.0;
    worst = std::max(worst, std::abs(ratio - closed));
  }
  check.note("inner witness worst deviation = " + g17(worst));
  check.expect(worst <= 1e-9, "inner witness deviates from sqrt(1+N^2)/2 beyond 1e-9");

  auto c0 = canonical_sequence_basis(6, std::numeric_limits<double>::infinity());
  auto l1 = canonical_sequence_basis(6, 1.0);
  const OlevskiiBasis olevskii = olevskii_basis(rotated_pair_basis(*c0, *l1), 9);
  const KnhResult at_16 = knh_witness(olevskii, 1L << 4, {WitnessMethod::odd_block}, 3);
  const KnhResult at_512 = knh_witness(olevskii, 1L << 9, {WitnessMethod::odd_block}, 3);
  const double growth = at_512.witness.ratio / at_16.witness.ratio;
  check.note("ratio growth M=2^4 -> M=2^9: " + g17(growth));
  check.expect(growth >= 1.5, "composite ratio growth below 1.5x");
}

// --------------------------------------------------------------- criterion 10
// Determinism: identical seeds give byte-identical CSVs; stored witnesses
// re-verify to 1e-9.
void criterion_determinism(Check& check) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "qglab_acceptance";
  fs::remove_all(base);

  auto slurp = [](const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };

  ExperimentConfig config;
  config.seed = 424242;
  config.gammas = {0.0, 0.5, -0.9};
  config.n_grid = {8, 16, 32, 64, 128};

  config.out_dir = (base / "dir_a").string();
  run_dirichlet_table(config);
  config.out_dir = (base / "dir_b").string();
  run_dirichlet_table(config);
  check.expect(slurp(base / "dir_a" / "dirichlet.csv") == slurp(base / "dir_b" / "dirichlet.csv"),
               "dirichlet CSVs differ between identical runs");

  ExperimentConfig bab;
  bab.seed = 99;
  bab.alpha = 0.25;
  bab.maxfreq = 16;
  bab.n_grid = {2, 4, 8, 16};
  bab.trials = 128;
  bab.sample_sets = 200;
  bab.out_dir = (base / "bab_a").string();
  run_babenko_kn(bab);
  bab.out_dir = (base / "bab_b").string();
  run_babenko_kn(bab);
  check.expect(slurp(base / "bab_a" / "babenko_kn.csv") == slurp(base / "bab_b" / "babenko_kn.csv"),
               "babenko CSVs differ between identical runs");

  // witnesses stored in the CSV re-verify against a fresh model
  const WeightedTrigBasis trig = gram_from_weighted_trig(bab.alpha, bab.maxfreq);
  const CsvTable table = read_csv((base / "bab_a" / "babenko_kn.csv").string());
  const int ratio_col = table.column("lower_ratio");
  const int set_col = table.column("witness_A");
  const int x_col = table.column("witness_x");
  double worst = 0.0;
  for (const auto& row : table.rows) {
    const SupportSet set =
        decode_support(row[static_cast<std::size_t>(set_col)], trig.basis->dim());
    const CoeffVec x = decode_vector(row[static_cast<std::size_t>(x_col)]);
    const double stored = std::stod(row[static_cast<std::size_t>(ratio_col)]);
    worst = std::max(worst, std::abs(witness_ratio(*trig.basis, set, x) - stored));
  }
  check.note("witness re-verification worst deviation = " + g17(worst));
  check.expect(worst <= 1e-9, "stored witnesses fail to re-verify at 1e-9");

  // serial and openmp paths agree bit-for-bit
  ExperimentConfig serial = bab;
  serial.threads = 1;
  serial.out_dir = (base / "bab_serial").string();
  run_babenko_kn(serial);
  check.expect(slurp(base / "bab_a" / "babenko_kn.csv") ==
                   slurp(base / "bab_serial" / "babenko_kn.csv"),
               "serial and openmp runs differ");
}

} // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int number;
    std::string name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "exact identities (bonek, components, haar)", criterion_exact_identities},
      {2, "orthonormal degeneration", criterion_onb_degeneration},
      {3, "oracle equivalence (spectral / normal equations)", criterion_oracle_equivalence},
      {4, "weighted Dirichlet norm growth", criterion_dirichlet},
      {5, "rotated-pair witness growth", criterion_p1bis_growth},
      {6, "block-construction pipeline", criterion_th2},
      {7, "weighted trig upper/lower exponents", criterion_p2_upper},
      {8, "closed-form constants", criterion_closed_forms},
      {9, "c0+l1 model", criterion_seqspace},
      {10, "determinism and witness re-verification", criterion_determinism},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (!selected.empty() && !selected.count(criterion.number)) continue;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& err) {
      check.pass = false;
      check.detail << "  EXCEPTION: " << err.what() << "\n";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  [%2d] %s (%.1f s)\n", check.pass ? "PASS" : "FAIL", criterion.number,
                criterion.name.c_str(), seconds);
    std::fputs(check.detail.str().c_str(), stdout);
    if (!check.pass) ++failures;
  }
  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion/criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
