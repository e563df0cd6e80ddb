// qglab: numerical experiments on conditional quasi-greedy bases.
#include <cstdio>
#include <deque>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qg/bounds.hpp"
#include "qg/conditionality.hpp"
#include "qg/config.hpp"
#include "qg/csv.hpp"
#include "qg/experiments.hpp"
#include "qg/greedy.hpp"
#include "qg/olevskii.hpp"
#include "qg/rng.hpp"
#include "qg/spaces.hpp"

namespace {

using qg::ExperimentConfig;
using qg::ExperimentResult;

struct CommonFlags {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_dir;
  int threads = -1;
  bool csv_on = true;
  bool svg_on = false;

  CLI::Option* config_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
  CLI::Option* csv_opt = nullptr;
  CLI::Option* svg_opt = nullptr;
};

struct ParamFlags {
  double alpha = 0.0;
  std::vector<double> gammas;
  long maxfreq = 0;
  int kmax = 0;
  std::vector<long> n_grid;
  long trials = 0;
  long qg_trials = 0;
  long sample_sets = 0;
  double subset_budget = 0.0;
  std::string gram_file;
  std::string inner;
  bool force_exact = false;

  CLI::Option* alpha_opt = nullptr;
  CLI::Option* gammas_opt = nullptr;
  CLI::Option* maxfreq_opt = nullptr;
  CLI::Option* kmax_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* trials_opt = nullptr;
  CLI::Option* qg_trials_opt = nullptr;
  CLI::Option* sample_sets_opt = nullptr;
  CLI::Option* subset_budget_opt = nullptr;
  CLI::Option* gram_file_opt = nullptr;
  CLI::Option* inner_opt = nullptr;
  CLI::Option* force_exact_opt = nullptr;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  flags.config_opt = cmd->add_option("--config", flags.config_path, "JSON config file");
  flags.seed_opt = cmd->add_option("--seed", flags.seed, "RNG seed (required here or in config)");
  flags.out_opt = cmd->add_option("--out", flags.out_dir, "output directory");
  flags.threads_opt =
      cmd->add_option("--threads", flags.threads, "worker threads (1 = serial reference)");
  flags.csv_opt = cmd->add_flag("--csv,!--no-csv", flags.csv_on, "write CSV outputs");
  flags.svg_opt = cmd->add_flag("--svg,!--no-svg", flags.svg_on, "write SVG plots");
}

void add_param_flags(CLI::App* cmd, ParamFlags& params) {
  params.alpha_opt = cmd->add_option("--alpha", params.alpha, "weight/growth exponent");
  params.gammas_opt = cmd->add_option("--gamma", params.gammas, "weight exponents gamma");
  params.maxfreq_opt = cmd->add_option("--maxfreq", params.maxfreq, "largest trig frequency");
  params.kmax_opt = cmd->add_option("--kmax", params.kmax, "number of blocks");
  params.n_opt = cmd->add_option("--N", params.n_grid, "explicit N grid");
  params.trials_opt = cmd->add_option("--trials", params.trials, "search trials");
  params.qg_trials_opt =
      cmd->add_option("--qg-trials", params.qg_trials, "quasi-greedy sampling trials");
  params.sample_sets_opt =
      cmd->add_option("--sample-sets", params.sample_sets, "sampled subsets per N");
  params.subset_budget_opt =
      cmd->add_option("--subset-budget", params.subset_budget, "exhaustive enumeration budget");
  params.gram_file_opt = cmd->add_option("--gram-file", params.gram_file,
                                         "plain-text gram matrix (first line d, then d rows)");
  params.inner_opt = cmd->add_option("--inner", params.inner,
                                     "inner basis: onb | babenko | pair-trig | pair-seq");
  params.force_exact_opt =
      cmd->add_flag("--force-exact", params.force_exact, "fail instead of falling back to bounds");
}

ExperimentConfig assemble_config(const std::string& experiment, const CommonFlags& flags,
                                 const ParamFlags& params) {
  ExperimentConfig config;
  if (flags.config_opt->count() > 0) {
    config = qg::load_config(flags.config_path, experiment);
  }
  config.experiment = experiment;

  if (flags.seed_opt->count() > 0) config.seed = flags.seed;
  if (flags.out_opt->count() > 0) config.out_dir = flags.out_dir;
  if (flags.threads_opt->count() > 0) config.threads = flags.threads;
  if (flags.csv_opt->count() > 0) config.write_csv = flags.csv_on;
  if (flags.svg_opt->count() > 0) config.write_svg = flags.svg_on;

  if (params.alpha_opt->count() > 0) config.alpha = params.alpha;
  if (params.gammas_opt->count() > 0) config.gammas = params.gammas;
  if (params.maxfreq_opt->count() > 0) config.maxfreq = params.maxfreq;
  if (params.kmax_opt->count() > 0) config.kmax = params.kmax;
  if (params.n_opt->count() > 0) config.n_grid = params.n_grid;
  if (params.trials_opt->count() > 0) config.trials = params.trials;
  if (params.qg_trials_opt->count() > 0) config.qg_trials = params.qg_trials;
  if (params.sample_sets_opt->count() > 0) config.sample_sets = params.sample_sets;
  if (params.subset_budget_opt->count() > 0) config.subset_budget = params.subset_budget;
  if (params.gram_file_opt->count() > 0) config.gram_file = params.gram_file;
  if (params.inner_opt->count() > 0) config.inner = params.inner;
  if (params.force_exact_opt->count() > 0) config.force_exact = params.force_exact;
  return config;
}

void report(const ExperimentResult& result) {
  for (const std::string& note : result.notes) std::cout << "  " << note << "\n";
  for (const std::string& path : result.outputs) std::cout << "  wrote " << path << "\n";
  if (result.failed_checks > 0) {
    std::cout << "  " << result.failed_checks << " embedded check(s) FAILED\n";
  }
}

int selftest() {
  int failures = 0;
  auto check = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  {
    bool ok = true;
    for (int k = 1; k <= 8 && ok; ++k) {
      const qg::HaarMatrix haar = qg::haar_matrix(k);
      const int size = 1 << k;
      ok = (haar.entries.transpose() * haar.entries - qg::MatrixXd::Identity(size, size))
               .cwiseAbs()
               .maxCoeff() < 1e-12;
    }
    check("haar matrices orthogonal (k <= 8)", ok);
  }

  {
    const qg::OlevskiiBasis psi = qg::olevskii_basis(qg::canonical_sequence_basis(4, 2.0), 4);
    qg::Rng rng(1);
    double worst = 0.0;
    for (int k = 1; k <= 4; ++k) {
      for (int rep = 0; rep < 25; ++rep) {
        std::vector<int> subset;
        for (int l = 0; l < psi.layout.block_size(k); ++l) {
          if (rng.uniform() < 0.5) subset.push_back(l);
        }
        const auto [lhs, rhs] = qg::verify_bonek(
            psi, k, qg::SupportSet::from_indices(subset, psi.layout.block_size(k)));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    check("block projection identity", worst < 1e-9);

    const double gram_dev =
        (psi.psi->basis_gram() - qg::MatrixXcd::Identity(30, 30)).cwiseAbs().maxCoeff();
    check("orthonormal degeneration (gram = I)", gram_dev < 1e-10);

    const qg::GreedyReport report =
        qg::estimate_qg_constant(*psi.psi, qg::QgSampler{}, 200, 42);
    check("orthonormal degeneration (Khat = 1)", std::abs(report.k_hat - 1.0) < 1e-9);
  }

  {
    const double k_at_half = 1.0 / std::sqrt(1.0 - 0.25);
    const qg::ExponentReport at_half = qg::alpha_of_k(k_at_half);
    check("alpha branch agreement at delta = 1/2",
          std::abs(at_half.alpha - 0.5 * std::log2(3.0)) < 1e-12);
    bool cp_ok = true;
    for (const double kappa : {1.0, 2.0, 5.0}) {
      cp_ok = cp_ok && std::abs(qg::c_p_const(2.0, kappa) -
                                (2.0 - 1.0 / (2.0 * kappa * kappa))) < 1e-14;
    }
    check("c_p branch agreement at p = 2", cp_ok);
  }

  {
    // determinism smoke test: identical seeds give identical weight tables
    const std::vector<double> a = qg::weight_coeff_table(0.5, 16, {}, qg::Exec::openmp());
    const std::vector<double> b = qg::weight_coeff_table(0.5, 16, {}, qg::Exec::serial());
    check("serial/openmp weight tables identical", a == b);
  }

  std::cout << (failures == 0 ? "selftest OK" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for conditionality constants of quasi-greedy bases"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd;
    CommonFlags common;
    ParamFlags params;
    ExperimentResult (*runner)(const ExperimentConfig&);
  };

  // deque: CLI11 stores pointers to the flag fields, so they must not move
  std::deque<Sub> subs;
  auto add_sub = [&](const std::string& name, const std::string& description,
                     ExperimentResult (*runner)(const ExperimentConfig&)) {
    subs.push_back(Sub{app.add_subcommand(name, description), {}, {}, runner});
    Sub& sub = subs.back();
    add_common_flags(sub.cmd, sub.common);
    add_param_flags(sub.cmd, sub.params);
  };

  add_sub("dirichlet", "weighted Dirichlet-kernel norm table", qg::run_dirichlet_table);
  add_sub("babenko", "weighted trigonometric system: k_N lower/upper curves", qg::run_babenko_kn);
  add_sub("th2", "block-construction pipeline over the rotated trig pair", qg::run_th2_pipeline);
  add_sub("seqspace", "c0+l1 rotated basis and its block construction", qg::run_seqspace_kn);
  add_sub("bounds", "closed-form constants and inequality checks", qg::run_bounds_report);
  add_sub("olevskii-build", "build a block basis and verify its identities",
          qg::run_olevskii_build);
  add_sub("kn", "conditionality constants for an ad-hoc gram matrix", qg::run_kn_adhoc);
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "fast internal consistency checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest_cmd->parsed()) return selftest();
    for (Sub& sub : subs) {
      if (!sub.cmd->parsed()) continue;
      const ExperimentConfig config =
          assemble_config(sub.cmd->get_name(), sub.common, sub.params);
      const std::uint64_t seed = config.required_seed();
      std::cout << sub.cmd->get_name() << " (seed " << seed << ")\n";
      const ExperimentResult result = sub.runner(config);
      report(result);
      return result.failed_checks == 0 ? 0 : 2;
    }
  } catch (const qg::validation_error& err) {
    std::cerr << "validation error: " << err.what() << "\n";
    return 1;
  } catch (const qg::budget_error& err) {
    std::cerr << "budget refusal: " << err.what() << "\n";
    return 3;
  } catch (const qg::numerical_error& err) {
    std::cerr << "numerical failure: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
