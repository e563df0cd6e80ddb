#ifndef QG_CONFIG_HPP
#define QG_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qg/exec.hpp"

namespace qg {

// One flat document drives every experiment; the CLI overrides individual
// fields (precedence: flag > config file > default). The seed is mandatory.
struct ExperimentConfig {
  std::string experiment;

  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  int threads = 0; // 0 = all cores, 1 = serial reference path
  bool write_csv = true;
  bool write_svg = false;

  // shared numeric parameters
  double alpha = 0.25;
  std::vector<double> gammas = {0.0, 0.5, -0.5, 0.9, -0.9};
  long maxfreq = 64;
  int kmax = 9;
  std::vector<long> n_grid;    // experiment-specific dyadic default when empty
  long trials = 512;           // sign-search / democracy trials
  long qg_trials = 10000;      // estimate_qg_constant samples
  long sample_sets = 2000;     // sampled projection sets per N
  double subset_budget = 2e5;  // exhaustive k_N budget
  double quad_rel_tol = 1e-8;
  double quad_abs_tol = 1e-10;

  // closed-form report grids
  std::vector<double> k_grid;
  std::vector<double> p_grid;
  std::vector<double> kappa_grid;

  // ad-hoc gram input / olevskii-build
  std::string gram_file;
  std::string inner = "onb"; // onb | babenko | pair-trig | pair-seq
  bool force_exact = false;

  Exec exec() const {
    if (threads == 1) return Exec::serial();
    return Exec::openmp(threads);
  }

  std::uint64_t required_seed() const;
};

// Loads a JSON config document. Top-level keys fill the shared fields; an
// object under the experiment's own name overrides them.
ExperimentConfig load_config(const std::string& path, const std::string& experiment);

// Parses the flat key set from a JSON object held in `text` (exposed for tests).
ExperimentConfig parse_config_text(const std::string& text, const std::string& experiment);

} // namespace qg

#endif
