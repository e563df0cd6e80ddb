#ifndef QG_EXPERIMENTS_HPP
#define QG_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "qg/basis.hpp"
#include "qg/config.hpp"
#include "qg/quadrature.hpp"

namespace qg {

struct ExperimentResult {
  std::vector<std::string> outputs; // files written
  std::vector<std::string> notes;   // summary lines (budget refusals, fits, checks)
  int failed_checks = 0;            // embedded consistency checks that did not hold
};

// Inner system of the pipeline: the rotated pair over the trigonometric
// systems in L^2(|t|^{alpha} dt) and L^2(|t|^{-alpha} dt), sized to at least
// min_dim elements. Exposed so stored witnesses can be re-verified.
BasisPtr th2_inner_basis(double alpha, int min_dim, const QuadConfig& quad = {},
                         const Exec& exec = {});

ExperimentResult run_dirichlet_table(const ExperimentConfig& config);
ExperimentResult run_babenko_kn(const ExperimentConfig& config);
ExperimentResult run_th2_pipeline(const ExperimentConfig& config);
ExperimentResult run_seqspace_kn(const ExperimentConfig& config);
ExperimentResult run_bounds_report(const ExperimentConfig& config);
ExperimentResult run_olevskii_build(const ExperimentConfig& config);
ExperimentResult run_kn_adhoc(const ExperimentConfig& config);

} // namespace qg

#endif
