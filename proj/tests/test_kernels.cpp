// The OpenMP kernels against their serial reference: results must be
// bit-identical (per-index work, order-fixed reductions).
#include <doctest.h>

#include "qg/conditionality.hpp"
#include "qg/greedy.hpp"
#include "qg/quadrature.hpp"
#include "qg/rng.hpp"
#include "oracles.hpp"

using namespace qg;

TEST_CASE("weight table: serial == openmp") {
  const std::vector<double> serial = weight_coeff_table(0.4, 48, {}, Exec::serial());
  const std::vector<double> parallel = weight_coeff_table(0.4, 48, {}, Exec::openmp());
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) CHECK(serial[k] == parallel[k]);
}

TEST_CASE("k_n_exact scan: serial == openmp") {
  Rng rng(19);
  auto basis = identity_basis(std::make_shared<GramSpace>(oracle::random_gram(7, rng)));
  const KnExact serial = k_n_exact(*basis, 3, 1e6, Exec::serial());
  const KnExact parallel = k_n_exact(*basis, 3, 1e6, Exec::openmp());
  CHECK(serial.value == parallel.value);
  CHECK(serial.argmax == parallel.argmax);
}

TEST_CASE("sign search: serial == openmp") {
  const WeightedTrigBasis trig = gram_from_weighted_trig(0.25, 16);
  const SignSearchResult serial = sign_partition_witness(trig, 16, 128, 77, Exec::serial());
  const SignSearchResult parallel = sign_partition_witness(trig, 16, 128, 77, Exec::openmp());
  CHECK(serial.witness.ratio == parallel.witness.ratio);
  CHECK(serial.mean_sq_norm == parallel.mean_sq_norm);
  CHECK(serial.min_sq_norm == parallel.min_sq_norm);
  CHECK(serial.witness.set == parallel.witness.set);
}

TEST_CASE("qg sampling scan: serial == openmp") {
  const WeightedTrigBasis trig = gram_from_weighted_trig(0.2, 6);
  const GreedyReport serial = estimate_qg_constant(*trig.basis, QgSampler{}, 200, 5, Exec::serial());
  const GreedyReport parallel = estimate_qg_constant(*trig.basis, QgSampler{}, 200, 5, Exec::openmp());
  CHECK(serial.k_hat == parallel.k_hat);
  CHECK(serial.kappa_hat == parallel.kappa_hat);
  CHECK(serial.witnesses.front().x == parallel.witnesses.front().x);
}

TEST_CASE("democracy scan: serial == openmp") {
  const OlevskiiBasis psi = olevskii_basis(canonical_sequence_basis(4, 2.0), 4);
  const auto serial = democracy_profile(*psi.psi, {4, 12}, 40, 21, Exec::serial());
  const auto parallel = democracy_profile(*psi.psi, {4, 12}, 40, 21, Exec::openmp());
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].sup_est == parallel[i].sup_est);
    CHECK(serial[i].inf_est == parallel[i].inf_est);
  }
}

TEST_CASE("random-search witnesses: serial == openmp") {
  const WeightedTrigBasis trig = gram_from_weighted_trig(0.3, 6);
  const KnRow serial =
      k_n_lower(*trig.basis, 4, {WitnessMethod::random_search}, 33, Exec::serial());
  const KnRow parallel =
      k_n_lower(*trig.basis, 4, {WitnessMethod::random_search}, 33, Exec::openmp());
  CHECK(serial.lower == parallel.lower);
  CHECK(serial.best.set == parallel.best.set);
}
