#include <doctest.h>

#include <cmath>

#include "qg/olevskii.hpp"
#include "qg/rng.hpp"
#include "qg/spaces.hpp"

using namespace qg;

TEST_CASE("block layout recurrence") {
  const BlockLayout layout = block_layout(4);
  CHECK(layout.n[1] == 0);
  CHECK(layout.n[2] == 1);
  CHECK(layout.n[3] == 4);
  CHECK(layout.n[4] == 11);
  for (int k = 1; k <= 4; ++k) {
    CHECK(layout.n[static_cast<std::size_t>(k) + 1] - layout.n[static_cast<std::size_t>(k)] + 1 ==
          layout.block_size(k));
  }
  CHECK(block_layout(3).psi_dim() == 14);
  CHECK(layout.psi_dim() == 30);
  CHECK(layout.kmax + layout.e_dim() == layout.psi_dim());

  // index maps are inverse to each other
  for (long idx = 0; idx < layout.psi_dim(); ++idx) {
    const auto [k, l] = layout.block_of(idx);
    CHECK(layout.psi_index(k, l) == idx);
  }
  CHECK_THROWS_AS(block_layout(0), validation_error);
}

TEST_CASE("haar matrices") {
  const HaarMatrix h1 = haar_matrix(1);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(h1.entries(0, 0) == doctest::Approx(s));
  CHECK(h1.entries(1, 0) == doctest::Approx(s));
  CHECK(h1.entries(0, 1) == doctest::Approx(s));
  CHECK(h1.entries(1, 1) == doctest::Approx(-s));

  CHECK(haar_matrix(2).entries.col(0).isConstant(0.5));

  for (int k = 1; k <= 10; ++k) {
    const HaarMatrix haar = haar_matrix(k);
    const int size = 1 << k;
    CHECK((haar.entries.transpose() * haar.entries - MatrixXd::Identity(size, size))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    for (int col = 1; col < size; ++col) {
      CHECK(std::abs(haar.entries.col(col).sum()) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(haar_matrix(0), validation_error);
  CHECK_THROWS_AS(haar_matrix(21), validation_error);
}

namespace {

OlevskiiBasis onb_olevskii(int kmax, int inner_dim) {
  auto inner = canonical_sequence_basis(inner_dim, 2.0);
  return olevskii_basis(inner, kmax);
}

} // namespace

TEST_CASE("olevskii basis over an orthonormal inner basis is orthonormal") {
  const OlevskiiBasis psi = onb_olevskii(4, 4);
  CHECK(psi.psi->dim() == 30);
  CHECK((psi.psi->basis_gram() - MatrixXcd::Identity(30, 30)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("psi block sums collapse to the inner vectors") {
  const OlevskiiBasis psi = onb_olevskii(4, 6); // inner dimension above kmax
  for (int k = 1; k <= 4; ++k) {
    CoeffVec block_ones = CoeffVec::Zero(psi.layout.psi_dim());
    const long base = psi.layout.psi_index(k, 1);
    for (int l = 0; l < psi.layout.block_size(k); ++l) block_ones[base + l] = 1.0;
    const CoeffVec ref = psi.psi->to_reference(block_ones);
    // sum_l psi_{k,l} = 2^{k/2} x_k: x-part concentrated at coordinate k-1
    for (int j = 0; j < 4; ++j) {
      const double expected = (j == k - 1) ? std::pow(2.0, 0.5 * k) : 0.0;
      CHECK(std::abs(ref[j] - Complex(expected, 0)) <= 1e-12);
    }
    CHECK(ref.tail(psi.layout.e_dim()).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // each psi_{k,l} has x_k coefficient 2^{-k/2}
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; l <= psi.layout.block_size(k); ++l) {
      const long col = psi.layout.psi_index(k, l);
      CHECK(std::abs(psi.psi->change_of_basis()(k - 1, col) -
                     Complex(std::pow(2.0, -0.5 * k), 0)) <= 1e-14);
    }
  }
}

TEST_CASE("olevskii basis rejects short inner bases") {
  CHECK_THROWS_AS(onb_olevskii(5, 4), validation_error);
}

TEST_CASE("project_components identities") {
  const OlevskiiBasis psi = onb_olevskii(4, 4);
  const BlockLayout& layout = psi.layout;

  SUBCASE("unit vector at (k,l)") {
    const int k = 3, l = 2;
    CoeffVec v = CoeffVec::Zero(layout.psi_dim());
    v[layout.psi_index(k, l)] = 1.0;
    const ComponentSplit split = project_components(psi, v);
    CHECK(std::abs(split.lambda[k - 1] - Complex(std::pow(2.0, -1.5), 0)) <= 1e-14);
    for (int lp = 1; lp <= layout.block_size(k); ++lp) {
      const Complex expected = (lp == l ? 1.0 : 0.0) - std::pow(2.0, -k);
      CHECK(std::abs(split.eta[layout.psi_index(k, lp)] - expected) <= 1e-14);
    }
  }

  SUBCASE("full block of ones") {
    const int k = 4;
    CoeffVec v = CoeffVec::Zero(layout.psi_dim());
    for (int l = 1; l <= layout.block_size(k); ++l) v[layout.psi_index(k, l)] = 1.0;
    const ComponentSplit split = project_components(psi, v);
    CHECK(std::abs(split.lambda[k - 1] - Complex(std::pow(2.0, 0.5 * k), 0)) <= 1e-12);
    CHECK(split.eta.cwiseAbs().maxCoeff() <= 1e-13);
  }

  SUBCASE("random vectors reconstruct exactly") {
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
      CoeffVec v(layout.psi_dim());
      for (long j = 0; j < v.size(); ++j) v[j] = rng.cnormal();
      const ComponentSplit split = project_components(psi, v);
      double worst = 0.0;
      for (int k = 1; k <= layout.kmax; ++k) {
        for (int l = 1; l <= layout.block_size(k); ++l) {
          const long idx = layout.psi_index(k, l);
          const Complex recon =
              std::pow(2.0, -0.5 * k) * split.lambda[k - 1] + split.eta[idx];
          worst = std::max(worst, std::abs(v[idx] - recon));
        }
      }
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("bonek identity") {
  const OlevskiiBasis psi = onb_olevskii(4, 4);

  SUBCASE("closed-form instances") {
    // k=3, |L|=3 -> 3 (1 - 3/8) = 15/8
    const auto [lhs, rhs] =
        verify_bonek(psi, 3, SupportSet::from_indices({0, 3, 5}, 8));
    CHECK(rhs == doctest::Approx(15.0 / 8.0));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }

  SUBCASE("full block and singleton") {
    const auto [lhs_full, rhs_full] = verify_bonek(psi, 3, SupportSet::full(8));
    CHECK(rhs_full == doctest::Approx(0.0));
    CHECK(std::abs(lhs_full) <= 1e-12);

    const auto [lhs_one, rhs_one] = verify_bonek(psi, 3, SupportSet::from_indices({4}, 8));
    CHECK(rhs_one == doctest::Approx(1.0 - 1.0 / 8.0));
    CHECK(lhs_one == doctest::Approx(rhs_one).epsilon(1e-12));
  }

  SUBCASE("random subsets, all blocks, arbitrary (non-orthonormal) inner basis") {
    const WeightedTrigBasis trig = gram_from_weighted_trig(0.25, 4);
    const OlevskiiBasis psi_trig = olevskii_basis(trig.basis, 4);
    Rng rng(17);
    for (int k = 1; k <= 4; ++k) {
      for (int rep = 0; rep < 50; ++rep) {
        std::vector<int> subset;
        for (int l = 0; l < psi_trig.layout.block_size(k); ++l) {
          if (rng.uniform() < 0.5) subset.push_back(l);
        }
        const auto [lhs, rhs] = verify_bonek(
            psi_trig, k, SupportSet::from_indices(subset, psi_trig.layout.block_size(k)));
        CHECK(std::abs(lhs - rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("lift_to_psi matches the x-block identity") {
  const OlevskiiBasis psi = onb_olevskii(3, 3);
  CoeffVec inner_coeffs(3);
  inner_coeffs << Complex(1, 0), Complex(0, 2), Complex(-0.5, 0);
  const CoeffVec lifted = lift_to_psi(psi, inner_coeffs);
  const CoeffVec ref = psi.psi->to_reference(lifted);
  for (int j = 0; j < 3; ++j) CHECK(std::abs(ref[j] - inner_coeffs[j]) <= 1e-12);
  CHECK(ref.tail(psi.layout.e_dim()).cwiseAbs().maxCoeff() <= 1e-12);

  CoeffVec bad(4);
  bad << 1.0, 0.0, 0.0, 1.0;
  const OlevskiiBasis psi4 = onb_olevskii(3, 4);
  CHECK_THROWS_AS(lift_to_psi(psi4, bad), validation_error);
}
