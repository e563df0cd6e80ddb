#include "qg/bounds.hpp"

#include <cmath>
#include <numbers>

namespace qg {

double delta_of_k(double k_const) {
  require(k_const >= 1.0, "delta_of_k: quasi-greedy constant must be >= 1");
  return std::sqrt(std::max(0.0, 1.0 - 1.0 / (k_const * k_const)));
}

ExponentReport alpha_of_k(double k_const) {
  ExponentReport report;
  report.delta = delta_of_k(k_const);
  const double d = report.delta;
  // 1-d evaluated as u/(1+d) with u = 1/K^2 keeps precision for large K
  const double one_minus_d = (1.0 / (k_const * k_const)) / (1.0 + d);
  const double first = 0.5 * (std::log2(1.0 + d) - std::log2(one_minus_d));
  const double second = 0.5 * (1.0 + std::log2(1.0 + d));
  if (first <= second) {
    report.alpha = first;
    report.branch = ExponentBranch::first;
    report.one_minus_alpha = 1.0 - first;
  } else {
    report.alpha = second;
    report.branch = ExponentBranch::second;
    // 1 - second = (1/2) log2(2/(1+d)) = (1/2) log1p((1-d)/(1+d)) / ln 2
    report.one_minus_alpha = 0.5 * std::log1p(one_minus_d / (1.0 + d)) / std::numbers::ln2;
  }
  report.alpha_besselian = 0.5 * std::log2(1.0 + d);
  return report;
}

PairCheck pair_inequality_check(const Space& space, const CoeffVec& x, const CoeffVec& y,
                                double delta) {
  require(space.is_hilbert(), "pair_inequality_check needs a hilbert space");
  require(dominates(x, y), "pair_inequality_check: x does not dominate y");
  require(delta >= 0.0 && delta < 1.0, "pair_inequality_check: delta out of [0,1)");

  const double nx = space.norm(x);
  const double ny = space.norm(y);
  const double sum_sq = nx * nx + ny * ny;
  const double ns = space.norm(x + y);
  const double mixed_sq = ns * ns;

  PairCheck check;
  check.lower_slack = mixed_sq - (1.0 - delta) * sum_sq;
  check.upper_slack = (1.0 + delta) * sum_sq - mixed_sq;
  check.r = sum_sq > 0.0 ? 2.0 * std::abs(space.inner(x, y)) / sum_sq : 0.0;
  return check;
}

KLowerResult infer_k_lower_from_pairs(const Space& space,
                                      const std::vector<std::pair<CoeffVec, CoeffVec>>& pairs) {
  require(!pairs.empty(), "infer_k_lower_from_pairs: empty pair list");
  KLowerResult result;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairCheck check = pair_inequality_check(space, pairs[i].first, pairs[i].second, 0.0);
    if (check.r >= 1.0) {
      throw numerical_error("infer_k_lower_from_pairs: r >= 1 is impossible in an "
                            "inner-product space (numerical fault)");
    }
    const double k_lower = 1.0 / std::sqrt(1.0 - check.r * check.r);
    if (k_lower > result.k_lower) {
      result.k_lower = k_lower;
      result.witness_pair = i;
    }
  }
  return result;
}

std::pair<double, double> lemma_l2_envelope(const std::vector<double>& norms_sq, double delta) {
  require(!norms_sq.empty(), "lemma_l2_envelope: empty chain");
  require(delta >= 0.0 && delta < 1.0, "lemma_l2_envelope: delta out of [0,1)");
  double total = 0.0;
  for (double value : norms_sq) {
    require(value >= 0.0, "lemma_l2_envelope: negative squared norm");
    total += value;
  }
  const double exponent = std::ceil(std::log2(static_cast<double>(norms_sq.size())));
  return {std::pow(1.0 - delta, exponent) * total, std::pow(1.0 + delta, exponent) * total};
}

EnvelopeCheck lemma_l2_envelope_check(const Space& space, const std::vector<CoeffVec>& chain,
                                      double delta) {
  require(!chain.empty(), "lemma_l2_envelope_check: empty chain");
  std::vector<double> norms_sq;
  CoeffVec sum = CoeffVec::Zero(chain.front().size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i + 1 < chain.size()) {
      require(dominates(chain[i], chain[i + 1]), "lemma_l2_envelope_check: chain not dominating");
    }
    const double n = space.norm(chain[i]);
    norms_sq.push_back(n * n);
    sum += chain[i];
  }
  const auto [lower, upper] = lemma_l2_envelope(norms_sq, delta);
  const double actual_norm = space.norm(sum);

  EnvelopeCheck check;
  check.lower = lower;
  check.upper = upper;
  check.actual = actual_norm * actual_norm;
  const double tol = 1e-12 * std::max(1.0, check.upper);
  check.inside = check.actual >= lower - tol && check.actual <= upper + tol;
  return check;
}

double c_p_const(double p, double kappa) {
  require(p > 1.0 && std::isfinite(p), "c_p_const: p must be in (1, infinity)");
  require(kappa >= 1.0, "c_p_const: kappa must be >= 1");
  if (p <= 2.0) return 2.0 - (p - 1.0) / (2.0 * kappa * kappa);
  return std::pow(2.0, p - 1.0) - 1.0 / (2.0 * std::pow(kappa, p));
}

ExponentReport alpha_p(double p, double kappa) {
  const double cp = c_p_const(p, kappa);
  ExponentReport report;
  report.c_p = cp;
  if (p <= 2.0) {
    // c_p = 2 (1 - y), y = (p-1)/(4 kappa^2): alpha = 1 + log1p(-y)/(2 ln 2)
    const double y = (p - 1.0) / (4.0 * kappa * kappa);
    report.one_minus_alpha = -std::log1p(-y) / (2.0 * std::numbers::ln2);
    report.alpha = 0.5 * (1.0 + std::log2(cp));
    report.branch = ExponentBranch::p_case_i;
  } else {
    // c_p = 2^{p-1} (1 - x), x = (2 kappa)^{-p}: alpha = 1 + log1p(-x)/(p ln 2)
    const double x = std::pow(2.0 * kappa, -p);
    report.one_minus_alpha = -std::log1p(-x) / (p * std::numbers::ln2);
    report.alpha = (1.0 + std::log2(cp)) / p;
    report.branch = ExponentBranch::p_case_ii;
  }
  return report;
}

ParallelogramCheck weak_parallelogram_check(double p, const CoeffVec& x, const CoeffVec& y,
                                            const SequenceSpace& space) {
  require(space.p() == p, "weak_parallelogram_check: space p does not match");
  require(p > 1.0 && std::isfinite(p), "weak_parallelogram_check: p must be in (1, infinity)");

  const double norm_sum = space.norm(x + y);
  const double norm_diff = space.norm(x - y);
  const double nx = space.norm(x);
  const double ny = space.norm(y);

  ParallelogramCheck check;
  if (p <= 2.0) {
    check.branch = ExponentBranch::p_case_i;
    check.slack = 2.0 * (nx * nx + ny * ny) - norm_sum * norm_sum -
                  (p - 1.0) * norm_diff * norm_diff;
  } else {
    check.branch = ExponentBranch::p_case_ii;
    check.slack = std::pow(2.0, p - 1.0) * (std::pow(nx, p) + std::pow(ny, p)) -
                  std::pow(norm_sum, p) - std::pow(norm_diff, p);
  }
  return check;
}

} // namespace qg
