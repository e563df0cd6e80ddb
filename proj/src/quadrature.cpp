#include "qg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

namespace qg {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1] (QUADPACK values).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& other) const { return error < other.error; }
};

Interval gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double kronrod = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double offset = half * kKronrodNodes[i];
    const double fsum = (i == 7) ? f(mid) : f(mid - offset) + f(mid + offset);
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum; // G7 nodes interleave K15's
  }
  kronrod *= half;
  gauss *= half;
  return Interval{lo, hi, kronrod, std::abs(kronrod - gauss)};
}

// Adaptive refinement starting from the partition given by `breaks`.
QuadResult integrate_partitioned(const std::function<double(double)>& f,
                                 const std::vector<double>& breaks, const QuadConfig& cfg) {
  QuadResult out;
  std::priority_queue<Interval> queue;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Interval iv = gk15(f, breaks[i], breaks[i + 1]);
    total += iv.value;
    error += iv.error;
    queue.push(iv);
    out.evaluations += 15;
  }

  int intervals = static_cast<int>(breaks.size()) - 1;
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
         intervals < cfg.max_intervals) {
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) { // machine resolution reached
      queue.push(Interval{worst.a, worst.b, worst.value, 0.0});
      error -= worst.error;
      continue;
    }
    Interval left = gk15(f, worst.a, mid);
    Interval right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }

  // Re-sum over the final partition; incremental updates accumulate cancellation.
  total = 0.0;
  error = 0.0;
  while (!queue.empty()) {
    total += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }

  out.value = total;
  out.error_estimate = error;
  out.converged = error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
  return out;
}

// Head integral 2*int_0^eps t^{-gamma} cos(kt) dt by termwise integration of
// the cosine series; with eps <= 1/|k| the terms decay like 1/(2j)!.
double singular_head(double gamma, double k, double eps) {
  double sum = 0.0;
  const double k2 = k * k;
  const double eps2 = eps * eps;
  double power = std::pow(eps, 1.0 - gamma); // running eps^{2j+1-gamma}
  double scale = 1.0;                        // running (-1)^j k^{2j} / (2j)!
  for (int j = 0; j < 64; ++j) {
    const double term = scale * power / (2 * j + 1 - gamma);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    scale *= -k2 / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
    power *= eps2;
  }
  return 2.0 * sum;
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadConfig& cfg) {
  require(a <= b, "integrate_adaptive: reversed interval");
  return integrate_partitioned(f, {a, b}, cfg);
}

QuadResult fourier_coeff_weight_checked(double gamma, long k, const QuadConfig& cfg) {
  require(std::abs(gamma) < 1.0, "fourier_coeff_weight: |gamma| must be < 1");

  QuadResult out;
  if (gamma == 0.0) { // plain Lebesgue measure: exact orthogonality
    out.value = (k == 0) ? 2.0 * kPi : 0.0;
    return out;
  }
  const long kk = std::labs(k);
  if (kk == 0) {
    out.value = 2.0 * std::pow(kPi, 1.0 - gamma) / (1.0 - gamma);
    return out;
  }

  const double kd = static_cast<double>(kk);
  const double eps = 1.0 / kd;
  const double head = singular_head(gamma, kd, eps);

  // Tail partition at the zeros of cos(k t) inside [eps, pi].
  std::vector<double> breaks;
  breaks.push_back(eps);
  const double half_period = kPi / kd;
  double zero = 0.5 * half_period;
  while (zero <= eps) zero += half_period;
  for (; zero < kPi; zero += half_period) breaks.push_back(zero);
  breaks.push_back(kPi);

  const auto integrand = [gamma, kd](double t) { return std::pow(t, -gamma) * std::cos(kd * t); };
  QuadConfig tail_cfg = cfg;
  tail_cfg.abs_tol = 0.5 * cfg.abs_tol;
  QuadResult tail = integrate_partitioned(integrand, breaks, tail_cfg);

  out.value = head + 2.0 * tail.value;
  out.error_estimate = 2.0 * tail.error_estimate;
  out.evaluations = tail.evaluations;
  out.converged = out.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
  return out;
}

double fourier_coeff_weight(double gamma, long k, const QuadConfig& cfg) {
  const QuadResult r = fourier_coeff_weight_checked(gamma, k, cfg);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "fourier_coeff_weight(gamma=" << gamma << ", k=" << k
        << ") did not reach tolerance: value " << r.value << ", achieved error estimate "
        << r.error_estimate;
    throw numerical_error(msg.str());
  }
  return r.value;
}

std::vector<double> weight_coeff_table(double gamma, long kmax, const QuadConfig& cfg,
                                       const Exec& exec) {
  require(kmax >= 0, "weight_coeff_table: kmax must be nonnegative");
  std::vector<double> table;
  fill_indexed(exec, table, kmax + 1,
               [&](std::int64_t k) { return fourier_coeff_weight(gamma, k, cfg); });
  return table;
}

} // namespace qg
