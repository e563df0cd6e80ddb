#ifndef QG_QUADRATURE_HPP
#define QG_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "qg/common.hpp"
#include "qg/exec.hpp"

namespace qg {

// abs_tol sits above the Gauss-Kronrod estimate stagnation floor (~5e-12 for
// the oscillatory weight tails); the actual error is typically far smaller.
struct QuadConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  int max_intervals = 20000;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]; bisects the worst interval until
// the summed error estimate meets max(abs_tol, rel_tol*|value|) or the
// interval budget runs out.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadConfig& cfg = {});

// Fourier coefficient of the weight |t|^{-gamma} on [-pi,pi]:
//     w_hat(k) = int_{-pi}^{pi} |t|^{-gamma} e^{-ikt} dt = 2 int_0^pi t^{-gamma} cos(kt) dt.
// Real and even in k. The endpoint singularity on [0, 1/max(|k|,1)] is summed
// as a power series; the oscillatory tail is integrated over half-period
// panels with adaptive refinement. Throws numerical_error (with the achieved
// error estimate in the message) if the tolerance cannot be met.
double fourier_coeff_weight(double gamma, long k, const QuadConfig& cfg = {});

// Same, but returns the achieved error estimate instead of converting
// non-convergence into a throw.
QuadResult fourier_coeff_weight_checked(double gamma, long k, const QuadConfig& cfg = {});

// Table [w_hat(0), ..., w_hat(kmax)]; entries are independent, computed under exec.
std::vector<double> weight_coeff_table(double gamma, long kmax, const QuadConfig& cfg = {},
                                       const Exec& exec = {});

} // namespace qg

#endif
