#ifndef QG_COMMON_HPP
#define QG_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qg {

using Complex = std::complex<double>;
using VectorXd = Eigen::VectorXd;
using VectorXcd = Eigen::VectorXcd;
using MatrixXd = Eigen::MatrixXd;
using MatrixXcd = Eigen::MatrixXcd;

// Rejected inputs (bad parameters, violated preconditions). CLI exit code 1.
class validation_error : public std::invalid_argument {
public:
  explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical failure (factorization breakdown, quadrature non-convergence). CLI exit code 2.
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation was refused because it would exceed a configured budget. CLI exit code 3.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw validation_error(msg);
}

} // namespace qg

#endif
