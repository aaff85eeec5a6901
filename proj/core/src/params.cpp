#include "rsgs/params.hpp"

#include <cmath>
#include <sstream>

#include "rsgs/errors.hpp"

namespace rsgs {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NonFiniteSample: return "NonFiniteSample";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BoundaryLeak: return "BoundaryLeak";
    case ErrorCode::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::SingularConfiguration: return "SingularConfiguration";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

double unit_sphere_area(int n) {
  return 2.0 * std::exp(0.5 * n * std::log(M_PI) - std::lgamma(0.5 * n));
}

ProblemParams make_params(int n, double q, double lambda) {
  if (n < 5) {
    std::ostringstream msg;
    msg << "dimension must be at least 5, got n = " << n;
    fail(ErrorCode::DimensionTooSmall, msg.str());
  }
  if (!(q >= 2.0)) {
    std::ostringstream msg;
    msg << "exponent must satisfy q >= 2, got q = " << q;
    fail(ErrorCode::ExponentOutOfRange, msg.str());
  }
  const double lambda_max = 0.25 * n * n;
  if (!(lambda < lambda_max)) {
    std::ostringstream msg;
    msg << "lambda must be below n^2/4 = " << lambda_max
        << " to keep the quotient positive, got lambda = " << lambda;
    fail(ErrorCode::LambdaOutOfRange, msg.str());
  }

  ProblemParams p;
  p.n = n;
  p.q = q;
  p.lambda = lambda;
  p.mu = 0.25 * n * (n - 4);
  p.nu = 0.25 * (n - 4) * (n - 4);
  p.lambda_max = lambda_max;
  p.beta = n - 0.5 * q * (n - 4);
  p.q_crit = 2.0 * n / (n - 4);
  p.omega_n = unit_sphere_area(n);
  p.a_coeff = p.mu + 2.0 - 0.5 * lambda;
  p.b_coeff = (lambda_max - lambda) * p.nu;
  return p;
}

double s2_closed_form(const ProblemParams& p) {
  return p.mu * p.mu - p.lambda * p.nu;
}

double q_threshold(int n) {
  if (n < 5) fail(ErrorCode::DimensionTooSmall, "q_threshold requires n >= 5");
  const double an = 3.0 * (n - 1) / (2.0 * (n - 4.0) * (n - 4.0));
  return 1.0 + an + std::sqrt((1.0 + an) * (1.0 + an) + 4.0 / 3.0 * an);
}

bool bs_condition(int n, double q) {
  if (n < 5) fail(ErrorCode::DimensionTooSmall, "bs_condition requires n >= 5");
  if (!(q > 2.0)) {
    fail(ErrorCode::ExponentOutOfRange,
         "bs_condition is defined for q > 2 only");
  }
  return (3.0 * q + 2.0) / (q * (q - 2.0)) <
         (n - 4.0) * (n - 4.0) / (n - 1.0);
}

}  // namespace rsgs
