#pragma once

#include <optional>
#include <utility>

namespace rsgs {

/// Problem data for the weighted fourth-order quotient: dimension n >= 5,
/// nonlinearity exponent q, Hardy-term strength lambda, plus every derived
/// constant the solver and the identity checkers need. All derived fields
/// are computed once at construction and never recomputed.
struct ProblemParams {
  int n = 0;             ///< space dimension, n >= 5
  double q = 0.0;        ///< nonlinearity exponent (> 2 on solver paths)
  double lambda = 0.0;   ///< Hardy strength, must satisfy lambda < lambda_max
  double mu = 0.0;       ///< n(n-4)/4
  double nu = 0.0;       ///< (n-4)^2/4
  double lambda_max = 0.0;  ///< n^2/4, positivity threshold for the quotient
  double beta = 0.0;        ///< n - q(n-4)/2, weight exponent of |x|^-beta
  double q_crit = 0.0;      ///< 2n/(n-4), critical Sobolev exponent
  double omega_n = 0.0;     ///< surface measure of the unit sphere S^{n-1}
  double a_coeff = 0.0;     ///< mu + 2 - lambda/2
  double b_coeff = 0.0;     ///< (lambda_max - lambda) nu

  /// True when q sits at the critical exponent 2n/(n-4).
  bool critical() const { return q == q_crit; }
};

/// Surface measure |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2), via loggamma.
double unit_sphere_area(int n);

/// Validates (n, q, lambda) and populates every derived constant.
/// Throws DimensionTooSmall (n < 5), ExponentOutOfRange (q < 2) or
/// LambdaOutOfRange (lambda >= n^2/4).
ProblemParams make_params(int n, double q, double lambda);

/// Optimal constant of the linear (q = 2) problem: mu^2 - lambda nu.
/// The value is an infimum only; it is not attained by any admissible
/// function, so there is no profile to go with it.
double s2_closed_form(const ProblemParams& p);

/// Dimensional threshold q_n = 1 + a_n + sqrt((1+a_n)^2 + 4/3 a_n) with
/// a_n = 3(n-1)/(2(n-4)^2). Exponents q in (q_n, q_crit) admit the
/// large-|lambda| symmetry-breaking mechanism; the window is nonempty
/// only for n >= 7.
double q_threshold(int n);

/// Strict inequality (3q+2)/(q(q-2)) < (n-4)^2/(n-1). Equivalent to
/// q > q_threshold(n) on q in (2, q_crit).
bool bs_condition(int n, double q);

}  // namespace rsgs
