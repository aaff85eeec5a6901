#pragma once

#include <functional>
#include <vector>

namespace rsgs {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton's
/// method on the Legendre polynomial and cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

/// Fixed-order Gauss-Legendre on [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order = 32);

/// Adaptive bisection with a GL(16)/GL(32) error estimate per panel.
/// Throws QuadratureFailure when the tolerance cannot be met within the
/// depth limit or the integrand produces non-finite values.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-12,
                          int max_depth = 48);

}  // namespace rsgs
