#include "rsgs/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "rsgs/errors.hpp"

namespace rsgs {

namespace {

GaussRule compute_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < order; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order) {
  const GaussRule& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b);
  const double rad = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < order; ++i) {
    acc += rule.weights[i] * f(mid + rad * rule.nodes[i]);
  }
  return acc * rad;
}

namespace {

double adaptive_panel(const std::function<double(double)>& f, double a,
                      double b, double abs_tol, int depth, int max_depth) {
  const double coarse = integrate_gl(f, a, b, 16);
  const double fine = integrate_gl(f, a, b, 32);
  if (!std::isfinite(fine) || !std::isfinite(coarse)) {
    fail(ErrorCode::QuadratureFailure, "non-finite integrand sample");
  }
  if (std::abs(fine - coarse) <= abs_tol || depth >= max_depth) {
    if (depth >= max_depth && std::abs(fine - coarse) > abs_tol) {
      fail(ErrorCode::QuadratureFailure,
           "adaptive quadrature failed to meet tolerance");
    }
    return fine;
  }
  const double mid = 0.5 * (a + b);
  return adaptive_panel(f, a, mid, 0.5 * abs_tol, depth + 1, max_depth) +
         adaptive_panel(f, mid, b, 0.5 * abs_tol, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_depth) {
  const double probe = std::abs(integrate_gl(f, a, b, 32));
  const double scale = std::max(probe, 1e-300);
  return adaptive_panel(f, a, b, rel_tol * scale, 0, max_depth);
}

}  // namespace rsgs
