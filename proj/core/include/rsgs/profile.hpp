#pragma once

#include <functional>
#include <vector>

#include "rsgs/params.hpp"

namespace rsgs {

/// Uniform symmetric grid on [-T, T]. The node count is kept odd so that
/// t = 0 is a node (Simpson quadrature and evenness checks rely on it);
/// even requests are rounded up.
struct Grid {
  double half_width = 0.0;
  int points = 0;

  double spacing() const { return 2.0 * half_width / (points - 1); }
  double node(int j) const { return -half_width + j * spacing(); }
  int center() const { return (points - 1) / 2; }
};

/// Validating constructor for Grid. Throws GridTooCoarse for N < 16 or
/// non-positive half width.
Grid make_grid(double half_width, int points);

/// Sampled function on a Grid. The function and its derivatives are
/// treated as zero outside [-T, T]; samples at the outermost nodes are
/// expected to be negligible after any solve (see boundary-leak
/// diagnostics in the solver).
struct Profile {
  Grid grid;
  std::vector<double> values;

  double max_abs() const;
};

Profile make_profile(const Grid& g, std::vector<double> values);

/// Samples a callable on the grid.
Profile sample(const Grid& g, const std::function<double(double)>& f);

/// Finite-difference derivative of formal order 4: centered five-point
/// stencils in the interior, one-sided closures at the boundary rows.
/// order must be 1 or 2.
Profile differentiate(const Profile& p, int order);

/// Composite Simpson rule over [-T, T] (N odd makes it applicable as is).
double integrate(const Profile& p);

/// Simpson integral of f(w(t)) without materializing the transformed
/// profile. Summation order is fixed for determinism.
double integrate_transformed(const Profile& p,
                             const std::function<double(double)>& f);

/// Log-radial change of variables for radial functions on R^n:
/// w(t) = r^{(n-4)/2} u(r) with r = e^{-t}. Maps the weighted
/// n-dimensional integrals onto plain 1D integrals of w.
/// Throws NonFiniteSample when u produces a non-finite value.
Profile ef_transform(const std::function<double(double)>& radial_u,
                     const ProblemParams& p, const Grid& g);

/// Inverse of ef_transform: u(r) = r^{(4-n)/2} w(-log r), with w read off
/// the stored profile by six-point Lagrange interpolation (exact at the
/// nodes) and zero outside the grid.
std::function<double(double)> ef_untransform(Profile w, const ProblemParams& p);

/// Interpolated sample of w at an off-node point, six-point Lagrange on
/// the uniform grid; zero outside [-T, T].
double interpolate(const Profile& p, double t);

/// max_j |w(t_j) - w(-t_j)|; exact node reflection (N odd).
double reflection_asymmetry(const Profile& p);

/// Finite-difference weights on arbitrary nodes (Fornberg's recurrence).
/// Returns weights w such that f^(m)(x0) ~= sum_i w[i] f(nodes[i]).
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                               int order);

}  // namespace rsgs
