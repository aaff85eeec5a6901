#pragma once

#include <vector>

#include "rsgs/functional.hpp"
#include "rsgs/params.hpp"
#include "rsgs/profile.hpp"

namespace rsgs {

struct SolverOptions {
  double tol = 1e-8;       ///< accept when the EL residual norm drops below
  int max_iter = 10000;    ///< inverse-iteration cap
  bool polish = true;      ///< quotient-descent polish on stagnation
  int recenter_every = 1;  ///< peak recentering cadence (iterations)
  double stagnation_tol = 1e-12;  ///< relative quotient change threshold
  double boundary_leak_flag = 1e-8;   ///< flag level, relative to max|w|
  double boundary_leak_error = 1e-5;  ///< hard error level ("enlarge T")
  std::vector<double> seed;  ///< initial profile values; empty = exp(-t^2)
};

/// A converged radial ground state, held in the normalization
/// omega_n int |w|^q dt = 1 so that the theory's identities apply with
/// s_rad itself as the Euler-Lagrange multiplier.
struct GroundState {
  ProblemParams params;
  Profile w;
  double s_rad = 0.0;  ///< omega_n^{(q-2)/q} R(w)
  EnergyBreakdown breakdown;
  double el_residual = 0.0;
  int iterations = 0;
  double boundary_leak = 0.0;  ///< max boundary magnitude / max|w|
  bool boundary_leak_flagged = false;
  bool positive = false;  ///< min w > 0 after sign normalization
  double even_after_centering = 0.0;  ///< asymmetry about the peak / max|w|
  std::vector<double> quotient_history;  ///< non-increasing iterate quotients
};

/// Minimizes the quotient R(w) by inverse iteration: repeatedly solve the
/// banded SPD system L w+ = |w|^{q-2} w, renormalize, recenter the peak.
/// The iterate quotient history is non-increasing; termination on
/// el_residual < opts.tol (an optional descent polish handles stagnation).
/// Throws ExponentOutOfRange (q <= 2), NoConvergence, BoundaryLeak.
GroundState solve_radial(const ProblemParams& p, const Grid& g,
                         const SolverOptions& opts = {});

/// Relative change of the Rayleigh quotient under the weighted dilation
/// u_rho(x) = rho^{(n-4)/2} u(rho x), which acts on profiles as the
/// translation w(t) -> w(t + log rho). Expected < 1e-9 on converged
/// states for |log rho| <= T/4. Throws ShiftOutOfRange beyond that.
double dilation_invariance_check(const GroundState& gs, double rho);

/// Discrete quotient the iteration provably decreases: the plain-sum
/// analogue of R(w), scaled to the continuum normalization. Exposed for
/// diagnostics and tests.
double discrete_quotient(const Profile& w, const ProblemParams& p);

}  // namespace rsgs
