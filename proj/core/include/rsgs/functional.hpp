#pragma once

#include "rsgs/operators.hpp"
#include "rsgs/params.hpp"
#include "rsgs/profile.hpp"

namespace rsgs {

/// Every integral the theory works with, evaluated for one profile:
/// the four 1D integrals of w, the three weighted n-dimensional integrals
/// U0, U1, U2 expressed through them, and the quadratic/nonlinear parts
/// A(u) = U2 - lambda U1 and B(u) = (omega_n int |w|^q)^{2/q}.
struct EnergyBreakdown {
  double i_w2pp = 0.0;  ///< int |w''|^2 dt
  double i_w2p = 0.0;   ///< int |w'|^2 dt
  double i_w2 = 0.0;    ///< int |w|^2 dt
  double i_wq = 0.0;    ///< int |w|^q dt
  double u0 = 0.0;      ///< int |x|^-4 u^2 = omega_n int w^2
  double u1 = 0.0;      ///< int |x|^-2 |grad u|^2 = omega_n int (w'^2 + nu w^2)
  double u2 = 0.0;      ///< int |Lap u|^2 = omega_n int (w''^2 + 2(mu+2) w'^2 + mu^2 w^2)
  double a_value = 0.0;  ///< U2 - lambda U1
  double b_value = 0.0;  ///< (omega_n int |w|^q)^{2/q}
  bool zero_profile = false;
};

EnergyBreakdown energy_breakdown(const Profile& w, const ProblemParams& p);

/// The 1D quotient
///   R(w) = int(w''^2 + 2 a w'^2 + b w^2) / (int |w|^q)^{2/q}.
/// Multiply by omega_n^{(q-2)/q} for a candidate optimal-constant value.
/// Invariant under scaling w -> c w and under translation of w.
double rayleigh_quotient(const Profile& w, const ProblemParams& p);

/// Odd power sign(w)|w|^{q-1}, continuously extended by 0 at w = 0.
double odd_power(double w, double q);

/// Copy of w rescaled so that omega_n int |w|^q dt = 1 (the normalization
/// in which the EL multiplier is the optimal constant itself).
Profile normalized_lq(Profile w, const ProblemParams& p);

/// Discretization of L = D^4 - 2 a D^2 + b matching the profile's
/// zero-extension convention; shared by the residual and the solver.
EfOperator ef_operator(const Grid& g, const ProblemParams& p);

/// Euler-Lagrange residual r = L w - s |w|^{q-2} w together with the
/// multiplier s that makes r orthogonal to w in the discrete (Simpson)
/// inner product, and the discrete L2 norm of r.
struct ElResidual {
  Profile residual;
  double multiplier = 0.0;  ///< s = <L w, w> / <|w|^{q-2} w, w>
  double norm = 0.0;        ///< sqrt(int r^2 dt)
};

/// compensated=true evaluates L w in double-double arithmetic; use it for
/// convergence measurement, where the residual is far below the operator
/// scale.
ElResidual el_residual(const Profile& w, const ProblemParams& p,
                       bool compensated = true);

/// The residual profile alone (plain arithmetic); descent direction and
/// convergence measure.
Profile el_gradient(const Profile& w, const ProblemParams& p);

}  // namespace rsgs
