#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rsgs/functional.hpp"
#include "rsgs/params.hpp"
#include "rsgs/profile.hpp"
#include "rsgs/solver.hpp"

namespace rsgs {

/// One verified identity: residual = |lhs - rhs| / max(|lhs|, |rhs|, 1),
/// pass iff residual <= tolerance. For inequality-style checks (Hardy)
/// residual is the violation magnitude, zero when the strict inequality
/// holds.
struct IdentityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool pass = false;
  double tolerance = 0.0;
};

IdentityReport make_report(const std::string& name, double lhs, double rhs,
                           double tolerance);

/// Pointwise conserved quantity of the profile ODE,
///   -w''' w' + 1/2 w''^2 + a w'^2 - b/2 w^2 + (S/q)|w|^q = 0,
/// evaluated where |w| > 1e-6 max|w| and normalized by the largest term
/// magnitude. Third derivatives limit the accuracy; tolerance 1e-5.
IdentityReport check_first_integral(const GroundState& gs);

/// Integrated form of the conserved quantity:
///   3 int w''^2 + 2a int w'^2 + (2S/q) int |w|^q = b int w^2.
/// The profile is renormalized internally before evaluation. Tolerance 1e-7.
IdentityReport check_integrated_identity(const GroundState& gs);

/// Pohozaev-type relation between the weighted integrals at a solution:
///   (3 + 2/q) U2 = (4(mu+2) + lambda (q+2)/q) U1 - 2 nu (lambda - 2(n-2)) U0.
/// Both sides are homogeneous of degree 2, so the check is
/// normalization-independent. Tolerance 1e-6.
IdentityReport check_pohozaev(const GroundState& gs);
IdentityReport check_pohozaev(const EnergyBreakdown& e, const ProblemParams& p);

/// Strict Hardy positivity u1 > nu u0 for nonzero profiles.
IdentityReport check_hardy(const EnergyBreakdown& e, const ProblemParams& p);

/// The four checks above in a fixed order; every solve-bearing result
/// file embeds exactly this list.
std::vector<IdentityReport> standard_report_suite(const GroundState& gs);

/// The weighted n-dimensional integrals of a radial function, computed by
/// direct 1D quadrature in log r (derivatives of the callable by centered
/// differences on the grid). Independent of the profile-side route.
struct RadialIntegrals {
  double laplacian_sq = 0.0;    ///< int |Lap u|^2 dx
  double hardy_gradient = 0.0;  ///< int |x|^-2 |grad u|^2 dx
  double weighted_q_norm = 0.0; ///< int |x|^-beta |u|^q dx
  double hardy_l2 = 0.0;        ///< int |x|^-4 u^2 dx
};

RadialIntegrals radial_integrals(const std::function<double(double)>& radial_u,
                                 const ProblemParams& p, const Grid& g);

/// Cross-check of the log-radial reduction: the four weighted integrals
/// computed radially against their profile-side counterparts. Tolerance
/// 1e-6 each.
std::vector<IdentityReport> cross_check_ef(
    const std::function<double(double)>& radial_u, const ProblemParams& p,
    const Grid& g);

}  // namespace rsgs
