#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rsgs/params.hpp"
#include "rsgs/profile.hpp"
#include "rsgs/solver.hpp"

namespace rsgs {

enum class Verdict { RadiallyStable, SymmetryBroken };

const char* to_string(Verdict v);

/// Second-variation test along the first spherical harmonic, evaluated at
/// the radial minimizer. The indicator
///   D = (q-1) A(u) - A(u phi)
///     = (q-2) [U2 - (lambda + 2(n-1)/(q-2)) U1
///              - (n-1)(3n-9-lambda)/(q-2) U0]
/// is degree-2 homogeneous in u; if the radial minimizer were a global
/// one, D <= 0 would have to hold, so D > margin certifies that the
/// global optimal constant is strictly below the radial one.
/// RadiallyStable means "no obstruction found", not a symmetry proof.
struct SymmetryCertificate {
  ProblemParams params;
  double u0 = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double a_u = 0.0;     ///< A(u) = U2 - lambda U1
  double a_uphi = 0.0;  ///< A(u phi) = A(u) + (n-1)(3n-9-lambda) U0 + 2(n-1) U1
  double second_variation_gap = 0.0;  ///< D as above
  Verdict verdict = Verdict::RadiallyStable;
  double margin = 0.0;  ///< certification margin, 1e-6 |A(u)|
  double thm4_coefficient_c1 = 0.0;  ///< large-|lambda| mechanism coefficient
  bool thm4_condition_met = false;   ///< c1 > 0
};

/// Coefficient -2q/(3q+2) lambda + (4q(mu+2)/(3q+2) - 2(n-1)/(q-2)); its
/// positivity is the lambda-side condition of the large-|lambda|
/// breaking-symmetry mechanism.
double lambda_condition_coefficient(int n, double q, double lambda);

/// Evaluates the certificate at a converged ground state. Throws
/// NotConverged when the state's EL residual is above 1e-6.
SymmetryCertificate certify(const GroundState& gs);

struct ScanRow {
  double lambda = 0.0;
  double d_value = 0.0;
  double s_rad = 0.0;
  Verdict verdict = Verdict::RadiallyStable;
};

/// Scan of D(lambda) over a grid plus every sign-change bracket refined by
/// bisection. No bracket is not a failure; it is reported as a finding
/// (empty brackets vector). Per-lambda solves run concurrently; the
/// THREADS environment variable caps the worker count.
struct ScanResult {
  std::vector<ScanRow> rows;
  std::vector<std::array<double, 2>> brackets;
};

ScanResult lambda_star(int n, double q, std::array<double, 2> lambda_range,
                       int steps, const Grid& g, const SolverOptions& opts = {});

/// Average of |x + y|^{-2} over the sphere |x| = r with |y| = s:
///   M(r, s) = int_0^pi (r^2 + s^2 - 2 r s cos th)^{-1} sin^{n-2}th dth
///             / int_0^pi sin^{n-2}th dth.
/// Exact degenerate limits M(0, s) = s^{-2} and M(r, 0) = r^{-2}. The
/// r = s configuration has an integrable singularity for n >= 4; a failed
/// refinement there reports SingularConfiguration.
double spherical_mean_weight(double r, double s, int n);

/// Sobolev constant of the second-order embedding, computed from the
/// explicit extremal bubble U(x) = (1+|x|^2)^{(4-n)/2} by direct radial
/// quadrature; cached per dimension, never a hardcoded literature value.
double sobolev_constant(int n);

struct BubbleRow {
  double offset = 0.0;
  double r_value = 0.0;  ///< translated-bubble quotient at this offset
  double s_star = 0.0;   ///< Sobolev constant (same for every row)
  double gap = 0.0;      ///< r_value - s_star
};

/// Quotient of the translated bubble at the critical exponent:
///   R(y) = [ int |Lap U|^2 - lambda omega_n int |U'(r)|^2 M(r,|y|) r^{n-1} dr ]
///          / (int U^{2**})^{2/2**}.
/// For lambda < 0: R(y) > S** and R(y) -> S** as |y| -> infinity. For
/// lambda in (0, Lambda): R(0) < S**. For lambda = 0: R = S** identically.
std::vector<BubbleRow> bubble_comparison(int n, double lambda,
                                         const std::vector<double>& offsets);

/// (q_threshold(n), 2n/(n-4)) when nonempty (n >= 7), nullopt otherwise.
std::optional<std::pair<double, double>> bs_window(int n);

}  // namespace rsgs
