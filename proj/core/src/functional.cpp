#include "rsgs/functional.hpp"

#include <cmath>

#include "rsgs/errors.hpp"

namespace rsgs {

namespace {

// Simpson weight of node j on an N-node grid (N odd), premultiplied by h/3.
inline double simpson_weight(int j, int n, double h) {
  if (j == 0 || j == n - 1) return h / 3.0;
  return (j % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
}

double simpson_dot(const std::vector<double>& a, const std::vector<double>& b,
                   const Grid& g) {
  const double h = g.spacing();
  double acc = 0.0;
  for (int j = 0; j < g.points; ++j) {
    acc += simpson_weight(j, g.points, h) * a[j] * b[j];
  }
  return acc;
}

}  // namespace

double odd_power(double w, double q) {
  if (w == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(w), q - 1.0), w);
}

Profile normalized_lq(Profile w, const ProblemParams& p) {
  const double j = integrate_transformed(
      w, [q = p.q](double v) { return std::pow(std::abs(v), q); });
  if (j <= 0.0) {
    fail(ErrorCode::ZeroDenominator, "cannot normalize the zero profile");
  }
  const double c = std::pow(p.omega_n * j, -1.0 / p.q);
  for (double& v : w.values) v *= c;
  return w;
}

EnergyBreakdown energy_breakdown(const Profile& w, const ProblemParams& p) {
  EnergyBreakdown e;
  const Profile d1 = differentiate(w, 1);
  const Profile d2 = differentiate(w, 2);
  auto sq = [](double v) { return v * v; };
  e.i_w2pp = integrate_transformed(d2, sq);
  e.i_w2p = integrate_transformed(d1, sq);
  e.i_w2 = integrate_transformed(w, sq);
  e.i_wq = integrate_transformed(
      w, [q = p.q](double v) { return std::pow(std::abs(v), q); });

  const double omega = p.omega_n;
  e.u0 = omega * e.i_w2;
  e.u1 = omega * (e.i_w2p + p.nu * e.i_w2);
  e.u2 = omega * (e.i_w2pp + 2.0 * (p.mu + 2.0) * e.i_w2p +
                  p.mu * p.mu * e.i_w2);
  e.a_value = e.u2 - p.lambda * e.u1;
  e.zero_profile = (e.i_wq == 0.0);
  e.b_value = e.zero_profile ? 0.0 : std::pow(omega * e.i_wq, 2.0 / p.q);
  return e;
}

double rayleigh_quotient(const Profile& w, const ProblemParams& p) {
  const EnergyBreakdown e = energy_breakdown(w, p);
  if (e.zero_profile) {
    fail(ErrorCode::ZeroDenominator,
         "Rayleigh quotient undefined for the zero profile");
  }
  const double numerator =
      e.i_w2pp + 2.0 * p.a_coeff * e.i_w2p + p.b_coeff * e.i_w2;
  return numerator / std::pow(e.i_wq, 2.0 / p.q);
}

EfOperator ef_operator(const Grid& g, const ProblemParams& p) {
  return EfOperator{g.points, g.spacing(), p.a_coeff, p.b_coeff};
}

ElResidual el_residual(const Profile& w, const ProblemParams& p,
                       bool compensated) {
  const EfOperator op = ef_operator(w.grid, p);
  const std::vector<double> lw =
      compensated ? op.apply_compensated(w.values) : op.apply(w.values);
  std::vector<double> f(w.values.size());
  for (size_t j = 0; j < f.size(); ++j) f[j] = odd_power(w.values[j], p.q);

  const double fw = simpson_dot(f, w.values, w.grid);
  if (fw == 0.0) {
    fail(ErrorCode::ZeroDenominator, "EL multiplier undefined: w is zero");
  }
  const double s = simpson_dot(lw, w.values, w.grid) / fw;

  ElResidual out;
  std::vector<double> r(f.size());
  for (size_t j = 0; j < r.size(); ++j) r[j] = lw[j] - s * f[j];
  out.residual = Profile{w.grid, std::move(r)};
  out.multiplier = s;
  out.norm = std::sqrt(
      integrate_transformed(out.residual, [](double v) { return v * v; }));
  return out;
}

Profile el_gradient(const Profile& w, const ProblemParams& p) {
  return el_residual(w, p, false).residual;
}

}  // namespace rsgs
