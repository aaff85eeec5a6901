#include "rsgs/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rsgs/errors.hpp"

namespace rsgs {

Grid make_grid(double half_width, int points) {
  if (!(half_width > 0.0)) {
    fail(ErrorCode::GridTooCoarse, "grid half width must be positive");
  }
  if (points < 16) {
    fail(ErrorCode::GridTooCoarse, "grid needs at least 16 nodes");
  }
  if (points % 2 == 0) points += 1;  // keep t = 0 on the grid
  return Grid{half_width, points};
}

double Profile::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

Profile make_profile(const Grid& g, std::vector<double> values) {
  if (static_cast<int>(values.size()) != g.points) {
    fail(ErrorCode::GridTooCoarse, "profile length does not match grid");
  }
  return Profile{g, std::move(values)};
}

Profile sample(const Grid& g, const std::function<double(double)>& f) {
  std::vector<double> v(g.points);
  for (int j = 0; j < g.points; ++j) v[j] = f(g.node(j));
  return Profile{g, std::move(v)};
}

std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                               int order) {
  // Fornberg's recurrence for finite-difference weights on arbitrary nodes.
  const int n = static_cast<int>(nodes.size());
  const int m = order;
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][m];
  return w;
}

namespace {

// Centered five-point weights for the interior, order 4 in h.
std::vector<double> centered_weights(int order, double h) {
  std::vector<double> nodes{-2 * h, -h, 0.0, h, 2 * h};
  return fd_weights(0.0, nodes, order);
}

// Six-point one-sided weights anchored at offset `pos` from the block start.
std::vector<double> onesided_weights(int order, double h, int pos) {
  std::vector<double> nodes(6);
  for (int i = 0; i < 6; ++i) nodes[i] = (i - pos) * h;
  return fd_weights(0.0, nodes, order);
}

}  // namespace

Profile differentiate(const Profile& p, int order) {
  if (order != 1 && order != 2) {
    fail(ErrorCode::UsageError, "differentiate supports order 1 or 2");
  }
  const int n = p.grid.points;
  if (n < 6) fail(ErrorCode::GridTooCoarse, "stencil does not fit the grid");
  const double h = p.grid.spacing();
  const auto wc = centered_weights(order, h);
  std::vector<double> out(n);

  for (int j = 2; j < n - 2; ++j) {
    out[j] = wc[0] * p.values[j - 2] + wc[1] * p.values[j - 1] +
             wc[2] * p.values[j] + wc[3] * p.values[j + 1] +
             wc[4] * p.values[j + 2];
  }
  for (int j : {0, 1}) {
    const auto w = onesided_weights(order, h, j);
    double acc = 0.0;
    for (int i = 0; i < 6; ++i) acc += w[i] * p.values[i];
    out[j] = acc;
  }
  for (int j : {n - 2, n - 1}) {
    const int pos = j - (n - 6);
    const auto w = onesided_weights(order, h, pos);
    double acc = 0.0;
    for (int i = 0; i < 6; ++i) acc += w[i] * p.values[n - 6 + i];
    out[j] = acc;
  }
  return Profile{p.grid, std::move(out)};
}

double integrate(const Profile& p) {
  return integrate_transformed(p, [](double v) { return v; });
}

double integrate_transformed(const Profile& p,
                             const std::function<double(double)>& f) {
  const int n = p.grid.points;
  const double h = p.grid.spacing();
  double odd = 0.0;
  for (int j = 1; j < n - 1; j += 2) odd += f(p.values[j]);
  double even = 0.0;
  for (int j = 2; j < n - 1; j += 2) even += f(p.values[j]);
  return h / 3.0 * (f(p.values[0]) + f(p.values[n - 1]) + 4.0 * odd +
                    2.0 * even);
}

Profile ef_transform(const std::function<double(double)>& radial_u,
                     const ProblemParams& p, const Grid& g) {
  std::vector<double> v(g.points);
  const double half_exponent = 0.5 * (p.n - 4);
  for (int j = 0; j < g.points; ++j) {
    const double t = g.node(j);
    const double r = std::exp(-t);
    const double w = std::exp(-t * half_exponent) * radial_u(r);
    if (!std::isfinite(w)) {
      std::ostringstream msg;
      msg << "non-finite sample at t = " << t << " (r = " << r << ")";
      fail(ErrorCode::NonFiniteSample, msg.str());
    }
    v[j] = w;
  }
  return Profile{g, std::move(v)};
}

double interpolate(const Profile& p, double t) {
  const int n = p.grid.points;
  const double h = p.grid.spacing();
  const double T = p.grid.half_width;
  if (t < -T || t > T) return 0.0;
  const double x = (t + T) / h;
  int j0 = static_cast<int>(std::floor(x)) - 2;
  j0 = std::clamp(j0, 0, n - 6);
  // Exact hit on a node: return the stored sample.
  const int jn = static_cast<int>(std::lround(x));
  if (std::abs(x - jn) < 1e-12 && jn >= 0 && jn < n) return p.values[jn];
  double acc = 0.0;
  for (int i = 0; i < 6; ++i) {
    double li = 1.0;
    for (int k = 0; k < 6; ++k) {
      if (k == i) continue;
      li *= (x - (j0 + k)) / static_cast<double>(i - k);
    }
    acc += li * p.values[j0 + i];
  }
  return acc;
}

std::function<double(double)> ef_untransform(Profile w,
                                             const ProblemParams& p) {
  const double half_exponent = 0.5 * (4 - p.n);
  return [w = std::move(w), half_exponent](double r) {
    if (!(r > 0.0)) fail(ErrorCode::NonFiniteSample, "radius must be positive");
    const double t = -std::log(r);
    return std::pow(r, half_exponent) * interpolate(w, t);
  };
}

double reflection_asymmetry(const Profile& p) {
  const int n = p.grid.points;
  double m = 0.0;
  for (int j = 0; j < n / 2; ++j) {
    m = std::max(m, std::abs(p.values[j] - p.values[n - 1 - j]));
  }
  return m;
}

}  // namespace rsgs
