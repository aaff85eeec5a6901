#include "rsgs/operators.hpp"

#include <cmath>
#include <cstddef>

#include <lapacke.h>

#include "rsgs/errors.hpp"

namespace rsgs {

namespace {

// Double-double helpers (Dekker/Knuth). Enough to evaluate short stencil
// sums whose exact value is far below the magnitude of the summands.
struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd dd_add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  const Dd r = two_sum(s.hi, s.lo);
  return r;
}

inline Dd dd_mul_d(Dd a, double b) {
  Dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return two_sum(p.hi, p.lo);
}

constexpr double kD2Stencil[5] = {-1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0,
                                  4.0 / 3.0, -1.0 / 12.0};

}  // namespace

std::array<double, 5> EfOperator::d2_stencil() const {
  const double inv_h2 = 1.0 / (h * h);
  std::array<double, 5> s;
  for (int i = 0; i < 5; ++i) s[i] = kD2Stencil[i] * inv_h2;
  return s;
}

std::vector<double> EfOperator::apply(const std::vector<double>& w) const {
  const auto s = d2_stencil();
  auto d2 = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = -2; k <= 2; ++k) {
        const int i = j + k;
        if (i < 0 || i >= n) continue;  // zero extension
        acc += s[k + 2] * v[i];
      }
      out[j] = acc;
    }
  };
  std::vector<double> u1(n), u2(n), out(n);
  d2(w, u1);
  d2(u1, u2);
  for (int j = 0; j < n; ++j) out[j] = u2[j] - 2.0 * a * u1[j] + b * w[j];
  return out;
}

std::vector<double> EfOperator::apply_compensated(
    const std::vector<double>& w) const {
  const auto s = d2_stencil();
  // First difference pass carries the full double-double value forward so
  // the second pass does not re-amplify its rounding.
  std::vector<Dd> u1(n);
  for (int j = 0; j < n; ++j) {
    Dd acc{};
    for (int k = -2; k <= 2; ++k) {
      const int i = j + k;
      if (i < 0 || i >= n) continue;
      acc = dd_add(acc, two_prod(s[k + 2], w[i]));
    }
    u1[j] = acc;
  }
  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) {
    Dd acc{};
    for (int k = -2; k <= 2; ++k) {
      const int i = j + k;
      if (i < 0 || i >= n) continue;
      acc = dd_add(acc, dd_mul_d(u1[i], s[k + 2]));
    }
    acc = dd_add(acc, dd_mul_d(u1[j], -2.0 * a));
    acc = dd_add(acc, two_prod(b, w[j]));
    out[j] = acc.hi + acc.lo;
  }
  return out;
}

std::vector<double> EfOperator::lower_band() const {
  const auto s = d2_stencil();
  std::vector<double> band(static_cast<size_t>(n) * 5, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int d = 0; d <= 4 && j + d < n; ++d) {
      const int i = j + d;
      // (D2^2)(i,j): inner index k restricted to the grid, which encodes
      // the zero extension near the boundary.
      double d4 = 0.0;
      const int klo = std::max({0, i - 2, j - 2});
      const int khi = std::min({n - 1, i + 2, j + 2});
      for (int k = klo; k <= khi; ++k) {
        d4 += s[i - k + 2] * s[k - j + 2];
      }
      double entry = d4;
      if (d <= 2) entry -= 2.0 * a * s[d + 2];
      if (d == 0) entry += b;
      band[static_cast<size_t>(j) * 5 + d] = entry;
    }
  }
  return band;
}

BandedCholesky::BandedCholesky(std::vector<double> band, int n, int kd)
    : factor_(std::move(band)), n_(n), kd_(kd) {
  const lapack_int info = LAPACKE_dpbtrf(LAPACK_COL_MAJOR, 'L', n_, kd_,
                                         factor_.data(), kd_ + 1);
  if (info != 0) {
    fail(ErrorCode::NoConvergence,
         "banded Cholesky factorization failed (matrix not SPD?)");
  }
}

void BandedCholesky::solve_in_place(std::vector<double>& rhs) const {
  const lapack_int info =
      LAPACKE_dpbtrs(LAPACK_COL_MAJOR, 'L', n_, kd_, 1, factor_.data(),
                     kd_ + 1, rhs.data(), n_);
  if (info != 0) {
    fail(ErrorCode::NoConvergence, "banded triangular solve failed");
  }
}

}  // namespace rsgs
