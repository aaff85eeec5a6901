#pragma once

#include <array>
#include <vector>

namespace rsgs {

/// Discretization of the quartic-symbol operator
///   L = D^4 - 2 a D^2 + b
/// acting on samples that are extended by zero outside the grid. D^2 is
/// the symmetric five-point stencil of formal order 4 and D^4 is its
/// matrix square, so L is symmetric positive definite (a, b > 0) with
/// bandwidth 4.
struct EfOperator {
  int n = 0;
  double h = 0.0;
  double a = 0.0;
  double b = 0.0;

  /// y = L w, plain double arithmetic.
  std::vector<double> apply(const std::vector<double>& w) const;

  /// y = L w with compensated (double-double) accumulation. Removes the
  /// 1/h^4 rounding amplification, which matters when the residual is
  /// many orders below the operator scale.
  std::vector<double> apply_compensated(const std::vector<double>& w) const;

  /// Lower band of L in LAPACK banded storage (column-major, kd = 4,
  /// ldab = 5): band[j*5 + (i-j)] = L(i,j) for j <= i <= j+4.
  std::vector<double> lower_band() const;

  /// Five-point second-difference stencil scaled by 1/h^2.
  std::array<double, 5> d2_stencil() const;
};

/// Cholesky factorization of a symmetric positive definite banded matrix
/// (LAPACK dpbtrf/dpbtrs). Factors once, solves many times.
class BandedCholesky {
 public:
  /// band: lower band in the storage produced by EfOperator::lower_band.
  BandedCholesky(std::vector<double> band, int n, int kd);

  /// Solves A x = rhs in place.
  void solve_in_place(std::vector<double>& rhs) const;

  std::vector<double> solve(std::vector<double> rhs) const {
    solve_in_place(rhs);
    return rhs;
  }

 private:
  std::vector<double> factor_;
  int n_;
  int kd_;
};

}  // namespace rsgs
