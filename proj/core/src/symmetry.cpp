#include "rsgs/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "rsgs/errors.hpp"
#include "rsgs/quadrature.hpp"
#include "rsgs/verify.hpp"

namespace rsgs {

const char* to_string(Verdict v) {
  return v == Verdict::SymmetryBroken ? "SymmetryBroken" : "RadiallyStable";
}

double lambda_condition_coefficient(int n, double q, double lambda) {
  return -2.0 * q / (3.0 * q + 2.0) * lambda +
         (4.0 * q * (0.25 * n * (n - 4) + 2.0) / (3.0 * q + 2.0) -
          2.0 * (n - 1.0) / (q - 2.0));
}

SymmetryCertificate certify(const GroundState& gs) {
  if (!(gs.el_residual <= 1e-6)) {
    std::ostringstream msg;
    msg << "certificate requires a converged state; EL residual is "
        << gs.el_residual;
    fail(ErrorCode::NotConverged, msg.str());
  }
  const ProblemParams& p = gs.params;
  const EnergyBreakdown& e = gs.breakdown;
  const double n1 = p.n - 1.0;

  SymmetryCertificate c;
  c.params = p;
  c.u0 = e.u0;
  c.u1 = e.u1;
  c.u2 = e.u2;
  c.a_u = e.a_value;
  c.a_uphi = c.a_u + n1 * (3.0 * p.n - 9.0 - p.lambda) * e.u0 +
             2.0 * n1 * e.u1;
  c.second_variation_gap = (p.q - 1.0) * c.a_u - c.a_uphi;

  // Same gap through the rearranged integral form; the two must agree to
  // rounding, this guards the wiring of the certificate.
  const double rearranged =
      (p.q - 2.0) *
      (e.u2 - (p.lambda + 2.0 * n1 / (p.q - 2.0)) * e.u1 -
       n1 * (3.0 * p.n - 9.0 - p.lambda) / (p.q - 2.0) * e.u0);
  const double scale =
      std::max({std::abs(c.second_variation_gap), std::abs(c.a_u), 1e-300});
  if (std::abs(rearranged - c.second_variation_gap) > 1e-9 * scale) {
    fail(ErrorCode::NotConverged,
         "internal inconsistency between the two gap evaluations");
  }

  c.margin = 1e-6 * std::abs(c.a_u);
  c.verdict = c.second_variation_gap > c.margin ? Verdict::SymmetryBroken
                                                : Verdict::RadiallyStable;
  c.thm4_coefficient_c1 = lambda_condition_coefficient(p.n, p.q, p.lambda);
  c.thm4_condition_met = c.thm4_coefficient_c1 > 0.0;
  return c;
}

namespace {

int scan_worker_count(int jobs) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) workers = std::min(workers, cap);
  }
  return std::min(workers, jobs);
}

ScanRow scan_point(int n, double q, double lambda, const Grid& g,
                   const SolverOptions& opts) {
  const ProblemParams p = make_params(n, q, lambda);
  const GroundState gs = solve_radial(p, g, opts);
  const SymmetryCertificate cert = certify(gs);
  return ScanRow{lambda, cert.second_variation_gap, gs.s_rad, cert.verdict};
}

}  // namespace

ScanResult lambda_star(int n, double q, std::array<double, 2> lambda_range,
                       int steps, const Grid& g, const SolverOptions& opts) {
  if (!(q > 2.0)) fail(ErrorCode::ExponentOutOfRange, "scan needs q > 2");
  const double q_crit = 2.0 * n / (n - 4.0);
  if (!(q < q_crit)) {
    fail(ErrorCode::ExponentOutOfRange, "scan needs q below 2n/(n-4)");
  }
  if (steps < 1) fail(ErrorCode::UsageError, "steps must be >= 1");
  const double lo = lambda_range[0];
  const double hi = lambda_range[1];
  if (!(lo <= hi)) fail(ErrorCode::UsageError, "lambda range must be ordered");
  make_params(n, q, hi);  // validates hi < Lambda

  std::vector<double> lambdas;
  if (steps == 1 || lo == hi) {
    lambdas.push_back(lo);
  } else {
    for (int i = 0; i < steps; ++i) {
      lambdas.push_back(lo + (hi - lo) * i / (steps - 1));
    }
  }

  ScanResult result;
  result.rows.resize(lambdas.size());
  {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::exception_ptr first_error;
    const int workers = scan_worker_count(static_cast<int>(lambdas.size()));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= lambdas.size()) return;
          try {
            result.rows[i] = scan_point(n, q, lambdas[i], g, opts);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // Sign changes of D; every one is reported, monotonicity is not assumed.
  for (size_t i = 0; i + 1 < result.rows.size(); ++i) {
    double la = result.rows[i].lambda;
    double lb = result.rows[i + 1].lambda;
    double da = result.rows[i].d_value;
    double db = result.rows[i + 1].d_value;
    if (!(da * db < 0.0)) continue;
    const double width_target = 1e-3 * std::max(std::abs(la), 1e-12);
    while (lb - la > width_target) {
      const double lm = 0.5 * (la + lb);
      const double dm = scan_point(n, q, lm, g, opts).d_value;
      if (dm == 0.0) {
        la = lb = lm;
        break;
      }
      if (da * dm < 0.0) {
        lb = lm;
        db = dm;
      } else {
        la = lm;
        da = dm;
      }
    }
    result.brackets.push_back({la, lb});
  }
  return result;
}

double spherical_mean_weight(double r, double s, int n) {
  if (n < 3) fail(ErrorCode::UsageError, "spherical mean needs n >= 3");
  if (r < 0.0 || s < 0.0 || (r == 0.0 && s == 0.0)) {
    fail(ErrorCode::UsageError, "need r, s >= 0, not both zero");
  }
  if (r == 0.0) return 1.0 / (s * s);
  if (s == 0.0) return 1.0 / (r * r);

  // |x+y|^2 = (r-s)^2 + 4 r s sin^2(th/2) avoids cancellation near th = 0.
  const double d2 = (r - s) * (r - s);
  auto integrand = [&](double th) {
    const double half = std::sin(0.5 * th);
    return std::pow(std::sin(th), n - 2.0) /
           (d2 + 4.0 * r * s * half * half);
  };
  const double denom = std::exp(0.5 * std::log(M_PI) +
                                std::lgamma(0.5 * (n - 1)) -
                                std::lgamma(0.5 * n));
  try {
    // Split at pi/2: the only delicate region is th -> 0 when r ~ s, and
    // the adaptive rule then refines toward the left endpoint.
    const double left = integrate_adaptive(integrand, 0.0, 0.5 * M_PI, 1e-13);
    const double right = integrate_adaptive(integrand, 0.5 * M_PI, M_PI, 1e-13);
    return (left + right) / denom;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::QuadratureFailure && r == s) {
      fail(ErrorCode::SingularConfiguration,
           "refinement failed on the r = s singular configuration");
    }
    throw;
  }
}

namespace {

struct BubbleIntegrals {
  double laplacian_sq = 0.0;
  double q_norm = 0.0;
};

// Unshifted bubble integrals by the direct radial route on a wide grid.
const BubbleIntegrals& bubble_integrals(int n) {
  static std::map<int, BubbleIntegrals> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const ProblemParams p = make_params(n, 2.0 * n / (n - 4.0), 0.0);
    const Grid g = make_grid(60.0, 32769);
    const double half_exp = 0.5 * (4 - n);
    const RadialIntegrals direct = radial_integrals(
        [half_exp](double r) { return std::pow(1.0 + r * r, half_exp); }, p,
        g);
    it = cache
             .emplace(n, BubbleIntegrals{direct.laplacian_sq,
                                         direct.weighted_q_norm})
             .first;
  }
  return it->second;
}

}  // namespace

double sobolev_constant(int n) {
  const BubbleIntegrals& b = bubble_integrals(n);
  const double q_crit = 2.0 * n / (n - 4.0);
  return b.laplacian_sq / std::pow(b.q_norm, 2.0 / q_crit);
}

std::vector<BubbleRow> bubble_comparison(int n, double lambda,
                                         const std::vector<double>& offsets) {
  const ProblemParams p = make_params(n, 2.0 * n / (n - 4.0), lambda);
  const BubbleIntegrals& unshifted = bubble_integrals(n);
  const double denom = std::pow(unshifted.q_norm, 2.0 / p.q_crit);
  const double s_star = sobolev_constant(n);

  std::vector<BubbleRow> rows;
  rows.reserve(offsets.size());
  for (double y : offsets) {
    if (y < 0.0) fail(ErrorCode::UsageError, "offsets must be >= 0");
    double r_value;
    if (lambda == 0.0) {
      r_value = s_star;
    } else {
      // Shifted Hardy term in log-radius; |grad U| is explicit for the
      // bubble, U'(r) = (4-n) r (1+r^2)^{(2-n)/2}.
      auto integrand = [&](double s) {
        const double r = std::exp(s);
        const double du =
            (4.0 - n) * r * std::pow(1.0 + r * r, 0.5 * (2 - n));
        const double m = (y == 0.0) ? 1.0 / (r * r)
                                    : spherical_mean_weight(r, y, n);
        return du * du * m * std::exp(static_cast<double>(n) * s);
      };
      const double hardy_shifted =
          p.omega_n * integrate_adaptive(integrand, -40.0, 40.0, 1e-10);
      r_value = (unshifted.laplacian_sq - lambda * hardy_shifted) / denom;
    }
    rows.push_back(BubbleRow{y, r_value, s_star, r_value - s_star});
  }
  return rows;
}

std::optional<std::pair<double, double>> bs_window(int n) {
  const double qn = q_threshold(n);
  const double q_crit = 2.0 * n / (n - 4.0);
  if (qn < q_crit) return std::make_pair(qn, q_crit);
  return std::nullopt;
}

}  // namespace rsgs
