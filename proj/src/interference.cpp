#include "qconcept/interference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qconcept {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSingularTol = 1e-12;   // inversion/forward denominator cutoff
constexpr double kRefineTolN = 1e-10;    // golden-section window target

void require_weight(double w, const char* what) {
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument(what);
}

double degrees(double radians) { return radians * 180.0 / kPi; }
double radians(double deg) { return deg * kPi / 180.0; }

}  // namespace

double compute_r(double mu_a, double mu_b) {
  require_weight(mu_a, "compute_r: mu_a must lie in [0, 1]");
  require_weight(mu_b, "compute_r: mu_b must lie in [0, 1]");
  return std::sqrt((1.0 - mu_a) * (1.0 - mu_b)) - std::sqrt(mu_a * mu_b);
}

double nprime_from_n(double n, double r) {
  if (!(n > 0.0 && n < 1.0))
    throw std::invalid_argument("nprime_from_n: n must lie strictly inside (0, 1)");
  const double one_minus_n2 = 1.0 - n * n;
  return std::sqrt(one_minus_n2 / (one_minus_n2 + n * n * r * r));
}

double constraint_residual(const FitParameters& p) {
  return std::abs(std::sqrt((1.0 - p.n * p.n) * (1.0 - p.n_prime * p.n_prime)) -
                  p.n * p.n_prime * std::abs(p.r));
}

double predict_mu(double mu_a, double mu_b, const FitParameters& params) {
  require_weight(mu_a, "predict_mu: mu_a must lie in [0, 1]");
  require_weight(mu_b, "predict_mu: mu_b must lie in [0, 1]");
  const double n = params.n;
  const double np = params.n_prime;
  const double cos_phi = std::cos(radians(params.phi_degrees));
  const double root_ab = std::sqrt(mu_a * mu_b);
  const double root_cab = std::sqrt((1.0 - mu_a) * (1.0 - mu_b));
  const double numerator = n * n * mu_a + np * np * mu_b + 2.0 * n * np * root_ab * cos_phi;
  const double denominator = n * n + np * np + 2.0 * n * np * cos_phi * (root_ab - root_cab);
  if (std::abs(denominator) <= kSingularTol)
    throw std::domain_error("predict_mu: singular configuration (vanishing denominator)");
  return numerator / denominator;
}

std::optional<double> solve_cos_phi(double mu_a, double mu_b, double mu_target, double n) {
  require_weight(mu_a, "solve_cos_phi: mu_a must lie in [0, 1]");
  require_weight(mu_b, "solve_cos_phi: mu_b must lie in [0, 1]");
  require_weight(mu_target, "solve_cos_phi: mu_target must lie in [0, 1]");
  if (!(n > 0.0 && n < 1.0))
    throw std::invalid_argument("solve_cos_phi: n must lie strictly inside (0, 1)");
  const double r = compute_r(mu_a, mu_b);
  const double np = nprime_from_n(n, r);
  const double denominator =
      2.0 * n * np * (std::sqrt(mu_a * mu_b) + r * mu_target);
  if (std::abs(denominator) <= kSingularTol) return std::nullopt;
  const double numerator =
      mu_target * (n * n + np * np) - n * n * mu_a - np * np * mu_b;
  return numerator / denominator;
}

namespace {

constexpr double kInfeasible = std::numeric_limits<double>::infinity();

// |cos phi| needed to hit the target at this n; +inf when unattainable.
double interference_cost(double mu_a, double mu_b, double mu_target, double n) {
  const auto c = solve_cos_phi(mu_a, mu_b, mu_target, n);
  if (!c || std::abs(*c) > 1.0) return kInfeasible;
  return std::abs(*c);
}

// Locates the feasibility edge between an infeasible and a feasible point.
double bisect_edge(double infeasible_n, double feasible_n, double mu_a, double mu_b,
                   double mu_target) {
  for (int i = 0; i < 80 && std::abs(feasible_n - infeasible_n) > kRefineTolN; ++i) {
    const double mid = 0.5 * (infeasible_n + feasible_n);
    if (interference_cost(mu_a, mu_b, mu_target, mid) < kInfeasible)
      feasible_n = mid;
    else
      infeasible_n = mid;
  }
  return feasible_n;
}

// d(cos phi)/dn up to a positive factor: with u = n^2, n' implied by the
// constraint and K = sqrt(ab) + r t, cos phi = P(u) / (2 K sqrt(u v(u)))
// where v = (1-u)/((1-u) + u r^2) and P = u(t-a) + v(t-b). The sign of the
// derivative in n equals the sign of P'Q - PQ'.
double cos_phi_slope(double a, double b, double t, double n) {
  const double r = compute_r(a, b);
  const double big_k = std::sqrt(a * b) + r * t;
  const double u = n * n;
  const double d = (1.0 - u) + u * r * r;
  const double v = (1.0 - u) / d;
  const double v_slope = -r * r / (d * d);
  const double p = u * (t - a) + v * (t - b);
  const double p_slope = (t - a) + v_slope * (t - b);
  const double root_uv = std::sqrt(u * v);
  const double q = 2.0 * big_k * root_uv;
  const double q_slope = big_k * (v + u * v_slope) / root_uv;
  return p_slope * q - p * q_slope;
}

// Generic sign-change bisection to kRefineTolN * 1e-2.
template <typename F>
double bisect_root(F&& f, double lo, double hi) {
  double f_lo = f(lo);
  for (int i = 0; i < 100 && hi - lo > kRefineTolN * 1e-2; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if ((f_lo <= 0.0) == (f_mid <= 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

FitResult fit(const MembershipTriple& t, int grid_steps) {
  validate(t);
  if (grid_steps < kMinGridSteps)
    throw std::invalid_argument("fit: grid_steps must be at least 16");

  const double a = t.mu_a;
  const double b = t.mu_b;
  const double target = t.mu_combined;
  const auto cost = [&](double n) { return interference_cost(a, b, target, n); };

  // Grid scan over the open interval (0, 1).
  const double step = 1.0 / grid_steps;
  int best_index = -1;
  int first_feasible = -1;
  int last_feasible = -1;
  double best_cost = kInfeasible;
  double best_n = 0.0;
  for (int i = 0; i < grid_steps; ++i) {
    const double n = (i + 0.5) * step;
    const double c = cost(n);
    if (c == kInfeasible) continue;
    if (first_feasible < 0) first_feasible = i;
    last_feasible = i;
    if (c < best_cost) {  // strict: ties resolve toward smaller n
      best_cost = c;
      best_index = i;
      best_n = n;
    }
  }

  FitResult result;
  if (best_index < 0) return result;  // empty feasible set

  // Golden-section refinement of the least-interference point, bracketed by
  // the grid neighbors. Infinite cost outside the feasible set keeps the
  // search inside it. The canonical n is the midpoint of the converged
  // bracket: near a flat minimum the best *evaluated* cost is resolved only
  // to sqrt(eps) in n, while the bracket itself pins the minimizer to
  // kRefineTolN, which the swap-symmetry of the fit relies on.
  double lo = std::max((best_index - 0.5) * step, step * 1e-3);
  double hi = std::min((best_index + 1.5) * step, 1.0 - step * 1e-3);
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double f1 = cost(x1);
  double f2 = cost(x2);
  const auto consider = [&](double n, double c) {
    if (c < best_cost || (c == best_cost && n < best_n)) {
      best_cost = c;
      best_n = n;
    }
  };
  consider(x1, f1);
  consider(x2, f2);
  while (hi - lo > kRefineTolN) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = cost(x1);
      consider(x1, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = cost(x2);
      consider(x2, f2);
    }
  }
  // Comparison-based search localizes a flat minimum only to about
  // sqrt(eps) in n. Relocate the minimum as a root instead: of cos phi when
  // it changes sign near the optimum, of the analytic slope otherwise.
  // Bisection on a sign is noise-immune, which keeps fits of (mu_a, mu_b)
  // and (mu_b, mu_a) mirrored to well below 1e-8.
  const double bracket_lo = std::max((best_index - 1.0 + 0.5) * step, step * 1e-3);
  const double bracket_hi = std::min((best_index + 1.0 + 0.5) * step, 1.0 - step * 1e-3);
  const auto raw_cos = [&](double n) { return solve_cos_phi(a, b, target, n); };
  const auto c_lo = raw_cos(bracket_lo);
  const auto c_mid = raw_cos(best_n);
  const auto c_hi = raw_cos(bracket_hi);
  if (c_lo && c_mid && c_hi && *c_mid != 0.0) {
    const auto sign_of = [](double x) { return x <= 0.0 ? -1 : 1; };
    double candidate = best_n;
    if (sign_of(*c_lo) != sign_of(*c_mid)) {
      candidate = bisect_root([&](double n) { return raw_cos(n).value_or(0.0); },
                              bracket_lo, best_n);
    } else if (sign_of(*c_mid) != sign_of(*c_hi)) {
      candidate = bisect_root([&](double n) { return raw_cos(n).value_or(0.0); },
                              best_n, bracket_hi);
    } else {
      // Same sign throughout: polish the stationary point of cos phi when
      // the bracket straddles one.
      const double direction = *c_mid > 0.0 ? 1.0 : -1.0;
      const double s_lo = direction * cos_phi_slope(a, b, target, bracket_lo);
      const double s_hi = direction * cos_phi_slope(a, b, target, bracket_hi);
      if (s_lo < 0.0 && s_hi > 0.0)
        candidate = bisect_root(
            [&](double n) { return direction * cos_phi_slope(a, b, target, n); },
            bracket_lo, bracket_hi);
    }
    if (interference_cost(a, b, target, candidate) < kInfeasible) best_n = candidate;
  }

  // Feasible-interval hull, edges sharpened by bisection.
  double n_lo = (first_feasible + 0.5) * step;
  double n_hi = (last_feasible + 0.5) * step;
  n_lo = bisect_edge(first_feasible > 0 ? n_lo - step : kRefineTolN, n_lo, a, b, target);
  n_hi = bisect_edge(last_feasible < grid_steps - 1 ? n_hi + step : 1.0 - kRefineTolN,
                     n_hi, a, b, target);

  const double r = compute_r(a, b);
  FitParameters params;
  params.n = best_n;
  params.n_prime = nprime_from_n(best_n, r);
  params.r = r;
  params.connective = t.connective;
  const double cos_phi = *solve_cos_phi(a, b, target, best_n);
  params.phi_degrees = degrees(std::acos(std::clamp(cos_phi, -1.0, 1.0)));

  result.feasible = true;
  result.params = params;
  result.feasible_n_interval = {n_lo, n_hi};
  result.predicted_mu = predict_mu(a, b, params);
  result.residual = std::abs(result.predicted_mu - target);
  if (result.residual > kRoundtripTol)
    throw std::logic_error("fit: feasible solution failed the roundtrip bound");
  return result;
}

}  // namespace qconcept
