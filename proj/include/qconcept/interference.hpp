#pragma once

#include <optional>
#include <utility>

#include "qconcept/classicality.hpp"

// Interference model of a combined membership weight. Writing a = mu(A),
// b = mu(B), the combined weight predicted from amplitudes n, n' and an
// interference angle phi is
//
//              n^2 a + n'^2 b + 2 n n' sqrt(ab) cos(phi)
//   mu = ---------------------------------------------------------
//         n^2 + n'^2 + 2 n n' cos(phi) (sqrt(ab) - sqrt((1-a)(1-b)))
//
// subject to the amplitude constraint
//
//   sqrt((1-n^2)(1-n'^2)) = n n' |r|,   r = sqrt((1-a)(1-b)) - sqrt(ab).
//
// The same closed form covers conjunctions and disjunctions; only the
// reported angle is tagged differently. Fitting a measured triple is a
// one-dimensional feasibility problem in n: the constraint pins n' and the
// target weight pins cos(phi).

namespace qconcept {

inline constexpr int kDefaultGridSteps = 1024;
inline constexpr int kMinGridSteps = 16;
// Tolerance on the amplitude constraint for externally supplied parameters.
inline constexpr double kConstraintTol = 1e-8;
// A feasible fit must reproduce the measured weight at least this well.
inline constexpr double kRoundtripTol = 1e-9;

struct FitParameters {
  double n = 0.0;
  double n_prime = 0.0;
  double phi_degrees = 0.0;  // in [0, 180]
  double r = 0.0;
  Connective connective = Connective::Conjunction;
};

struct FitResult {
  bool feasible = false;
  std::optional<FitParameters> params;  // absent when infeasible
  // Hull [lo, hi] of the feasible n set located by the scan (bisection
  // refined at the edges). Meaningful only when feasible.
  std::pair<double, double> feasible_n_interval{0.0, 0.0};
  double predicted_mu = 0.0;
  double residual = 0.0;
};

/// r = sqrt((1-a)(1-b)) - sqrt(ab); symmetric, ranges over [-1, 1].
double compute_r(double mu_a, double mu_b);

/// The n' in (0, 1] that satisfies the amplitude constraint for a given
/// n in (0, 1):  n'^2 = (1-n^2) / ((1-n^2) + n^2 r^2).
double nprime_from_n(double n, double r);

/// |sqrt((1-n^2)(1-n'^2)) - n n' |r||, the amplitude-constraint residual.
double constraint_residual(const FitParameters& p);

/// Forward evaluation of the closed form above. Throws std::domain_error
/// when the denominator vanishes (singular configuration). The result is a
/// probability in [0, 1] whenever the parameters honor the constraint and
/// |cos phi| <= 1.
double predict_mu(double mu_a, double mu_b, const FitParameters& params);

/// Inverts the closed form for cos(phi) at a given n (n' implied by the
/// constraint). Returns nullopt when the inversion denominator is
/// (near-)zero, meaning the angle has no leverage at this n. The returned
/// value is feasible as an angle only when its magnitude is <= 1.
std::optional<double> solve_cos_phi(double mu_a, double mu_b, double mu_target, double n);

/// Scans n over a uniform open grid in (0, 1), keeps the n where the
/// required |cos phi| is smallest (least interference), refines it by
/// golden-section search to 1e-10 in n, and reports the feasible-interval
/// hull. Infeasibility is a result state, not an error. grid_steps >= 16.
FitResult fit(const MembershipTriple& t, int grid_steps = kDefaultGridSteps);

}  // namespace qconcept
