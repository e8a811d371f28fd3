#include "qconcept/realization.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qconcept/qlinalg.hpp"

namespace qconcept {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

ConceptPairModel build_model(const FitParameters& params, double mu_a, double mu_b) {
  require(mu_a >= 0.0 && mu_a <= 1.0 && mu_b >= 0.0 && mu_b <= 1.0,
          "build_model: weights must lie in [0, 1]");
  require(params.n > 0.0 && params.n <= 1.0 && params.n_prime > 0.0 && params.n_prime <= 1.0,
          "build_model: amplitudes must lie in (0, 1]");
  require(constraint_residual(params) <= kConstraintTol,
          "build_model: parameters violate the amplitude constraint");

  const double n = params.n;
  const double np = params.n_prime;
  const double tau = params.r < 0.0 ? -1.0 : (params.r > 0.0 ? 1.0 : 0.0);
  const std::complex<double> phase =
      std::polar(1.0, params.phi_degrees * kPi / 180.0);

  ConceptPairModel model;
  model.vec_a << n * std::sqrt(mu_a), n * std::sqrt(1.0 - mu_a), std::sqrt(1.0 - n * n);
  model.vec_b << phase * (np * std::sqrt(mu_b)), phase * (-np * std::sqrt(1.0 - mu_b)),
      phase * (tau * std::sqrt(1.0 - np * np));
  model.decision_proj = qlinalg::diagonal_projector({1, 0, 0});
  model.context_proj = qlinalg::diagonal_projector({1, 1, 0});
  model.phi_degrees = params.phi_degrees;

  require(qlinalg::is_unit(model.vec_a) && qlinalg::is_unit(model.vec_b),
          "build_model: parameters do not produce unit state vectors");
  require(std::abs(model.vec_a.dot(model.vec_b)) <= qlinalg::kOrthogonalityTol,
          "build_model: parameters do not produce orthogonal state vectors");
  return model;
}

double contextualized_weight(const ConceptPairModel& model, WeightTarget target) {
  Eigen::Vector3cd state;
  switch (target) {
    case WeightTarget::A: state = model.vec_a; break;
    case WeightTarget::B: state = model.vec_b; break;
    case WeightTarget::Combined:
      state = qlinalg::superpose(model.vec_a, model.vec_b);
      break;
  }
  try {
    const Eigen::Vector3cd contextualized = qlinalg::collapse(state, model.context_proj);
    return qlinalg::born_probability(contextualized, model.decision_proj);
  } catch (const std::domain_error&) {
    throw std::domain_error(
        "contextualized_weight: context projector annihilates the target state");
  }
}

ModelVerification verify_model(const ConceptPairModel& model, const MembershipTriple& t,
                               double tol) {
  ModelVerification v;
  v.tolerance = tol;
  v.weight_a = contextualized_weight(model, WeightTarget::A);
  v.weight_b = contextualized_weight(model, WeightTarget::B);
  v.weight_combined = contextualized_weight(model, WeightTarget::Combined);
  v.deviation_a = std::abs(v.weight_a - t.mu_a);
  v.deviation_b = std::abs(v.weight_b - t.mu_b);
  v.deviation_combined = std::abs(v.weight_combined - t.mu_combined);
  v.unit_residual_a = std::abs(model.vec_a.squaredNorm() - 1.0);
  v.unit_residual_b = std::abs(model.vec_b.squaredNorm() - 1.0);
  v.orthogonality_residual = std::abs(model.vec_a.dot(model.vec_b));
  v.commutation_residual = (model.decision_proj * model.context_proj -
                            model.context_proj * model.decision_proj)
                               .cwiseAbs()
                               .maxCoeff();
  const bool structural =
      v.unit_residual_a <= qlinalg::kStructuralTol &&
      v.unit_residual_b <= qlinalg::kStructuralTol &&
      v.orthogonality_residual <= qlinalg::kOrthogonalityTol &&
      v.commutation_residual <= qlinalg::kStructuralTol &&
      qlinalg::is_projector(model.decision_proj) && qlinalg::is_projector(model.context_proj);
  v.pass = structural && v.deviation_a <= tol && v.deviation_b <= tol &&
           v.deviation_combined <= tol;
  return v;
}

}  // namespace qconcept
