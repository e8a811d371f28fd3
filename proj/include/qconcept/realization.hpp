#pragma once

#include <Eigen/Dense>

#include "qconcept/classicality.hpp"
#include "qconcept/interference.hpp"

// Explicit C^3 realization of a fitted triple: two orthogonal unit state
// vectors plus commuting decision and item-context projectors, evaluated
// through the generic Born-rule pipeline. This is the independent oracle
// for the interference closed form.

namespace qconcept {

/// Concrete model of one concept pair in the canonical basis of C^3.
/// decision_proj is the yes-outcome projector of the membership decision,
/// context_proj encodes the deterministic state change of considering the
/// item. Invariants: both vectors unit (1e-10) and mutually orthogonal
/// (1e-8); both operators projectors and commuting (1e-10).
struct ConceptPairModel {
  Eigen::Vector3cd vec_a;
  Eigen::Vector3cd vec_b;
  Eigen::Matrix3cd decision_proj;
  Eigen::Matrix3cd context_proj;
  double phi_degrees = 0.0;
};

enum class WeightTarget { A, B, Combined };

// Constructs the canonical-basis model
//   M = diag(1,0,0),  N = diag(1,1,0),
//   |A> = (n sqrt(a), n sqrt(1-a), sqrt(1-n^2)),
//   |B> = e^{i phi} (n' sqrt(b), -n' sqrt(1-b), tau sqrt(1-n'^2)),
// with tau = sign(r) (third component zero when r = 0). Orthogonality of
// the two vectors is then exactly the amplitude constraint, so parameters
// violating it (within kConstraintTol) are rejected, as are parameter
// combinations that fail any model invariant.
ConceptPairModel build_model(const FitParameters& params, double mu_a, double mu_b);

/// Membership weight of the chosen target state, computed by the generic
/// pipeline: collapse by the context projector, then the Born probability
/// of the decision projector. The Combined target uses the normalized
/// superposition of the two concept vectors.
double contextualized_weight(const ConceptPairModel& model, WeightTarget target);

/// Residuals of the model invariants plus the three evaluated weights and
/// their deviations from a measured triple.
struct ModelVerification {
  double weight_a = 0.0;
  double weight_b = 0.0;
  double weight_combined = 0.0;
  double deviation_a = 0.0;
  double deviation_b = 0.0;
  double deviation_combined = 0.0;
  double unit_residual_a = 0.0;
  double unit_residual_b = 0.0;
  double orthogonality_residual = 0.0;
  double commutation_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// pass requires every weight deviation <= tol and the structural residuals
/// within their module tolerances (unit/commutation 1e-10, orthogonality
/// 1e-8).
ModelVerification verify_model(const ConceptPairModel& model, const MembershipTriple& t,
                               double tol);

}  // namespace qconcept
