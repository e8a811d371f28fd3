#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qconcept/dataset.hpp"
#include "qconcept/interference.hpp"
#include "qconcept/realization.hpp"

// Batch orchestration: classify, fit, realize and verify each dataset row,
// assemble a schema-stable JSON report, and sweep the interference curve
// for plotting.

namespace qconcept {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr double kDefaultVerifyTol = 1e-3;

enum class PipelineStage { Audit, Fit, Realize, Verify };

struct PipelineOptions {
  PipelineStage stage = PipelineStage::Verify;
  int grid_steps = kDefaultGridSteps;
  double tolerance = kDefaultVerifyTol;
  std::string item_filter;  // empty: keep all rows
};

/// Everything the pipeline learned about one row. Stages that did not run
/// (or could not, e.g. no model for an infeasible fit) leave their field
/// empty; a per-row failure is captured in `error` instead of aborting the
/// batch.
struct ItemReport {
  MembershipTriple triple;
  ClassicalityVerdict verdict;
  std::optional<FitResult> fit;
  std::optional<ConceptPairModel> model;
  std::optional<ModelVerification> verification;
  std::optional<std::string> error;
};

/// Report order equals input order. Per-row exceptions are embedded in the
/// row's report; only malformed options throw.
std::vector<ItemReport> run_pipeline(const Dataset& dataset, const PipelineOptions& options);

/// Stable schema: every item object carries the same field set, with null
/// for absent stages. Angles in degrees, residuals absolute, numbers
/// locale-independent.
nlohmann::json report_to_json(const Dataset& dataset, const std::vector<ItemReport>& reports,
                              const PipelineOptions& options);

// Interference-curve sweep: mu as a function of phi on a uniform grid over
// [0, 180] degrees, at fixed weights and amplitude n.
struct CurvePoint {
  double phi_degrees = 0.0;
  double mu = 0.0;
  bool ok = false;  // false marks a singular configuration at this angle
};

std::vector<CurvePoint> emit_curve(double mu_a, double mu_b, double n, int samples);

/// Two-column CSV `phi_degrees,mu`; singular rows carry "nan" in the mu
/// column.
std::string curve_to_csv(const std::vector<CurvePoint>& points);

}  // namespace qconcept
