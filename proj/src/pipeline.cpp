#include "qconcept/pipeline.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qconcept {

namespace {

nlohmann::json complex_to_json(const std::complex<double>& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json vector_to_json(const Eigen::Vector3cd& v) {
  return nlohmann::json::array({complex_to_json(v(0)), complex_to_json(v(1)),
                                complex_to_json(v(2))});
}

nlohmann::json projector_diagonal(const Eigen::Matrix3cd& m) {
  return nlohmann::json::array({m(0, 0).real(), m(1, 1).real(), m(2, 2).real()});
}

nlohmann::json verdict_to_json(const ClassicalityVerdict& v) {
  return {{"deficit_1", v.deficit_1},
          {"deficit_2", v.deficit_2},
          {"kolmogorovian", v.kolmogorovian},
          {"extension_class", to_string(v.extension_class)}};
}

nlohmann::json fit_to_json(const FitResult& f) {
  nlohmann::json j = {{"feasible", f.feasible}};
  if (f.feasible && f.params) {
    j["n"] = f.params->n;
    j["n_prime"] = f.params->n_prime;
    j["phi_degrees"] = f.params->phi_degrees;
    j["r"] = f.params->r;
    j["feasible_n_interval"] =
        nlohmann::json::array({f.feasible_n_interval.first, f.feasible_n_interval.second});
    j["predicted_mu"] = f.predicted_mu;
    j["residual"] = f.residual;
  } else {
    j["n"] = nullptr;
    j["n_prime"] = nullptr;
    j["phi_degrees"] = nullptr;
    j["r"] = nullptr;
    j["feasible_n_interval"] = nullptr;
    j["predicted_mu"] = nullptr;
    j["residual"] = nullptr;
  }
  return j;
}

nlohmann::json model_to_json(const ConceptPairModel& m) {
  return {{"vec_a", vector_to_json(m.vec_a)},
          {"vec_b", vector_to_json(m.vec_b)},
          {"phi_degrees", m.phi_degrees},
          {"decision_diagonal", projector_diagonal(m.decision_proj)},
          {"context_diagonal", projector_diagonal(m.context_proj)}};
}

nlohmann::json verification_to_json(const ModelVerification& v) {
  return {{"weight_a", v.weight_a},
          {"weight_b", v.weight_b},
          {"weight_combined", v.weight_combined},
          {"deviation_a", v.deviation_a},
          {"deviation_b", v.deviation_b},
          {"deviation_combined", v.deviation_combined},
          {"unit_residual_a", v.unit_residual_a},
          {"unit_residual_b", v.unit_residual_b},
          {"orthogonality_residual", v.orthogonality_residual},
          {"commutation_residual", v.commutation_residual},
          {"tolerance", v.tolerance},
          {"pass", v.pass}};
}

}  // namespace

std::vector<ItemReport> run_pipeline(const Dataset& dataset, const PipelineOptions& options) {
  std::vector<ItemReport> reports;
  reports.reserve(dataset.rows.size());

  for (const auto& row : dataset.rows) {
    if (!options.item_filter.empty() && row.item != options.item_filter) continue;
    ItemReport report;
    report.triple = row;
    try {
      report.verdict = classify(row);
      if (options.stage >= PipelineStage::Fit) {
        report.fit = fit(row, options.grid_steps);
        if (options.stage >= PipelineStage::Realize && report.fit->feasible) {
          report.model = build_model(*report.fit->params, row.mu_a, row.mu_b);
          if (options.stage >= PipelineStage::Verify)
            report.verification = verify_model(*report.model, row, options.tolerance);
        }
      }
    } catch (const std::invalid_argument& e) {
      report.error = e.what();
    } catch (const std::domain_error& e) {
      report.error = e.what();
    } catch (const std::logic_error&) {
      throw;  // plain logic_error marks a broken internal invariant: abort
    } catch (const std::exception& e) {
      report.error = e.what();
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

nlohmann::json report_to_json(const Dataset& dataset, const std::vector<ItemReport>& reports,
                              const PipelineOptions& options) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json item = {
        {"item", r.triple.item},
        {"concept_a", r.triple.concept_a},
        {"concept_b", r.triple.concept_b},
        {"connective", to_string(r.triple.connective)},
        {"mu_a", r.triple.mu_a},
        {"mu_b", r.triple.mu_b},
        {"mu_combined", r.triple.mu_combined},
        {"verdict", verdict_to_json(r.verdict)},
        {"fit", r.fit ? fit_to_json(*r.fit) : nlohmann::json(nullptr)},
        {"model", r.model ? model_to_json(*r.model) : nlohmann::json(nullptr)},
        {"verification",
         r.verification ? verification_to_json(*r.verification) : nlohmann::json(nullptr)},
        {"error", r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr)},
    };
    items.push_back(std::move(item));
  }
  return {{"source", dataset.source_name},
          {"tool_version", kToolVersion},
          {"tolerance", options.tolerance},
          {"grid_steps", options.grid_steps},
          {"items", std::move(items)}};
}

std::vector<CurvePoint> emit_curve(double mu_a, double mu_b, double n, int samples) {
  if (!(n > 0.0 && n < 1.0))
    throw std::invalid_argument("emit_curve: n must lie strictly inside (0, 1)");
  if (samples < 2) throw std::invalid_argument("emit_curve: at least 2 samples required");

  const double r = compute_r(mu_a, mu_b);
  FitParameters params;
  params.n = n;
  params.n_prime = nprime_from_n(n, r);
  params.r = r;

  std::vector<CurvePoint> points;
  points.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    CurvePoint p;
    p.phi_degrees = 180.0 * i / (samples - 1);
    params.phi_degrees = p.phi_degrees;
    try {
      p.mu = predict_mu(mu_a, mu_b, params);
      p.ok = true;
    } catch (const std::domain_error&) {
      p.mu = std::nan("");
      p.ok = false;
    }
    points.push_back(p);
  }
  return points;
}

std::string curve_to_csv(const std::vector<CurvePoint>& points) {
  std::string out = "phi_degrees,mu\n";
  std::array<char, 32> buf{};
  const auto append = [&](double value) {
    if (std::isnan(value)) {
      out += "nan";
      return;
    }
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    out.append(buf.data(), ptr);
  };
  for (const auto& p : points) {
    append(p.phi_degrees);
    out += ',';
    append(p.mu);
    out += '\n';
  }
  return out;
}

}  // namespace qconcept
