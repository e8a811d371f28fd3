// qconcept command line: audit membership triples for classicality, fit the
// interference model, realize and verify explicit C^3 models, sweep
// interference curves, and emit synthetic datasets.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qconcept/dataset.hpp"
#include "qconcept/pipeline.hpp"

namespace {

struct CliOptions {
  std::string input;
  std::string output;  // empty: stdout
  double tolerance = qconcept::kDefaultVerifyTol;
  int grid_steps = qconcept::kDefaultGridSteps;
  std::string item;
  std::uint64_t seed = 0;
  // curve
  std::optional<double> mu_a;
  std::optional<double> mu_b;
  std::optional<double> amplitude_n;
  int samples = 181;
  // synth
  std::int64_t draws = 10000;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int run_report(const CliOptions& opt, qconcept::PipelineStage stage) {
  const auto dataset = qconcept::read_dataset_file(opt.input);
  qconcept::PipelineOptions pipeline;
  pipeline.stage = stage;
  pipeline.grid_steps = opt.grid_steps;
  pipeline.tolerance = opt.tolerance;
  pipeline.item_filter = opt.item;
  const auto reports = qconcept::run_pipeline(dataset, pipeline);
  write_output(opt.output, qconcept::report_to_json(dataset, reports, pipeline).dump(2) + "\n");
  return 0;
}

int run_curve(const CliOptions& opt) {
  double mu_a = 0.0;
  double mu_b = 0.0;
  double n = 0.0;
  if (!opt.input.empty()) {
    const auto dataset = qconcept::read_dataset_file(opt.input);
    const qconcept::MembershipTriple* row = nullptr;
    for (const auto& t : dataset.rows)
      if (opt.item.empty() || t.item == opt.item) {
        if (row) throw std::runtime_error("curve: multiple rows match; use --item to pick one");
        row = &t;
      }
    if (!row) throw std::runtime_error("curve: no row matches --item '" + opt.item + "'");
    mu_a = row->mu_a;
    mu_b = row->mu_b;
    if (opt.amplitude_n) {
      n = *opt.amplitude_n;
    } else {
      const auto fitted = qconcept::fit(*row, opt.grid_steps);
      if (!fitted.feasible)
        throw std::runtime_error("curve: row is infeasible; pass --n explicitly");
      n = fitted.params->n;
    }
  } else {
    if (!opt.mu_a || !opt.mu_b || !opt.amplitude_n)
      throw std::runtime_error("curve: need --input or all of --mu-a, --mu-b, --n");
    mu_a = *opt.mu_a;
    mu_b = *opt.mu_b;
    n = *opt.amplitude_n;
  }
  write_output(opt.output, qconcept::curve_to_csv(qconcept::emit_curve(mu_a, mu_b, n, opt.samples)));
  return 0;
}

int run_synth(const CliOptions& opt) {
  const auto truth = qconcept::read_dataset_file(opt.input);
  const auto noisy = qconcept::synthesize_dataset(truth, opt.draws, opt.seed);
  write_output(opt.output, qconcept::write_csv(noisy));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audit concept-combination membership data for classicality, fit the "
               "interference model, and realize Born-rule models in C^3"};
  app.require_subcommand(1);

  CliOptions opt;
  const auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* in = cmd->add_option("--input", opt.input, "input CSV path");
    if (needs_input) in->required();
    cmd->add_option("--output", opt.output, "output path (default: stdout)");
    cmd->add_option("--item", opt.item, "only process the row with this item name");
    cmd->add_option("--grid-steps", opt.grid_steps, "fit scan resolution")
        ->check(CLI::Range(qconcept::kMinGridSteps, 1 << 20));
    return cmd;
  };

  auto* audit = add_common(app.add_subcommand("audit", "classicality audit only"), true);
  auto* fit_cmd = add_common(app.add_subcommand("fit", "audit plus interference fit"), true);
  auto* realize =
      add_common(app.add_subcommand("realize", "audit, fit and build C^3 models"), true);
  auto* verify = add_common(
      app.add_subcommand("verify", "full pipeline with Born-rule verification"), true);
  for (auto* cmd : {audit, fit_cmd, realize, verify})
    cmd->add_option("--tolerance", opt.tolerance,
                    "allowed weight deviation for model verification");

  auto* curve = add_common(app.add_subcommand("curve", "interference-curve sweep as CSV"),
                           false);
  curve->add_option("--mu-a", opt.mu_a, "membership weight of concept A");
  curve->add_option("--mu-b", opt.mu_b, "membership weight of concept B");
  curve->add_option("--n", opt.amplitude_n, "amplitude n (default: fitted canonical n)");
  curve->add_option("--samples", opt.samples, "number of angle samples")
      ->check(CLI::Range(2, 1 << 20));

  auto* synth = add_common(
      app.add_subcommand("synth", "resample weights as finite-experiment frequencies"), true);
  synth->add_option("--draws", opt.draws, "judgments per weight")->check(CLI::Range(1, 1 << 30));
  synth->add_option("--seed", opt.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (audit->parsed()) return run_report(opt, qconcept::PipelineStage::Audit);
    if (fit_cmd->parsed()) return run_report(opt, qconcept::PipelineStage::Fit);
    if (realize->parsed()) return run_report(opt, qconcept::PipelineStage::Realize);
    if (verify->parsed()) return run_report(opt, qconcept::PipelineStage::Verify);
    if (curve->parsed()) return run_curve(opt);
    if (synth->parsed()) return run_synth(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    // plain logic_error marks a broken internal invariant
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
