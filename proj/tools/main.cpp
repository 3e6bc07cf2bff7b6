// trustcal: trust quantification and calibration for classifier prediction
// logs. Subcommands: quantify, ece, calibrate, synth, sweep.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "trustcal/error.hpp"
#include "trustcal/quantifier.hpp"
#include "trustcal/record_io.hpp"
#include "trustcal/report_io.hpp"
#include "trustcal/synth.hpp"
#include "trustcal/temperature.hpp"

namespace {

using namespace trustcal;

struct CommonOptions {
  QuantifierConfig config;
  std::string variant = "auto";  // auto | probs | logits
  double temperature = 1.0;     // applied when the input holds logits
};

std::optional<RecordKind> forced_kind(const std::string& variant) {
  if (variant == "probs") return RecordKind::Probabilities;
  if (variant == "logits") return RecordKind::Logits;
  return std::nullopt;
}

// Logit inputs are converted to probabilities before quantification; the
// temperature flag controls the softmax scale (1 = plain softmax).
RecordSet load_probabilities(const std::filesystem::path& path, const CommonOptions& opts) {
  RecordSet records = read_records(path, forced_kind(opts.variant));
  if (records.kind() == RecordKind::Logits) {
    return apply_temperature(records, opts.temperature);
  }
  return records;
}

void add_config_flags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--bins", opts.config.bin_count, "probability clusters per class")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000000));
  cmd->add_option("--ece-bins", opts.config.ece_bin_count,
                  "ece bin count (default: same as --bins)")
      ->check(CLI::Range(1, 1000000));
  cmd->add_option("--alpha", opts.config.alpha, "penalty on surplus correct classifications")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--beta", opts.config.beta, "penalty on missing correct classifications")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--prior-weight", opts.config.prior.weight, "vacuous evidence mass W")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--base-rate", opts.config.prior.base_rate, "prior probability of trust")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--variant", opts.variant, "force input variant: probs or logits")
      ->check(CLI::IsMember({"auto", "probs", "logits"}));
  cmd->add_option("--temperature", opts.temperature,
                  "softmax temperature applied to logit inputs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void print_network_summary(const TrustReport& report, std::size_t records) {
  std::printf("records: %zu  classes: %zu\n", records, report.classes.size());
  std::printf("network: belief=%.6f disbelief=%.6f uncertainty=%.6f projected=%.6f\n",
              report.network.belief, report.network.disbelief, report.network.uncertainty,
              projected_probability(report.network));
  std::printf("ece: %.6f (bins=%zu)\n", report.ece.ece, report.ece.per_bin.size());
}

int run_quantify(const std::string& input, const std::string& output,
                 const CommonOptions& opts) {
  const RecordSet records = load_probabilities(input, opts);
  const TrustReport report = quantify(records, opts.config);
  print_network_summary(report, records.size());
  if (!output.empty()) {
    write_report(report, output);
    std::printf("report: %s\n", output.c_str());
  }
  return 0;
}

int run_ece(const std::string& input, const std::string& output, const CommonOptions& opts) {
  const RecordSet records = load_probabilities(input, opts);
  const int bins = opts.config.ece_bin_count > 0 ? opts.config.ece_bin_count
                                                 : opts.config.bin_count;
  const EceResult result = compute_ece(records, make_uniform_bins(bins));
  std::printf("records: %zu  classes: %d\n", records.size(), records.class_count());
  std::printf("ece: %.6f (bins=%d)\n", result.ece, bins);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw InputError("cannot write '" + output + "'");
    out << ece_to_json(result).dump(2) << '\n';
    std::printf("result: %s\n", output.c_str());
  }
  return 0;
}

int run_calibrate(const std::string& input, const std::string& output,
                  const std::string& emit, const std::string& variant) {
  const RecordSet records = read_records(input, forced_kind(variant));
  if (records.kind() != RecordKind::Logits) {
    throw InputError("temperature calibration needs logits; '" + input +
                     "' holds probabilities");
  }
  const TemperatureFit fit = fit_temperature(records);
  std::printf("temperature: %.6f\n", fit.temperature);
  std::printf("nll: %.6f -> %.6f\n", fit.nll_before, fit.nll_after);
  std::printf("iterations: %d\n", fit.iterations);
  std::printf("boundary: %s\n", fit.boundary ? "yes" : "no");
  if (!output.empty()) {
    write_fit(fit, output);
    std::printf("summary: %s\n", output.c_str());
  }
  if (!emit.empty()) {
    write_records(apply_temperature(records, fit.temperature), emit, format_for_path(emit));
    std::printf("calibrated: %s\n", emit.c_str());
  }
  return 0;
}

int run_synth(const SynthSpec& spec, const std::string& output, const std::string& truth_out) {
  const SynthResult result = synth_generate(spec);
  write_records(result.records, output, format_for_path(output));
  std::printf("records: %lld  classes: %d  sharpening: %g  seed: %llu\n",
              static_cast<long long>(spec.sample_count), spec.class_count, spec.sharpening,
              static_cast<unsigned long long>(spec.seed));
  std::printf("output: %s\n", output.c_str());
  if (!truth_out.empty()) {
    write_truth_csv(result.ground_truth, spec.class_count, truth_out);
    std::printf("truth: %s\n", truth_out.c_str());
  }
  return 0;
}

int run_sweep(const std::vector<std::string>& tagged_inputs, const std::string& output,
              const CommonOptions& opts) {
  std::vector<TaggedReport> reports;
  int failed = 0;
  for (const std::string& spec : tagged_inputs) {
    const auto split = spec.find('=');
    if (split == std::string::npos || split == 0 || split + 1 == spec.size()) {
      throw InputError("sweep inputs must look like tag=path, got '" + spec + "'");
    }
    const std::string tag = spec.substr(0, split);
    const std::string path = spec.substr(split + 1);
    try {
      const RecordSet records = load_probabilities(path, opts);
      reports.push_back({tag, quantify(records, opts.config)});
      std::printf("%s: ok (%zu records)\n", tag.c_str(), records.size());
    } catch (const std::exception& e) {
      std::fprintf(stderr, "%s: failed: %s\n", tag.c_str(), e.what());
      ++failed;
    }
  }
  write_curves(reports, output);
  std::printf("curves: %s (%zu of %zu inputs)\n", output.c_str(), reports.size(),
              tagged_inputs.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trust quantification and calibration for classifier prediction logs"};
  app.require_subcommand(1);
  int exit_code = 0;

  // quantify
  CommonOptions quantify_opts;
  std::string quantify_input, quantify_output;
  auto* quantify_cmd =
      app.add_subcommand("quantify", "evidence-based trust report for a prediction log");
  quantify_cmd->add_option("--input", quantify_input, "record file (csv or jsonl)")
      ->required();
  quantify_cmd->add_option("--output", quantify_output, "trust report (json)");
  add_config_flags(quantify_cmd, quantify_opts);
  quantify_cmd->callback(
      [&] { exit_code = run_quantify(quantify_input, quantify_output, quantify_opts); });

  // ece
  CommonOptions ece_opts;
  std::string ece_input, ece_output;
  auto* ece_cmd = app.add_subcommand("ece", "expected calibration error only");
  ece_cmd->add_option("--input", ece_input, "record file (csv or jsonl)")->required();
  ece_cmd->add_option("--output", ece_output, "ece result (json)");
  add_config_flags(ece_cmd, ece_opts);
  ece_cmd->callback([&] { exit_code = run_ece(ece_input, ece_output, ece_opts); });

  // calibrate
  std::string cal_input, cal_output, cal_emit, cal_variant = "auto";
  auto* cal_cmd =
      app.add_subcommand("calibrate", "fit a softmax temperature by minimizing the nll");
  cal_cmd->add_option("--input", cal_input, "logit record file")->required();
  cal_cmd->add_option("--output", cal_output, "fit summary (json)");
  cal_cmd->add_option("--emit-calibrated", cal_emit,
                      "write calibrated probability records to this path");
  cal_cmd->add_option("--variant", cal_variant, "force input variant")
      ->check(CLI::IsMember({"auto", "probs", "logits"}));
  cal_cmd->callback(
      [&] { exit_code = run_calibrate(cal_input, cal_output, cal_emit, cal_variant); });

  // synth
  SynthSpec synth_spec;
  synth_spec.sample_count = 1000;
  synth_spec.class_count = 10;
  std::string synth_output, synth_truth;
  auto* synth_cmd =
      app.add_subcommand("synth", "seeded synthetic prediction log with known ground truth");
  synth_cmd->add_option("--output", synth_output, "record file to write (.csv or .jsonl)")
      ->required();
  synth_cmd->add_option("--samples", synth_spec.sample_count, "number of records")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
  synth_cmd->add_option("--classes", synth_spec.class_count, "number of classes")
      ->capture_default_str()
      ->check(CLI::Range(2, 100000));
  synth_cmd->add_option("--sharpen", synth_spec.sharpening,
                        "logit scale k (1 calibrated, >1 overconfident)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--concentration", synth_spec.concentration,
                        "symmetric dirichlet parameter")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", synth_spec.seed, "rng seed")->capture_default_str();
  synth_cmd->add_option("--truth-out", synth_truth, "ground-truth sidecar csv");
  synth_cmd->callback([&] { exit_code = run_synth(synth_spec, synth_output, synth_truth); });

  // sweep
  CommonOptions sweep_opts;
  std::vector<std::string> sweep_inputs;
  std::string sweep_output;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "quantify several logs and emit per-class trust curves");
  sweep_cmd->add_option("inputs", sweep_inputs, "tagged record files, tag=path")
      ->required()
      ->expected(-1);
  sweep_cmd->add_option("--output", sweep_output, "curves csv")->required();
  add_config_flags(sweep_cmd, sweep_opts);
  sweep_cmd->callback(
      [&] { exit_code = run_sweep(sweep_inputs, sweep_output, sweep_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const trustcal::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
