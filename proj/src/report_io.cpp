#include "trustcal/report_io.hpp"

#include <fstream>

#include "trustcal/error.hpp"
#include "trustcal/numfmt.hpp"

namespace trustcal {

namespace {

using nlohmann::ordered_json;

double r12(double v) { return round_sig12(v); }

void write_json_file(const ordered_json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write '" + path.string() + "'");
  }
  out << doc.dump(2) << '\n';
  if (!out.good()) {
    throw InputError("write failed for '" + path.string() + "'");
  }
}

}  // namespace

ordered_json opinion_to_json(const BinomialOpinion& op) {
  return ordered_json{{"belief", r12(op.belief)},
                      {"disbelief", r12(op.disbelief)},
                      {"uncertainty", r12(op.uncertainty)},
                      {"base_rate", r12(op.base_rate)},
                      {"projected", r12(projected_probability(op))}};
}

ordered_json ece_to_json(const EceResult& result) {
  ordered_json bins = ordered_json::array();
  for (std::size_t m = 0; m < result.per_bin.size(); ++m) {
    const EceBin& bin = result.per_bin[m];
    bins.push_back(ordered_json{{"index", m},
                                {"count", bin.count},
                                {"confidence", r12(bin.confidence)},
                                {"accuracy", r12(bin.accuracy)}});
  }
  return ordered_json{{"ece", r12(result.ece)}, {"bins", std::move(bins)}};
}

ordered_json report_to_json(const TrustReport& report) {
  const QuantifierConfig& config = report.config;
  ordered_json config_json{
      {"bins", config.bin_count},
      {"ece_bins", config.ece_bin_count > 0 ? config.ece_bin_count : config.bin_count},
      {"alpha", r12(config.alpha)},
      {"beta", r12(config.beta)},
      {"prior_weight", r12(config.prior.weight)},
      {"base_rate", r12(config.prior.base_rate)}};

  ordered_json classes = ordered_json::array();
  for (const ClassReport& entry : report.classes) {
    ordered_json clusters = ordered_json::array();
    for (const ClusterReport& cluster : entry.clusters) {
      clusters.push_back(ordered_json{{"bin", cluster.bin},
                                      {"representative", r12(cluster.representative)},
                                      {"n", cluster.n},
                                      {"t", cluster.t},
                                      {"r", r12(cluster.r)},
                                      {"s", r12(cluster.s)},
                                      {"opinion", opinion_to_json(cluster.opinion)}});
    }
    classes.push_back(ordered_json{{"class", entry.class_index},
                                   {"opinion", opinion_to_json(entry.opinion)},
                                   {"vacuous", entry.vacuous},
                                   {"clusters", std::move(clusters)}});
  }

  return ordered_json{{"version", 1},
                      {"config", std::move(config_json)},
                      {"ece", ece_to_json(report.ece)},
                      {"classes", std::move(classes)},
                      {"network", ordered_json{{"opinion", opinion_to_json(report.network)}}}};
}

ordered_json fit_to_json(const TemperatureFit& fit) {
  return ordered_json{{"temperature", r12(fit.temperature)},
                      {"nll_before", r12(fit.nll_before)},
                      {"nll_after", r12(fit.nll_after)},
                      {"boundary", fit.boundary}};
}

void write_report(const TrustReport& report, const std::filesystem::path& path) {
  write_json_file(report_to_json(report), path);
}

void write_fit(const TemperatureFit& fit, const std::filesystem::path& path) {
  write_json_file(fit_to_json(fit), path);
}

void write_curves(std::span<const TaggedReport> reports, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write '" + path.string() + "'");
  }
  out << "tag,class,belief,disbelief,uncertainty,projected\n";
  auto row = [&](const std::string& tag, const std::string& cls, const BinomialOpinion& op) {
    out << tag << ',' << cls << ',' << format_g12(op.belief) << ','
        << format_g12(op.disbelief) << ',' << format_g12(op.uncertainty) << ','
        << format_g12(projected_probability(op)) << '\n';
  };
  for (const TaggedReport& tagged : reports) {
    for (const ClassReport& entry : tagged.report.classes) {
      row(tagged.tag, std::to_string(entry.class_index), entry.opinion);
    }
    row(tagged.tag, "network", tagged.report.network);
  }
  if (!out.good()) {
    throw InputError("write failed for '" + path.string() + "'");
  }
}

}  // namespace trustcal
