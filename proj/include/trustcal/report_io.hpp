#pragma once

#include <filesystem>
#include <span>
#include <string>

#include <json.hpp>

#include "trustcal/opinion.hpp"
#include "trustcal/quantifier.hpp"
#include "trustcal/temperature.hpp"

namespace trustcal {

// JSON forms. All reals are rounded to 12 significant digits and key order is
// fixed, so identical inputs serialize to identical bytes.
nlohmann::ordered_json opinion_to_json(const BinomialOpinion& op);
nlohmann::ordered_json ece_to_json(const EceResult& result);
nlohmann::ordered_json report_to_json(const TrustReport& report);
nlohmann::ordered_json fit_to_json(const TemperatureFit& fit);

void write_report(const TrustReport& report, const std::filesystem::path& path);
void write_fit(const TemperatureFit& fit, const std::filesystem::path& path);

struct TaggedReport {
  std::string tag;
  TrustReport report;
};

// CSV with header tag,class,belief,disbelief,uncertainty,projected: one row
// per class plus a "network" pseudo-class row, grouped by tag in input order.
void write_curves(std::span<const TaggedReport> reports, const std::filesystem::path& path);

}  // namespace trustcal
