#include "trustcal/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trustcal/error.hpp"

namespace trustcal::reference {

EvidenceGrid accumulate_evidence(const RecordSet& records, const QuantifierConfig& config) {
  validate_config(config);
  if (records.kind() != RecordKind::Probabilities) {
    throw std::invalid_argument("evidence accumulation requires probability records");
  }
  if (records.empty()) throw EmptyInputError{};

  const int class_count = records.class_count();
  BinningScheme scheme = make_uniform_bins(config.bin_count);
  std::vector<std::int64_t> n(static_cast<std::size_t>(class_count) * config.bin_count, 0);
  std::vector<std::int64_t> t(n.size(), 0);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto row = records.row(i);
    const int label = records.label(i);
    for (int c = 0; c < class_count; ++c) {
      const std::size_t k =
          static_cast<std::size_t>(c) * config.bin_count + assign_bin(row[c], scheme);
      n[k] += 1;
      t[k] += label == c ? 1 : 0;
    }
  }
  return EvidenceGrid(class_count, std::move(scheme), std::move(n), std::move(t),
                      config.alpha, config.beta);
}

EceResult compute_ece(const RecordSet& records, const BinningScheme& scheme) {
  if (records.kind() != RecordKind::Probabilities) {
    throw std::invalid_argument("ece requires probability records");
  }
  if (records.empty()) throw EmptyInputError{};

  std::vector<std::int64_t> count(scheme.bin_count, 0), correct(scheme.bin_count, 0);
  std::vector<double> conf(scheme.bin_count, 0.0);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto row = records.row(i);
    const std::size_t top = argmax_index(row);
    const int m = assign_bin(row[top], scheme);
    count[m] += 1;
    conf[m] += row[top];
    correct[m] += static_cast<int>(top) == records.label(i) ? 1 : 0;
  }
  return ece_from_counters(count, conf, correct);
}

double mean_nll(const RecordSet& logits, double t) {
  if (logits.kind() != RecordKind::Logits) {
    throw std::invalid_argument("operation requires logit records");
  }
  if (!(t > 0.0)) throw std::invalid_argument("temperature must be positive");
  if (logits.empty()) throw EmptyInputError{};

  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    const auto z = logits.row(i);
    const double zmax = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double v : z) sum += std::exp((v - zmax) / t);
    total += std::log(sum) + (zmax - z[logits.label(i)]) / t;
  }
  return total / static_cast<double>(logits.size());
}

}  // namespace trustcal::reference
