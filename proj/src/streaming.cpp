#include "trustcal/streaming.hpp"

#include <string>

#include "trustcal/error.hpp"

namespace trustcal {

StreamingSession::StreamingSession(QuantifierConfig config) : config_(config) {
  validate_config(config_);
  trust_scheme_ = make_uniform_bins(config_.bin_count);
  const int ece_bins = config_.ece_bin_count > 0 ? config_.ece_bin_count : config_.bin_count;
  ece_scheme_ = make_uniform_bins(ece_bins);
  ece_count_.assign(ece_bins, 0);
  ece_correct_.assign(ece_bins, 0);
  ece_conf_.assign(ece_bins, 0.0);
}

void StreamingSession::update(const PredictionRecord& record) {
  const int arity = static_cast<int>(record.probabilities.size());
  if (class_count_ == 0) {
    if (arity < 1) throw InputError("record has no probabilities");
    class_count_ = arity;
    n_.assign(static_cast<std::size_t>(class_count_) * config_.bin_count, 0);
    t_.assign(n_.size(), 0);
  } else if (arity != class_count_) {
    throw InputError("class-count mismatch: session is fixed at " +
                     std::to_string(class_count_) + " classes, record has " +
                     std::to_string(arity));
  }
  if (record.true_label < 0 || record.true_label >= class_count_) {
    throw InputError("label " + std::to_string(record.true_label) + " outside [0, " +
                     std::to_string(class_count_) + ")");
  }

  scratch_row_.assign(record.probabilities.begin(), record.probabilities.end());
  normalize_probability_row(scratch_row_);

  for (int c = 0; c < class_count_; ++c) {
    const int bin = assign_bin(scratch_row_[c], trust_scheme_);
    const std::size_t k = static_cast<std::size_t>(c) * config_.bin_count + bin;
    n_[k] += 1;
    t_[k] += record.true_label == c ? 1 : 0;
  }

  const std::size_t top = argmax_index(scratch_row_);
  const double confidence = scratch_row_[top];
  const int bin = assign_bin(confidence, ece_scheme_);
  ece_count_[bin] += 1;
  ece_conf_[bin] += confidence;
  ece_correct_[bin] += static_cast<int>(top) == record.true_label ? 1 : 0;
  ++total_;
}

TrustReport StreamingSession::snapshot() const {
  EceResult ece = ece_from_counters(ece_count_, ece_conf_, ece_correct_);
  if (class_count_ == 0) {
    // No updates yet: an all-vacuous report with zero classes.
    TrustReport report;
    report.config = config_;
    report.ece = std::move(ece);
    report.network = vacuous_opinion(config_.prior.base_rate);
    return report;
  }
  EvidenceGrid grid(class_count_, trust_scheme_, n_, t_, config_.alpha, config_.beta);
  return build_report(grid, std::move(ece), config_);
}

}  // namespace trustcal
