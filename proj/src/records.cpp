#include "trustcal/records.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "trustcal/error.hpp"

namespace trustcal {

void normalize_probability_row(std::span<double> row) {
  double sum = 0.0;
  for (double& v : row) {
    if (std::isnan(v) || v < -kRenormalizeThreshold || v > 1.0 + kRenormalizeThreshold) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "probability %.17g outside [0, 1]", v);
      throw InputError(buf);
    }
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    sum += v;
  }
  const double off = std::abs(sum - 1.0);
  if (off > kSimplexIngestTolerance) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "probabilities sum to %.17g (off simplex by %.3g)", sum,
                  off);
    throw InputError(buf);
  }
  if (off > kRenormalizeThreshold) {
    for (double& v : row) v /= sum;
  }
}

RecordSet::RecordSet(RecordKind kind, int class_count)
    : kind_(kind), class_count_(class_count) {
  if (class_count < 1) {
    throw std::invalid_argument("class count must be at least 1");
  }
}

void RecordSet::reserve(std::size_t n) {
  values_.reserve(n * static_cast<std::size_t>(class_count_));
  labels_.reserve(n);
}

void RecordSet::validate_and_store_row(std::size_t row_index) {
  const std::size_t c = static_cast<std::size_t>(class_count_);
  std::span<double> row{values_.data() + row_index * c, c};
  if (kind_ == RecordKind::Probabilities) {
    normalize_probability_row(row);
  } else {
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw InputError("logit values must be finite");
      }
    }
  }
}

void RecordSet::append(std::span<const double> row, int label) {
  if (row.size() != static_cast<std::size_t>(class_count_)) {
    throw InputError("row has " + std::to_string(row.size()) + " values, expected " +
                     std::to_string(class_count_));
  }
  if (label < 0 || label >= class_count_) {
    throw InputError("label " + std::to_string(label) + " outside [0, " +
                     std::to_string(class_count_) + ")");
  }
  const std::size_t row_index = labels_.size();
  values_.insert(values_.end(), row.begin(), row.end());
  try {
    validate_and_store_row(row_index);
  } catch (...) {
    values_.resize(row_index * static_cast<std::size_t>(class_count_));
    throw;
  }
  labels_.push_back(label);
}

RecordSet RecordSet::from_columns(RecordKind kind, int class_count,
                                  std::vector<double> values, std::vector<int> labels) {
  RecordSet set(kind, class_count);
  const std::size_t c = static_cast<std::size_t>(class_count);
  if (values.size() != labels.size() * c) {
    throw std::invalid_argument("value/label column sizes are inconsistent");
  }
  set.values_ = std::move(values);
  set.labels_ = std::move(labels);
  for (std::size_t i = 0; i < set.labels_.size(); ++i) {
    if (set.labels_[i] < 0 || set.labels_[i] >= class_count) {
      throw InputError("label " + std::to_string(set.labels_[i]) + " outside [0, " +
                       std::to_string(class_count) + ")");
    }
    set.validate_and_store_row(i);
  }
  return set;
}

RecordSet to_record_set(std::span<const PredictionRecord> records) {
  if (records.empty()) throw EmptyInputError{};
  RecordSet set(RecordKind::Probabilities, static_cast<int>(records[0].probabilities.size()));
  set.reserve(records.size());
  for (const auto& rec : records) {
    if (rec.probabilities.size() != records[0].probabilities.size()) {
      throw InputError("ragged probability vector: expected " +
                       std::to_string(records[0].probabilities.size()) + " entries, got " +
                       std::to_string(rec.probabilities.size()));
    }
    set.append(rec.probabilities, rec.true_label);
  }
  return set;
}

RecordSet to_record_set(std::span<const LogitRecord> records) {
  if (records.empty()) throw EmptyInputError{};
  RecordSet set(RecordKind::Logits, static_cast<int>(records[0].logits.size()));
  set.reserve(records.size());
  for (const auto& rec : records) {
    if (rec.logits.size() != records[0].logits.size()) {
      throw InputError("ragged logit vector: expected " +
                       std::to_string(records[0].logits.size()) + " entries, got " +
                       std::to_string(rec.logits.size()));
    }
    set.append(rec.logits, rec.true_label);
  }
  return set;
}

std::size_t argmax_index(std::span<const double> row) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (row[j] > row[best]) best = j;
  }
  return best;
}

}  // namespace trustcal
