#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace trustcal {

enum class RecordKind { Probabilities, Logits };

// One classified sample: a probability vector over C classes plus the true
// label.
struct PredictionRecord {
  std::vector<double> probabilities;
  int true_label = 0;
};

struct LogitRecord {
  std::vector<double> logits;
  int true_label = 0;
};

// Ingest rule for probability rows: components may stray up to 1e-9 outside
// [0, 1] (clamped), the row sum must be within 1e-6 of 1, and rows off by
// more than 1e-9 are renormalized. Rows already within 1e-9 are left
// untouched so serialized data round-trips bit-for-bit.
inline constexpr double kSimplexIngestTolerance = 1e-6;
inline constexpr double kRenormalizeThreshold = 1e-9;

// Throws InputError on a simplex violation; otherwise clamps/renormalizes in
// place as described above.
void normalize_probability_row(std::span<double> row);

// Flat row-major batch storage shared by all kernels. Rows have uniform
// arity; labels are validated against the class count on append.
class RecordSet {
 public:
  RecordSet(RecordKind kind, int class_count);

  // Adopts pre-built columns. Applies the same per-row validation as append.
  static RecordSet from_columns(RecordKind kind, int class_count,
                                std::vector<double> values, std::vector<int> labels);

  RecordKind kind() const { return kind_; }
  int class_count() const { return class_count_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * static_cast<std::size_t>(class_count_),
            static_cast<std::size_t>(class_count_)};
  }
  int label(std::size_t i) const { return labels_[i]; }

  const std::vector<double>& values() const { return values_; }
  const std::vector<int>& labels() const { return labels_; }

  void reserve(std::size_t n);
  void append(std::span<const double> row, int label);

 private:
  void validate_and_store_row(std::size_t row_index);

  RecordKind kind_;
  int class_count_;
  std::vector<double> values_;
  std::vector<int> labels_;
};

// Packs per-record structs into a RecordSet; throws InputError on ragged
// probability vectors or out-of-range labels.
RecordSet to_record_set(std::span<const PredictionRecord> records);
RecordSet to_record_set(std::span<const LogitRecord> records);

// Index of the largest entry, ties broken by lowest index.
std::size_t argmax_index(std::span<const double> row);

}  // namespace trustcal
