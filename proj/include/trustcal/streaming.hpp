#pragma once

#include <cstdint>
#include <vector>

#include "trustcal/quantifier.hpp"

namespace trustcal {

// Incremental version of quantify: records arrive one at a time and a
// snapshot can be taken at any point. A snapshot over a sequence of updates
// matches the batch pipeline over the same records exactly on counters and to
// rounding on everything derived. Updates need exclusive access; snapshot
// works on a copy of the counters.
class StreamingSession {
 public:
  explicit StreamingSession(QuantifierConfig config);

  // The class count is fixed by the first record; later records with a
  // different arity raise InputError.
  void update(const PredictionRecord& record);

  TrustReport snapshot() const;

  std::size_t record_count() const { return total_; }
  int class_count() const { return class_count_; }  // 0 until the first update

 private:
  QuantifierConfig config_;
  BinningScheme trust_scheme_;
  BinningScheme ece_scheme_;
  int class_count_ = 0;
  std::size_t total_ = 0;
  std::vector<std::int64_t> n_, t_;  // class-major trust counters
  std::vector<std::int64_t> ece_count_, ece_correct_;
  std::vector<double> ece_conf_;
  std::vector<double> scratch_row_;
};

}  // namespace trustcal
