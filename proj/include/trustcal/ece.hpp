#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trustcal/binning.hpp"
#include "trustcal/records.hpp"

namespace trustcal {

struct EceBin {
  std::int64_t count = 0;
  double confidence = 0.0;  // mean max-probability of records in the bin
  double accuracy = 0.0;    // fraction whose argmax equals the true label
};

struct EceResult {
  double ece = 0.0;
  std::vector<EceBin> per_bin;
};

// Expected calibration error: records are binned by confidence (the maximum
// predicted probability) and ece is the count-weighted mean |accuracy -
// confidence| over bins. Empty bins contribute zero. Requires a non-empty
// probability-variant record set.
EceResult compute_ece(const RecordSet& records, const BinningScheme& scheme);

// Finalization shared by the batch kernel and streaming snapshots: per-bin
// record counts, confidence sums, and correct counts in bin order.
EceResult ece_from_counters(std::span<const std::int64_t> count,
                            std::span<const double> conf_sum,
                            std::span<const std::int64_t> correct);

}  // namespace trustcal
