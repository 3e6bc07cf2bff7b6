#include "trustcal/ece.hpp"

#include <cmath>
#include <stdexcept>

#include "trustcal/error.hpp"
#include "trustcal/parallel.hpp"

namespace trustcal {

namespace {

struct EcePartial {
  std::vector<std::int64_t> count;
  std::vector<double> conf_sum;
  std::vector<std::int64_t> correct;

  explicit EcePartial(std::size_t bins = 0)
      : count(bins, 0), conf_sum(bins, 0.0), correct(bins, 0) {}
};

}  // namespace

EceResult ece_from_counters(std::span<const std::int64_t> count,
                            std::span<const double> conf_sum,
                            std::span<const std::int64_t> correct) {
  EceResult result;
  result.per_bin.resize(count.size());
  std::int64_t total = 0;
  for (std::size_t m = 0; m < count.size(); ++m) total += count[m];
  for (std::size_t m = 0; m < count.size(); ++m) {
    EceBin& bin = result.per_bin[m];
    bin.count = count[m];
    if (bin.count > 0) {
      bin.confidence = conf_sum[m] / static_cast<double>(bin.count);
      bin.accuracy = static_cast<double>(correct[m]) / static_cast<double>(bin.count);
      result.ece += static_cast<double>(bin.count) / static_cast<double>(total) *
                    std::abs(bin.accuracy - bin.confidence);
    }
  }
  return result;
}

EceResult compute_ece(const RecordSet& records, const BinningScheme& scheme) {
  if (records.kind() != RecordKind::Probabilities) {
    throw std::invalid_argument("ece requires probability records");
  }
  if (records.empty()) throw EmptyInputError{};

  const std::size_t bins = static_cast<std::size_t>(scheme.bin_count);
  auto make = [&](std::size_t begin, std::size_t end) {
    EcePartial partial(bins);
    for (std::size_t i = begin; i < end; ++i) {
      const auto row = records.row(i);
      const std::size_t top = argmax_index(row);
      const double confidence = row[top];
      const int m = assign_bin(confidence, scheme);
      partial.count[m] += 1;
      partial.conf_sum[m] += confidence;
      partial.correct[m] += static_cast<int>(top) == records.label(i) ? 1 : 0;
    }
    return partial;
  };
  auto fold = [&](EcePartial acc, EcePartial part) {
    if (acc.count.empty()) return part;
    for (std::size_t m = 0; m < bins; ++m) {
      acc.count[m] += part.count[m];
      acc.conf_sum[m] += part.conf_sum[m];
      acc.correct[m] += part.correct[m];
    }
    return acc;
  };
  EcePartial totals = par::chunk_reduce(records.size(), make, fold, EcePartial{});
  return ece_from_counters(totals.count, totals.conf_sum, totals.correct);
}

}  // namespace trustcal
