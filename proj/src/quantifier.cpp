#include "trustcal/quantifier.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "trustcal/error.hpp"
#include "trustcal/parallel.hpp"

namespace trustcal {

void validate_config(const QuantifierConfig& config) {
  if (config.bin_count < 1) throw std::invalid_argument("bin count must be at least 1");
  if (config.ece_bin_count < 0) throw std::invalid_argument("ece bin count must be >= 0");
  if (!(config.alpha >= 0.0)) throw std::invalid_argument("alpha must be non-negative");
  if (!(config.beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
  if (!(config.prior.weight > 0.0)) throw std::invalid_argument("prior weight must be positive");
  if (!(config.prior.base_rate >= 0.0 && config.prior.base_rate <= 1.0)) {
    throw std::invalid_argument("base rate must lie in [0, 1]");
  }
}

EvidenceGrid::EvidenceGrid(int class_count, BinningScheme scheme,
                           std::vector<std::int64_t> n, std::vector<std::int64_t> t,
                           double alpha, double beta)
    : class_count_(class_count),
      scheme_(std::move(scheme)),
      n_(std::move(n)),
      t_(std::move(t)) {
  const std::size_t cells = static_cast<std::size_t>(class_count_) * scheme_.bin_count;
  if (n_.size() != cells || t_.size() != cells) {
    throw std::logic_error("evidence grid counter size mismatch");
  }
  r_.resize(cells);
  s_.resize(cells);
  for (std::size_t k = 0; k < cells; ++k) {
    if (t_[k] < 0 || t_[k] > n_[k]) {
      throw std::logic_error("evidence grid counters violate 0 <= t <= n");
    }
    const double expected = static_cast<double>(n_[k]) *
                            scheme_.representatives[k % scheme_.bin_count];
    const double surplus = static_cast<double>(t_[k]) - expected;
    r_[k] = static_cast<double>(t_[k]);
    s_[k] = alpha * std::max(0.0, surplus) + beta * std::max(0.0, -surplus);
  }
}

EvidenceCell EvidenceGrid::cell(int c, int bin) const {
  if (c < 0 || c >= class_count_) throw std::out_of_range("class index out of range");
  if (bin < 0 || bin >= scheme_.bin_count) throw std::out_of_range("bin index out of range");
  const std::size_t k = index(c, bin);
  return EvidenceCell{n_[k], t_[k], r_[k], s_[k]};
}

Evidence EvidenceGrid::class_evidence(int c) const {
  if (c < 0 || c >= class_count_) throw std::out_of_range("class index out of range");
  Evidence total;
  for (int bin = 0; bin < scheme_.bin_count; ++bin) {
    const std::size_t k = index(c, bin);
    total.positive += r_[k];
    total.negative += s_[k];
  }
  return total;
}

Evidence EvidenceGrid::total_evidence() const {
  Evidence total;
  for (int c = 0; c < class_count_; ++c) {
    const Evidence ev = class_evidence(c);
    total.positive += ev.positive;
    total.negative += ev.negative;
  }
  return total;
}

namespace {

struct CounterPartial {
  std::vector<std::int64_t> n, t;

  explicit CounterPartial(std::size_t cells = 0) : n(cells, 0), t(cells, 0) {}
};

}  // namespace

EvidenceGrid accumulate_evidence(const RecordSet& records, const QuantifierConfig& config) {
  validate_config(config);
  if (records.kind() != RecordKind::Probabilities) {
    throw std::invalid_argument("evidence accumulation requires probability records");
  }
  if (records.empty()) throw EmptyInputError{};

  const int class_count = records.class_count();
  const int m = config.bin_count;
  BinningScheme scheme = make_uniform_bins(m);
  const std::size_t cells = static_cast<std::size_t>(class_count) * m;

  auto make = [&](std::size_t begin, std::size_t end) {
    CounterPartial partial(cells);
    for (std::size_t i = begin; i < end; ++i) {
      const auto row = records.row(i);
      const int label = records.label(i);
      for (int c = 0; c < class_count; ++c) {
        const int bin = assign_bin(row[c], scheme);
        const std::size_t k = static_cast<std::size_t>(c) * m + bin;
        partial.n[k] += 1;
        partial.t[k] += label == c ? 1 : 0;
      }
    }
    return partial;
  };
  auto fold = [&](CounterPartial acc, CounterPartial part) {
    if (acc.n.empty()) return part;
    for (std::size_t k = 0; k < cells; ++k) {
      acc.n[k] += part.n[k];
      acc.t[k] += part.t[k];
    }
    return acc;
  };
  CounterPartial totals = par::chunk_reduce(records.size(), make, fold, CounterPartial{});
  return EvidenceGrid(class_count, std::move(scheme), std::move(totals.n),
                      std::move(totals.t), config.alpha, config.beta);
}

BinomialOpinion class_opinion(const EvidenceGrid& grid, int c, const QuantifierConfig& config) {
  return opinion_from_evidence(grid.class_evidence(c), config.prior);
}

BinomialOpinion network_opinion(const EvidenceGrid& grid, const QuantifierConfig& config) {
  return opinion_from_evidence(grid.total_evidence(), config.prior);
}

TrustReport build_report(const EvidenceGrid& grid, EceResult ece,
                         const QuantifierConfig& config) {
  TrustReport report;
  report.config = config;
  report.ece = std::move(ece);
  report.classes.resize(grid.class_count());
  for (int c = 0; c < grid.class_count(); ++c) {
    ClassReport& entry = report.classes[c];
    entry.class_index = c;
    entry.opinion = class_opinion(grid, c, config);
    const Evidence ev = grid.class_evidence(c);
    entry.vacuous = ev.positive == 0.0 && ev.negative == 0.0;
    entry.clusters.resize(grid.scheme().bin_count);
    for (int bin = 0; bin < grid.scheme().bin_count; ++bin) {
      const EvidenceCell cell = grid.cell(c, bin);
      ClusterReport& cluster = entry.clusters[bin];
      cluster.bin = bin;
      cluster.representative = grid.scheme().representatives[bin];
      cluster.n = cell.n;
      cluster.t = cell.t;
      cluster.r = cell.r;
      cluster.s = cell.s;
      cluster.opinion = opinion_from_evidence(Evidence{cell.r, cell.s}, config.prior);
    }
  }
  report.network = network_opinion(grid, config);
  return report;
}

TrustReport quantify(const RecordSet& records, const QuantifierConfig& config) {
  validate_config(config);
  EvidenceGrid grid = accumulate_evidence(records, config);
  const int ece_bins = config.ece_bin_count > 0 ? config.ece_bin_count : config.bin_count;
  EceResult ece = compute_ece(records, make_uniform_bins(ece_bins));
  return build_report(grid, std::move(ece), config);
}

}  // namespace trustcal
