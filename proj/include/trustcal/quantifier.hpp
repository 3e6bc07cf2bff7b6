#pragma once

#include <cstdint>
#include <vector>

#include "trustcal/binning.hpp"
#include "trustcal/ece.hpp"
#include "trustcal/fusion.hpp"
#include "trustcal/opinion.hpp"
#include "trustcal/records.hpp"

namespace trustcal {

struct QuantifierConfig {
  int bin_count = 10;      // probability clusters per class (M)
  double alpha = 1.0;      // penalty on surplus correct classifications
  double beta = 1.0;       // penalty on missing correct classifications
  PriorConfig prior{};
  int ece_bin_count = 0;   // 0 = reuse bin_count for the ece binning
};

// Throws std::invalid_argument when a field is out of range.
void validate_config(const QuantifierConfig& config);

struct EvidenceCell {
  std::int64_t n = 0;  // records whose class-c probability fell in the cluster
  std::int64_t t = 0;  // of those, how many actually had true label c
  double r = 0.0;      // positive evidence: t
  double s = 0.0;      // negative evidence: alpha*max(0, t-n*RP) + beta*max(0, n*RP-t)
};

// Per-(class, cluster) counters plus the evidence derived from them.
class EvidenceGrid {
 public:
  EvidenceGrid(int class_count, BinningScheme scheme, std::vector<std::int64_t> n,
               std::vector<std::int64_t> t, double alpha, double beta);

  int class_count() const { return class_count_; }
  const BinningScheme& scheme() const { return scheme_; }

  EvidenceCell cell(int c, int bin) const;
  Evidence class_evidence(int c) const;  // evidence summed over the class's clusters
  Evidence total_evidence() const;       // evidence summed over the whole grid

  const std::vector<std::int64_t>& n_counters() const { return n_; }
  const std::vector<std::int64_t>& t_counters() const { return t_; }

 private:
  std::size_t index(int c, int bin) const {
    return static_cast<std::size_t>(c) * scheme_.bin_count + bin;
  }

  int class_count_;
  BinningScheme scheme_;
  std::vector<std::int64_t> n_, t_;
  std::vector<double> r_, s_;
};

// Counts, for every class c and record, which probability cluster the
// record's class-c probability falls into and whether the true label is c,
// then derives (r, s) per cell. Linear in class_count * record_count.
EvidenceGrid accumulate_evidence(const RecordSet& records, const QuantifierConfig& config);

// Opinion for one class: evidence summed over its clusters, then mapped
// through the prior. Empty cells contribute nothing.
BinomialOpinion class_opinion(const EvidenceGrid& grid, int c, const QuantifierConfig& config);

// Whole-model opinion: evidence summed over every cell. Matches a cumulative
// fusion of the per-class opinions.
BinomialOpinion network_opinion(const EvidenceGrid& grid, const QuantifierConfig& config);

struct ClusterReport {
  int bin = 0;
  double representative = 0.0;
  std::int64_t n = 0;
  std::int64_t t = 0;
  double r = 0.0;
  double s = 0.0;
  BinomialOpinion opinion;
};

struct ClassReport {
  int class_index = 0;
  BinomialOpinion opinion;
  bool vacuous = false;  // the class collected no evidence at all
  std::vector<ClusterReport> clusters;
};

struct TrustReport {
  QuantifierConfig config;
  EceResult ece;
  std::vector<ClassReport> classes;
  BinomialOpinion network;
};

TrustReport build_report(const EvidenceGrid& grid, EceResult ece,
                         const QuantifierConfig& config);

// The whole pipeline: evidence accumulation, per-cluster/class/network
// opinions, and the ece of the same records.
TrustReport quantify(const RecordSet& records, const QuantifierConfig& config);

}  // namespace trustcal
