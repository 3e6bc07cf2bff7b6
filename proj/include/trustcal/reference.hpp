#pragma once

#include "trustcal/ece.hpp"
#include "trustcal/quantifier.hpp"
#include "trustcal/records.hpp"

// Plain serial implementations of the batch kernels. Kept as the baseline the
// parallel kernels are tested against and benchmarked against; they share no
// accumulation code with the chunked versions.
namespace trustcal::reference {

EvidenceGrid accumulate_evidence(const RecordSet& records, const QuantifierConfig& config);
EceResult compute_ece(const RecordSet& records, const BinningScheme& scheme);
double mean_nll(const RecordSet& logits, double t);

}  // namespace trustcal::reference
