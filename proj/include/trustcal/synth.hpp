#pragma once

#include <cstdint>
#include <vector>

#include "trustcal/records.hpp"

namespace trustcal {

// Synthetic prediction-log generator with known ground truth: per record a
// probability vector p is drawn from a symmetric Dirichlet, the label from
// Categorical(p), and the emitted logits are sharpening * ln(p). Sharpening 1
// yields a calibrated log in expectation, > 1 overconfident, < 1
// underconfident. Deterministic for a fixed seed.
struct SynthSpec {
  std::int64_t sample_count = 0;
  int class_count = 0;
  double sharpening = 1.0;
  double concentration = 1.0;  // symmetric Dirichlet parameter
  std::uint64_t seed = 0;
};

struct SynthResult {
  RecordSet records;                 // logit variant
  std::vector<double> ground_truth;  // row-major true p; diagnostic only, never an input
};

SynthResult synth_generate(const SynthSpec& spec);

}  // namespace trustcal
