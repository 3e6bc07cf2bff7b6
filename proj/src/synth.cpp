#include "trustcal/synth.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "trustcal/rng.hpp"

namespace trustcal {

namespace {

void validate_spec(const SynthSpec& spec) {
  if (spec.sample_count < 1) throw std::invalid_argument("sample count must be at least 1");
  if (spec.class_count < 2) throw std::invalid_argument("class count must be at least 2");
  if (!(spec.sharpening > 0.0)) throw std::invalid_argument("sharpening must be positive");
  if (!(spec.concentration > 0.0)) {
    throw std::invalid_argument("concentration must be positive");
  }
}

}  // namespace

SynthResult synth_generate(const SynthSpec& spec) {
  validate_spec(spec);
  const std::size_t n = static_cast<std::size_t>(spec.sample_count);
  const std::size_t c = static_cast<std::size_t>(spec.class_count);

  PortableRng rng(spec.seed);
  std::vector<double> truth(n * c);
  std::vector<double> logits(n * c);
  std::vector<int> labels(n);
  std::vector<double> draws(c);

  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
      draws[j] = spec.concentration == 1.0 ? rng.exponential() : rng.gamma(spec.concentration);
      sum += draws[j];
    }
    for (std::size_t j = 0; j < c; ++j) {
      double p = draws[j] / sum;
      if (p < 1e-300) p = 1e-300;  // keep ln(p) finite
      truth[i * c + j] = p;
      logits[i * c + j] = spec.sharpening * std::log(p);
    }
    // Categorical(p) via a single uniform draw against the cdf.
    const double pick = rng.uniform01();
    double cdf = 0.0;
    int label = static_cast<int>(c) - 1;
    for (std::size_t j = 0; j < c; ++j) {
      cdf += truth[i * c + j];
      if (pick < cdf) {
        label = static_cast<int>(j);
        break;
      }
    }
    labels[i] = label;
  }

  SynthResult result{
      RecordSet::from_columns(RecordKind::Logits, spec.class_count, std::move(logits),
                              std::move(labels)),
      std::move(truth),
  };
  return result;
}

}  // namespace trustcal
