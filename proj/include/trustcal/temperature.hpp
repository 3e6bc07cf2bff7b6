#pragma once

#include <span>
#include <vector>

#include "trustcal/records.hpp"

namespace trustcal {

// Search interval and stopping rule for fit_temperature: a 64-point coarse
// scan over ln T picks a bracket, then golden-section search narrows it to
// 1e-4 on ln T. Bracketed and derivative-free; the loss is smooth in T but
// not guaranteed unimodal.
inline constexpr double kTemperatureMin = 0.05;
inline constexpr double kTemperatureMax = 20.0;
inline constexpr double kLogTempTolerance = 1e-4;
inline constexpr int kPrescanPoints = 64;

struct TemperatureFit {
  double temperature = 1.0;
  double nll_before = 0.0;  // mean nll at T = 1
  double nll_after = 0.0;   // mean nll at the fitted T; never above nll_before
  int iterations = 0;       // golden-section iterations after the coarse scan
  bool boundary = false;    // minimum pinned to an end of the search interval
};

// softmax(logits / t) with max-subtraction. Throws std::invalid_argument on
// t <= 0. The argmax is preserved for every t.
void softmax_scaled(std::span<const double> logits, double t, std::span<double> out);

PredictionRecord apply_temperature(const LogitRecord& record, double t);

// Bulk variant: converts a logit record set into a probability record set.
RecordSet apply_temperature(const RecordSet& logits, double t);

// Mean negative log-likelihood of the true labels under softmax(z/t),
// computed via log-sum-exp.
double mean_nll(const RecordSet& logits, double t);

TemperatureFit fit_temperature(const RecordSet& logits);

}  // namespace trustcal
