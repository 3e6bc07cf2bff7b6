#include "trustcal/temperature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "trustcal/error.hpp"
#include "trustcal/parallel.hpp"

namespace trustcal {

namespace {

void require_positive_temperature(double t) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("temperature must be positive, got " + std::to_string(t));
  }
}

void require_logits(const RecordSet& records) {
  if (records.kind() != RecordKind::Logits) {
    throw std::invalid_argument("operation requires logit records");
  }
}

double row_nll(std::span<const double> z, int label, double t) {
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double v : z) sum += std::exp((v - zmax) / t);
  return std::log(sum) + (zmax - z[label]) / t;
}

struct ScalarMin {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

template <typename F>
ScalarMin golden_section(F f, double a, double b, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int iterations = 0;
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
    ++iterations;
  }
  return f1 <= f2 ? ScalarMin{x1, f1, iterations} : ScalarMin{x2, f2, iterations};
}

}  // namespace

void softmax_scaled(std::span<const double> logits, double t, std::span<double> out) {
  require_positive_temperature(t);
  const double zmax = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (std::size_t j = 0; j < logits.size(); ++j) {
    out[j] = std::exp((logits[j] - zmax) / t);
    sum += out[j];
  }
  for (std::size_t j = 0; j < logits.size(); ++j) out[j] /= sum;
}

PredictionRecord apply_temperature(const LogitRecord& record, double t) {
  PredictionRecord result;
  result.true_label = record.true_label;
  result.probabilities.resize(record.logits.size());
  softmax_scaled(record.logits, t, result.probabilities);
  return result;
}

RecordSet apply_temperature(const RecordSet& logits, double t) {
  require_logits(logits);
  require_positive_temperature(t);
  const std::size_t n = logits.size();
  const std::size_t c = static_cast<std::size_t>(logits.class_count());
  std::vector<double> values(n * c);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    const std::size_t row = static_cast<std::size_t>(i);
    softmax_scaled(logits.row(row), t, {values.data() + row * c, c});
  }
  return RecordSet::from_columns(RecordKind::Probabilities, logits.class_count(),
                                 std::move(values), logits.labels());
}

double mean_nll(const RecordSet& logits, double t) {
  require_logits(logits);
  require_positive_temperature(t);
  if (logits.empty()) throw EmptyInputError{};

  auto make = [&](std::size_t begin, std::size_t end) {
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      sum += row_nll(logits.row(i), logits.label(i), t);
    }
    return sum;
  };
  auto fold = [](double acc, double part) { return acc + part; };
  const double total = par::chunk_reduce(logits.size(), make, fold, 0.0);
  return total / static_cast<double>(logits.size());
}

TemperatureFit fit_temperature(const RecordSet& logits) {
  require_logits(logits);
  if (logits.empty()) throw EmptyInputError{};

  const double lo = std::log(kTemperatureMin);
  const double hi = std::log(kTemperatureMax);
  auto nll_at = [&](double x) { return mean_nll(logits, std::exp(x)); };

  // Coarse scan to select the bracket and to detect a flat objective.
  std::vector<double> grid_x(kPrescanPoints), grid_f(kPrescanPoints);
  int best = 0;
  double fmin = 0.0, fmax = 0.0;
  for (int i = 0; i < kPrescanPoints; ++i) {
    grid_x[i] = lo + (hi - lo) * i / (kPrescanPoints - 1);
    grid_f[i] = nll_at(grid_x[i]);
    if (i == 0) {
      fmin = fmax = grid_f[0];
    } else {
      fmin = std::min(fmin, grid_f[i]);
      fmax = std::max(fmax, grid_f[i]);
      if (grid_f[i] < grid_f[best]) best = i;
    }
  }
  if (fmax - fmin <= 1e-12 * std::max(1.0, std::abs(fmin))) {
    throw DegenerateInputError(
        "negative log-likelihood is constant in temperature; nothing to fit");
  }

  const double a = best == 0 ? lo : grid_x[best - 1];
  const double b = best == kPrescanPoints - 1 ? hi : grid_x[best + 1];
  const ScalarMin min = golden_section(nll_at, a, b, kLogTempTolerance);

  TemperatureFit fit;
  fit.temperature = std::exp(min.x);
  fit.nll_after = min.fx;
  fit.nll_before = mean_nll(logits, 1.0);
  fit.iterations = min.iterations;
  if (fit.nll_after > fit.nll_before) {
    // T = 1 lies in the interval, so a fit must never report a worse loss.
    fit.temperature = 1.0;
    fit.nll_after = fit.nll_before;
  }
  fit.boundary = fit.temperature <= kTemperatureMin * 1.001 ||
                 fit.temperature >= kTemperatureMax * 0.999;
  return fit;
}

}  // namespace trustcal
