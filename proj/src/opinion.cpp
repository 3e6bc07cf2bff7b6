#include "trustcal/opinion.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "trustcal/error.hpp"

namespace trustcal {

std::string OpinionViolation::describe() const {
  char buf[160];
  if (kind == Kind::ComponentRange) {
    std::snprintf(buf, sizeof buf, "invalid opinion: %s = %.17g is outside [0, 1] by %.3g",
                  component, value, excess);
  } else {
    std::snprintf(buf, sizeof buf, "invalid opinion: %s = %.17g differs from 1 by %.3g",
                  component, value, excess);
  }
  return buf;
}

BinomialOpinion vacuous_opinion(double base_rate) {
  return BinomialOpinion{0.0, 0.0, 1.0, base_rate};
}

bool is_vacuous(const BinomialOpinion& op) {
  return op.uncertainty == 1.0 && op.belief == 0.0 && op.disbelief == 0.0;
}

BinomialOpinion opinion_from_evidence(const Evidence& ev, const PriorConfig& prior) {
  if (!(ev.positive >= 0.0) || !(ev.negative >= 0.0)) {
    throw std::invalid_argument("evidence counts must be non-negative");
  }
  if (!(prior.weight > 0.0)) {
    throw std::invalid_argument("prior weight must be positive");
  }
  const double denom = prior.weight + ev.positive + ev.negative;
  return BinomialOpinion{ev.positive / denom, ev.negative / denom, prior.weight / denom,
                         prior.base_rate};
}

Evidence evidence_from_opinion(const BinomialOpinion& op, const PriorConfig& prior) {
  if (auto violation = validate_opinion(op)) {
    throw std::invalid_argument(violation->describe());
  }
  if (!(prior.weight > 0.0)) {
    throw std::invalid_argument("prior weight must be positive");
  }
  if (op.uncertainty == 0.0) {
    throw DogmaticOpinionError{};
  }
  return Evidence{op.belief * prior.weight / op.uncertainty,
                  op.disbelief * prior.weight / op.uncertainty};
}

double projected_probability(const BinomialOpinion& op) {
  return op.belief + op.uncertainty * op.base_rate;
}

namespace {

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

double range_excess(double v) { return v < 0.0 ? -v : v - 1.0; }

}  // namespace

std::optional<OpinionViolation> validate_opinion(const BinomialOpinion& op) {
  struct Field {
    const char* name;
    double value;
  };
  const Field fields[] = {{"belief", op.belief},
                          {"disbelief", op.disbelief},
                          {"uncertainty", op.uncertainty},
                          {"base_rate", op.base_rate}};
  for (const auto& f : fields) {
    if (!in_unit_interval(f.value)) {
      return OpinionViolation{OpinionViolation::Kind::ComponentRange, f.name, f.value,
                              range_excess(f.value)};
    }
  }
  const double sum = op.belief + op.disbelief + op.uncertainty;
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    return OpinionViolation{OpinionViolation::Kind::SimplexSum,
                            "belief+disbelief+uncertainty", sum, std::abs(sum - 1.0)};
  }
  return std::nullopt;
}

bool is_valid(const BinomialOpinion& op) { return !validate_opinion(op).has_value(); }

}  // namespace trustcal
