#include "trustcal/fusion.hpp"

#include <stdexcept>

#include "trustcal/error.hpp"

namespace trustcal {

namespace {

void require_valid(const BinomialOpinion& op) {
  if (auto violation = validate_opinion(op)) {
    throw std::invalid_argument(violation->describe());
  }
}

// Fused base rate. Factored so every term is nonnegative for components in
// [0, 1]; with equal base rates it reduces to that rate, and with one vacuous
// operand to the other operand's rate.
double fuse_base_rate(const BinomialOpinion& a, const BinomialOpinion& b) {
  const double wa = a.uncertainty * (1.0 - b.uncertainty);
  const double wb = b.uncertainty * (1.0 - a.uncertainty);
  return (a.base_rate * wb + b.base_rate * wa) / (wa + wb);
}

}  // namespace

BinomialOpinion cumulative_fuse(const BinomialOpinion& a, const BinomialOpinion& b) {
  require_valid(a);
  require_valid(b);
  if (a.uncertainty == 0.0 && b.uncertainty == 0.0) {
    throw DualDogmaticError{};
  }
  if (is_vacuous(a) && is_vacuous(b)) {
    return vacuous_opinion((a.base_rate + b.base_rate) / 2.0);
  }
  // A vacuous operand is the identity; returning the other operand directly
  // keeps the identity exact (it is also the limit of the general formula).
  if (is_vacuous(a)) return b;
  if (is_vacuous(b)) return a;

  const double denom = a.uncertainty + b.uncertainty * (1.0 - a.uncertainty);
  return BinomialOpinion{
      (a.belief * b.uncertainty + b.belief * a.uncertainty) / denom,
      (a.disbelief * b.uncertainty + b.disbelief * a.uncertainty) / denom,
      (a.uncertainty * b.uncertainty) / denom,
      fuse_base_rate(a, b),
  };
}

FusionOutcome cumulative_fuse_all(std::span<const BinomialOpinion> ops,
                                  double empty_base_rate) {
  if (ops.empty()) {
    return FusionOutcome{vacuous_opinion(empty_base_rate), 0};
  }
  BinomialOpinion acc = ops.front();
  require_valid(acc);
  for (std::size_t i = 1; i < ops.size(); ++i) {
    acc = cumulative_fuse(acc, ops[i]);
  }
  return FusionOutcome{acc, ops.size()};
}

Evidence fuse_evidence(std::span<const Evidence> evs) {
  Evidence total;
  for (const auto& ev : evs) {
    if (!(ev.positive >= 0.0) || !(ev.negative >= 0.0)) {
      throw std::invalid_argument("evidence counts must be non-negative");
    }
    total.positive += ev.positive;
    total.negative += ev.negative;
  }
  return total;
}

}  // namespace trustcal
