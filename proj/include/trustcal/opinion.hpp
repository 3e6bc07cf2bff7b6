#pragma once

#include <optional>
#include <string>

namespace trustcal {

// Absolute tolerance on belief + disbelief + uncertainty = 1. All producers
// are closed-form, so only accumulation rounding has to be absorbed.
inline constexpr double kSimplexTolerance = 1e-9;

// Prior for the evidence <-> opinion mapping: `weight` is the mass of vacuous
// evidence (2 corresponds to a uniform Beta prior), `base_rate` the prior
// probability assumed in the absence of evidence.
struct PriorConfig {
  double weight = 2.0;
  double base_rate = 0.5;
};

// Positive/negative observation counts. Real-valued on purpose: the trust
// quantifier produces fractional negative evidence.
struct Evidence {
  double positive = 0.0;
  double negative = 0.0;
};

// Binomial opinion (belief, disbelief, uncertainty, base_rate). The first
// three components sum to 1; all four lie in [0, 1].
struct BinomialOpinion {
  double belief = 0.0;
  double disbelief = 0.0;
  double uncertainty = 1.0;
  double base_rate = 0.5;
};

struct OpinionViolation {
  enum class Kind { ComponentRange, SimplexSum };
  Kind kind;
  const char* component;  // offending field, or "belief+disbelief+uncertainty"
  double value;
  double excess;  // distance beyond the allowed bound
  std::string describe() const;
};

BinomialOpinion vacuous_opinion(double base_rate = 0.5);
bool is_vacuous(const BinomialOpinion& op);

// b = r/(W+r+s), d = s/(W+r+s), u = W/(W+r+s). Throws std::invalid_argument
// on negative evidence or non-positive weight.
BinomialOpinion opinion_from_evidence(const Evidence& ev, const PriorConfig& prior = {});

// Reverse mapping r = b*W/u, s = d*W/u. Throws DogmaticOpinionError when
// uncertainty is zero.
Evidence evidence_from_opinion(const BinomialOpinion& op, const PriorConfig& prior = {});

/// b + u*a: the point-probability summary of an opinion.
double projected_probability(const BinomialOpinion& op);

/// Empty result means the opinion is well-formed.
std::optional<OpinionViolation> validate_opinion(const BinomialOpinion& op);

bool is_valid(const BinomialOpinion& op);

}  // namespace trustcal
