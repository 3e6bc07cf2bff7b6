#pragma once

#include <cstddef>
#include <span>

#include "trustcal/opinion.hpp"

namespace trustcal {

struct FusionOutcome {
  BinomialOpinion opinion;
  std::size_t operand_count = 0;
};

// Cumulative belief fusion of two opinions. Fusing with a vacuous opinion
// returns the other operand unchanged; fusing two dogmatic opinions throws
// DualDogmaticError. Commutative, and associative up to rounding.
BinomialOpinion cumulative_fuse(const BinomialOpinion& a, const BinomialOpinion& b);

// Left-to-right fold of cumulative_fuse. The fold order is fixed so results
// are deterministic; an empty span yields the vacuous opinion with
// `empty_base_rate`.
FusionOutcome cumulative_fuse_all(std::span<const BinomialOpinion> ops,
                                  double empty_base_rate = 0.5);

// Componentwise evidence sums. Equivalent to cumulative fusion of the
// corresponding opinions when all operands share one prior; this is the exact
// path the production pipeline uses.
Evidence fuse_evidence(std::span<const Evidence> evs);

}  // namespace trustcal
