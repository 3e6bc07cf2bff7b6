#include <doctest.h>

#include <stdexcept>

#include "testutil.hpp"
#include "trustcal/error.hpp"
#include "trustcal/opinion.hpp"

using namespace trustcal;
using testutil::near;
using testutil::TestRng;

TEST_CASE("opinion_from_evidence maps counts through the prior weight") {
  SUBCASE("zero evidence is vacuous") {
    const BinomialOpinion op = opinion_from_evidence({0.0, 0.0});
    CHECK(op.belief == 0.0);
    CHECK(op.disbelief == 0.0);
    CHECK(op.uncertainty == 1.0);
    CHECK(op.base_rate == 0.5);
  }
  SUBCASE("fractional evidence, denominator 9.5") {
    const BinomialOpinion op = opinion_from_evidence({6.0, 1.5});
    CHECK(near(op.belief, 6.0 / 9.5, 1e-15));
    CHECK(near(op.disbelief, 1.5 / 9.5, 1e-15));
    CHECK(near(op.uncertainty, 2.0 / 9.5, 1e-15));
  }
  SUBCASE("two positive observations") {
    const BinomialOpinion op = opinion_from_evidence({2.0, 0.0});
    CHECK(op.belief == 0.5);
    CHECK(op.disbelief == 0.0);
    CHECK(op.uncertainty == 0.5);
  }
  SUBCASE("rejects negative evidence and non-positive weight") {
    CHECK_THROWS_AS(opinion_from_evidence({-1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(opinion_from_evidence({0.0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(opinion_from_evidence({1.0, 1.0}, {0.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(opinion_from_evidence({1.0, 1.0}, {-2.0, 0.5}), std::invalid_argument);
  }
}

TEST_CASE("evidence_from_opinion inverts the mapping") {
  SUBCASE("vacuous maps back to zero evidence") {
    const Evidence ev = evidence_from_opinion(vacuous_opinion());
    CHECK(ev.positive == 0.0);
    CHECK(ev.negative == 0.0);
  }
  SUBCASE("half belief, half uncertainty") {
    const Evidence ev = evidence_from_opinion({0.5, 0.0, 0.5, 0.5});
    CHECK(near(ev.positive, 2.0, 1e-15));
    CHECK(near(ev.negative, 0.0, 1e-15));
  }
  SUBCASE("dogmatic opinions are rejected") {
    CHECK_THROWS_AS(evidence_from_opinion({0.5, 0.5, 0.0, 0.5}), DogmaticOpinionError);
  }
}

TEST_CASE("projected_probability") {
  CHECK(projected_probability(vacuous_opinion()) == 0.5);
  CHECK(near(projected_probability({6.0 / 9.5, 1.5 / 9.5, 2.0 / 9.5, 0.5}), 7.0 / 9.5,
             1e-12));
  CHECK(projected_probability({1.0, 0.0, 0.0, 0.5}) == 1.0);
}

TEST_CASE("validate_opinion reports which constraint failed and by how much") {
  CHECK(!validate_opinion({0.2, 0.3, 0.5, 0.5}).has_value());

  const auto sum_violation = validate_opinion({0.5, 0.6, 0.2, 0.5});
  REQUIRE(sum_violation.has_value());
  CHECK(sum_violation->kind == OpinionViolation::Kind::SimplexSum);
  CHECK(near(sum_violation->value, 1.3, 1e-12));
  CHECK(near(sum_violation->excess, 0.3, 1e-12));

  const auto range_violation = validate_opinion({-0.1, 0.6, 0.5, 0.5});
  REQUIRE(range_violation.has_value());
  CHECK(range_violation->kind == OpinionViolation::Kind::ComponentRange);
  CHECK(range_violation->component == std::string("belief"));
  CHECK(near(range_violation->excess, 0.1, 1e-12));
}

TEST_CASE("round trip recovers evidence within 1e-9") {
  TestRng rng(71);
  const double weights[] = {1.0, 2.0, 5.0};
  for (int i = 0; i < 2000; ++i) {
    const Evidence ev = rng.evidence(1000.0);
    const PriorConfig prior{weights[i % 3], 0.5};
    const Evidence back = evidence_from_opinion(opinion_from_evidence(ev, prior), prior);
    CHECK(near(back.positive, ev.positive, 1e-9));
    CHECK(near(back.negative, ev.negative, 1e-9));
  }
}

TEST_CASE("simplex holds exactly up to rounding") {
  TestRng rng(72);
  for (int i = 0; i < 2000; ++i) {
    const BinomialOpinion op = opinion_from_evidence(rng.evidence(1e6), {rng.uniform(0.1, 10.0), 0.5});
    CHECK(near(op.belief + op.disbelief + op.uncertainty, 1.0, 1e-15));
    CHECK(is_valid(op));
  }
}

TEST_CASE("belief grows and uncertainty shrinks with positive evidence") {
  TestRng rng(73);
  for (int i = 0; i < 200; ++i) {
    const double s = rng.uniform(0.0, 20.0);
    double prev_b = -1.0, prev_u = 2.0;
    for (double r = 0.0; r <= 50.0; r += rng.uniform(0.5, 2.0)) {
      const BinomialOpinion op = opinion_from_evidence({r, s});
      CHECK(op.belief > prev_b);
      CHECK(op.uncertainty < prev_u);
      prev_b = op.belief;
      prev_u = op.uncertainty;
    }
  }
}

TEST_CASE("uncertainty vanishes in the large-evidence limit") {
  const double ratio = 0.7;
  for (double total = 10.0; total <= 1e9; total *= 10.0) {
    const BinomialOpinion op = opinion_from_evidence({ratio * total, (1.0 - ratio) * total});
    CHECK(op.uncertainty <= 2.0 / total + 1e-15);
    CHECK(near(op.belief, ratio, 3.0 / total));
  }
}

TEST_CASE("projected probability is affine in uncertainty with slope base_rate") {
  TestRng rng(74);
  for (int i = 0; i < 200; ++i) {
    const double b = rng.uniform(0.0, 0.5);
    const double a = rng.uniform(0.0, 1.0);
    const double u1 = rng.uniform(0.0, 0.25);
    const double u2 = rng.uniform(0.25, 0.5);
    const BinomialOpinion o1{b, 1.0 - b - u1, u1, a};
    const BinomialOpinion o2{b, 1.0 - b - u2, u2, a};
    CHECK(near(projected_probability(o2) - projected_probability(o1), a * (u2 - u1), 1e-12));
  }
}
