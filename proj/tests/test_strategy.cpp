#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "fixture_io.hpp"
#include "hatgame/artifacts.hpp"
#include "hatgame/errors.hpp"
#include "hatgame/strategy.hpp"
#include "sampling.hpp"

using namespace hatgame;

namespace {

const GameShape kShape33(3, 3);
const AdequateSet kRegionA(kShape33, {4, 5, 7, 8, 9, 13, 14, 16, 17, 18, 20, 24});
const AdequateSet kRegionC(kShape33, {0, 2, 6, 13, 14, 16, 17, 18, 22, 23, 25, 26});

Code obs(const char* label) { return static_cast<Code>((label[0] - '0') * 3 + (label[1] - '0')); }

const std::vector<AdequateSet>& all_sets() {
  static const auto sets =
      enumerate_adequate_sets(kShape33, 12, EnumerationOptions{4, true, AdequacyRule::kSelfCounting});
  return sets;
}

}  // namespace

TEST_CASE("region C matrix: every player guesses 1 on 00 and 0 on 11,12,21,22") {
  const DecisionMatrix m = build_decision_matrix(kRegionC);
  for (int i = 0; i < 3; ++i) {
    for (Code s = 0; s < 9; ++s) {
      const Action a = m.at(i, s);
      if (s == obs("00")) {
        CHECK(a == Action::guess(1));
      } else if (s == obs("11") || s == obs("12") || s == obs("21") || s == obs("22")) {
        CHECK(a == Action::guess(0));
      } else {
        CHECK(a.is_pass());
      }
    }
  }
}

TEST_CASE("region A first matrix") {
  const DecisionMatrix m = build_decision_matrix(kRegionA);
  CHECK(m.at(0, obs("00")) == Action::guess(0));
  for (const char* s : {"11", "12", "21", "22"}) CHECK(m.at(0, obs(s)) == Action::guess(2));
  for (int i : {1, 2}) {
    for (const char* s : {"01", "02", "11", "12"}) CHECK(m.at(i, obs(s)) == Action::guess(0));
    CHECK(m.at(i, obs("20")) == Action::guess(1));
    for (const char* s : {"00", "10", "21", "22"}) CHECK(m.at(i, obs(s)).is_pass());
  }
  for (const char* s : {"01", "02", "10", "20"}) CHECK(m.at(0, obs(s)).is_pass());
}

TEST_CASE("full set gives the all-pass matrix; non-adequate sets are rejected") {
  std::vector<Code> all(27);
  std::iota(all.begin(), all.end(), Code{0});
  CHECK(build_decision_matrix(AdequateSet(kShape33, all)) == DecisionMatrix(kShape33));
  CHECK_THROWS_AS(build_decision_matrix(AdequateSet(kShape33, {0, 1, 2})), InvalidInput);
}

TEST_CASE("published matrices render byte for byte") {
  const auto published = fixtures::published_matrices();
  REQUIRE(published.size() == 7);
  for (const auto& p : published) {
    CAPTURE(p.region);
    CHECK(render_matrix_grid(build_decision_matrix(AdequateSet(kShape33, p.codes))) == p.grid);
  }
}

TEST_CASE("evaluate_exact examples") {
  const auto r = evaluate_exact(build_decision_matrix(kRegionA), ProbabilityVector::parse("0.7,0.2,0.1"));
  CHECK(std::abs(r.win_probability - 0.758) <= 1e-12);
  CHECK(*r.exact_win_probability == Rational(758, 1000));
  CHECK(r.losing == kRegionA.codes());
  CHECK(r.trace.size() == 27);

  const auto none = evaluate_exact(DecisionMatrix(kShape33), ProbabilityVector::from_doubles({0.5, 0.3, 0.2}));
  CHECK(none.win_probability == 0.0);
  CHECK(none.winning.empty());

  const auto sym = evaluate_exact(build_decision_matrix(kRegionC), ProbabilityVector::uniform(3));
  CHECK(*sym.exact_win_probability == Rational(5, 9));
  CHECK(sym.winning.size() == 15);
}

TEST_CASE("strategy invariants over all 324 sets") {
  const auto triples = sampling::sorted_triples(20, 31);
  for (const auto& set : all_sets()) {
    const DecisionMatrix m = build_decision_matrix(set);
    for (const auto& t : triples) {
      const auto probs = ProbabilityVector::from_doubles({t[2], t[0], t[1]});
      const auto report = evaluate_exact(m, probs);
      REQUIRE(std::abs(report.win_probability - (1 - phi(set, probs))) <= 1e-12);
      REQUIRE(report.losing == set.codes());
      for (const auto& o : report.trace) {
        if (!set.contains(o.code)) REQUIRE(o.incorrect == 0);
      }
    }
  }
}

TEST_CASE("simulate") {
  const auto probs = ProbabilityVector::parse("0.7,0.2,0.1");
  const DecisionMatrix a = build_decision_matrix(kRegionA);
  const auto sim = simulate(a, probs, 1000000, 2024);
  CHECK(std::abs(sim.estimate - 0.758) <= 4 * sim.standard_error);
  const auto again = simulate(a, probs, 1000000, 2024);
  CHECK(again.wins == sim.wins);

  const auto pass = simulate(DecisionMatrix(kShape33), probs, 1000, 7);
  CHECK(pass.estimate == 0.0);
  CHECK(pass.standard_error == 0.0);

  DecisionMatrix zero(kShape33);
  zero.set(0, 0, Action::guess(0));
  const auto certain = simulate(zero, ProbabilityVector::from_doubles({1.0, 0.0, 0.0}), 5000, 3);
  CHECK(certain.estimate == 1.0);

  CHECK_THROWS_AS(simulate(a, probs, 0, 1), InvalidInput);
}

TEST_CASE("solve exhaustive at the published anchors") {
  const auto a = solve(ProbabilityVector::parse("0.7,0.2,0.1"), SolveMode::kExhaustive);
  REQUIRE(a.optimal.size() == 3);
  // Lexicographic order.
  CHECK(a.optimal[0].set.codes() == std::vector<Code>{1, 2, 8, 12, 13, 15, 16, 20, 21, 22, 24, 25});
  CHECK(a.optimal[1].set.codes() == std::vector<Code>{3, 6, 8, 10, 11, 13, 14, 19, 20, 22, 23, 24});
  CHECK(a.optimal[2].set.codes() == std::vector<Code>{4, 5, 7, 8, 9, 13, 14, 16, 17, 18, 20, 24});
  CHECK(*a.exact_value == Rational(758, 1000));

  const auto b = solve(ProbabilityVector::parse("1/2,1/3,1/6"), SolveMode::kExhaustive);
  REQUIRE(b.optimal.size() == 3);
  CHECK(b.optimal[0].set.codes() == std::vector<Code>{1, 2, 7, 12, 14, 15, 17, 19, 21, 23, 24, 26});
  CHECK(b.optimal[1].set.codes() == std::vector<Code>{3, 5, 6, 10, 11, 16, 17, 19, 20, 21, 25, 26});
  CHECK(b.optimal[2].set.codes() == std::vector<Code>{4, 5, 7, 8, 9, 11, 15, 18, 22, 23, 25, 26});

  const auto u = solve(ProbabilityVector::uniform(3), SolveMode::kExhaustive);
  CHECK(u.optimal.size() == 324);
  CHECK(*u.exact_value == Rational(5, 9));

  // Floating input groups ties with relative tolerance.
  const auto f = solve(ProbabilityVector::from_doubles({0.7, 0.2, 0.1}), SolveMode::kExhaustive);
  CHECK(f.optimal.size() == 3);
  CHECK_FALSE(f.exact_value.has_value());
}

TEST_CASE("closed form agrees with exhaustive, including unsorted colors") {
  std::vector<ProbabilityVector> points{ProbabilityVector::parse("0.1,0.2,0.7"),
                                        ProbabilityVector::parse("1/6,1/2,1/3"),
                                        ProbabilityVector::parse("0.32,0.35,0.33")};
  for (const auto& t : sampling::sorted_triples(6, 41)) {
    points.push_back(ProbabilityVector::from_doubles({t[1], t[2], t[0]}));
  }
  for (const auto& probs : points) {
    const auto closed = solve(probs, SolveMode::kClosedForm);
    const auto exhaustive = solve(probs, SolveMode::kExhaustive);
    CHECK(std::abs(closed.value - exhaustive.value) <= 1e-12);
    REQUIRE(closed.optimal.size() == 1);
    CHECK(std::abs((1 - closed.optimal[0].phi) - closed.value) <= 1e-12);
    if (probs.is_exact()) CHECK(*closed.exact_value == *exhaustive.exact_value);
  }
}

TEST_CASE("region representatives carry the dominant patterns") {
  const auto c = solve(ProbabilityVector::parse("0.35,0.33,0.32"), SolveMode::kExhaustive);
  REQUIRE(c.optimal.size() == 1);
  CHECK(c.optimal[0].set == region_representative(Region::kC));
}

TEST_CASE("two-color solve_exhaustive") {
  const auto s = solve_exhaustive(GameShape(3, 2), 2, ProbabilityVector::uniform(2));
  CHECK(s.optimal.size() == 4);
  CHECK(*s.exact_value == Rational(3, 4));
  CHECK_FALSE(s.classification.has_value());
}
