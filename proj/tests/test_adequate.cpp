#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "hatgame/adequate.hpp"
#include "hatgame/errors.hpp"
#include "oracle.hpp"

using namespace hatgame;

namespace {

const GameShape kShape33(3, 3);
const std::vector<Code> kFirstOptimal{4, 5, 7, 8, 9, 13, 14, 16, 17, 18, 20, 24};

std::vector<std::vector<Code>> as_code_lists(const std::vector<AdequateSet>& sets) {
  std::vector<std::vector<Code>> out;
  for (const auto& s : sets) out.push_back(s.codes());
  return out;
}

std::vector<Code> all_codes(const GameShape& shape) {
  std::vector<Code> codes(shape.num_codes());
  std::iota(codes.begin(), codes.end(), Code{0});
  return codes;
}

}  // namespace

TEST_CASE("is_adequate examples") {
  CHECK(is_adequate(kShape33, all_codes(kShape33)));
  CHECK(is_adequate(kShape33, kFirstOptimal));
  CHECK_FALSE(is_adequate(kShape33, std::vector<Code>{0}));
  CHECK_THROWS_AS(is_adequate(kShape33, std::vector<Code>{}), InvalidInput);
  CHECK_THROWS_AS(is_adequate(kShape33, std::vector<Code>{27}), InvalidInput);
}

TEST_CASE("two-color three-player pairs are the antipodal pairs") {
  const auto sets = enumerate_adequate_sets(GameShape(3, 2), 2);
  const std::vector<std::vector<Code>> expected{{0, 7}, {1, 6}, {2, 5}, {3, 4}};
  CHECK(as_code_lists(sets) == expected);
  CHECK(oracle::adequate_subsets(3, 2, 2) == expected);
}

TEST_CASE("engine agrees with the definition oracle on small shapes") {
  struct Case {
    int n, q, max_das;
  };
  for (auto [n, q, max_das] : std::vector<Case>{{2, 2, 4}, {3, 2, 8}, {2, 3, 9}, {4, 2, 6}, {3, 3, 4}}) {
    const GameShape shape(n, q);
    for (int das = 1; das <= max_das; ++das) {
      CAPTURE(n);
      CAPTURE(q);
      CAPTURE(das);
      for (auto rule : {AdequacyRule::kSelfCounting, AdequacyRule::kOutsideOnly}) {
        EnumerationOptions options;
        options.rule = rule;
        const auto expected =
            oracle::adequate_subsets(n, q, das, rule == AdequacyRule::kOutsideOnly);
        CHECK(as_code_lists(enumerate_adequate_sets(shape, das, options)) == expected);
      }
    }
  }
}

TEST_CASE("pruned and unpruned enumeration agree up to das 6") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 3}, {5, 2}, {2, 4}}) {
    const GameShape shape(n, q);
    for (int das = 1; das <= 6; ++das) {
      CAPTURE(n);
      CAPTURE(das);
      EnumerationOptions unpruned;
      unpruned.prune = false;
      CHECK(enumerate_adequate_sets(shape, das) == enumerate_adequate_sets(shape, das, unpruned));
    }
  }
}

TEST_CASE("das 12 enumeration: count, order, symmetry closure, monotonicity") {
  EnumerationOptions options;
  options.workers = 4;
  const auto sets = enumerate_adequate_sets(kShape33, 12, options);
  REQUIRE(sets.size() == 324);
  CHECK(std::is_sorted(sets.begin(), sets.end()));
  CHECK(sets == enumerate_adequate_sets(kShape33, 12, EnumerationOptions{1, true, AdequacyRule::kSelfCounting}));
  CHECK(std::find(sets.begin(), sets.end(), AdequateSet(kShape33, kFirstOptimal)) != sets.end());

  const std::set<CodeMask> masks = [&] {
    std::set<CodeMask> m;
    for (const auto& s : sets) m.insert(s.mask());
    return m;
  }();
  std::vector<int> perm{0, 1, 2};
  do {
    for (const auto& s : sets) {
      REQUIRE(masks.count(permute_colors(s, perm).mask()) == 1);
      REQUIRE(masks.count(permute_players(s, perm).mask()) == 1);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const ScoreLineTable table(kShape33);
  for (const auto& s : sets) {
    for (Code extra = 0; extra < 27; ++extra) {
      REQUIRE(is_adequate(table, s.mask() | (CodeMask{1} << extra)));
    }
  }
}

TEST_CASE("find_min_das on two colors") {
  const auto r3 = find_min_das(GameShape(3, 2));
  CHECK(r3.das == 2);
  CHECK(r3.witness.codes() == std::vector<Code>{0, 7});
  CHECK(find_min_das(GameShape(2, 2)).das == 2);
  CHECK(find_min_das(GameShape(4, 2)).das == 4);
  const auto r5 = find_min_das(GameShape(5, 2), EnumerationOptions{3, true, AdequacyRule::kSelfCounting});
  CHECK(r5.das == 7);
  CHECK(is_adequate(GameShape(5, 2), r5.witness.codes()));
  CHECK(r5.witness == *first_adequate_set(GameShape(5, 2), 7));
}

TEST_CASE("capacity errors") {
  CHECK_THROWS_AS(enumerate_adequate_sets(GameShape(7, 2), 3), CapacityError);
  CHECK_THROWS_AS(enumerate_adequate_sets(GameShape(2, 6), 18), CapacityError);
  CHECK_THROWS_AS(find_min_das(GameShape(2, 6)), CapacityError);
  CHECK_THROWS_AS(enumerate_adequate_sets(kShape33, 0), InvalidInput);
  CHECK_THROWS_AS(enumerate_adequate_sets(kShape33, 28), InvalidInput);
}

TEST_CASE("phi examples and properties") {
  const AdequateSet first(kShape33, kFirstOptimal);
  const auto p = ProbabilityVector::parse("0.7,0.2,0.1");
  CHECK(std::abs(phi(first, p) - 0.242) <= 1e-12);
  CHECK(phi_exact(first, p) == Rational(242, 1000));
  CHECK(phi_exact(first, ProbabilityVector::uniform(3)) == Rational(12, 27));
  const AdequateSet full(kShape33, all_codes(kShape33));
  CHECK(std::abs(phi(full, ProbabilityVector::from_doubles({0.5, 0.3, 0.2})) - 1.0) <= 1e-12);
  CHECK(phi_exact(full, ProbabilityVector::parse("3/7,2/7,2/7")) == 1);
  CHECK_THROWS_AS(phi(first, ProbabilityVector::from_doubles({0.5, 0.5})), InvalidInput);
  CHECK_THROWS_AS(phi_exact(first, ProbabilityVector::from_doubles({0.5, 0.25, 0.25})), InvalidInput);

  // Additivity over a split, checked against the plain oracle sum.
  const std::vector<double> probs{0.45, 0.35, 0.2};
  const auto pv = ProbabilityVector::from_doubles(probs);
  const AdequateSet low(kShape33, std::vector<Code>(kFirstOptimal.begin(), kFirstOptimal.begin() + 5));
  const AdequateSet high(kShape33, std::vector<Code>(kFirstOptimal.begin() + 5, kFirstOptimal.end()));
  CHECK(std::abs(phi(low, pv) + phi(high, pv) - phi(first, pv)) <= 1e-15);
  CHECK(std::abs(phi(first, pv) - oracle::set_probability(kFirstOptimal, 3, probs)) <= 1e-15);
}

TEST_CASE("outside-only rule is weaker than self-counting") {
  // Members exempt: any set containing every code is trivially fine.
  CHECK(is_adequate(kShape33, all_codes(kShape33), AdequacyRule::kOutsideOnly));
  const ScoreLineTable table(kShape33);
  for (const auto& s : enumerate_adequate_sets(GameShape(3, 3), 12)) {
    REQUIRE(is_adequate(table, s.mask(), AdequacyRule::kOutsideOnly));
  }
  // Small shape where the two rules diverge, counted by the oracle.
  const auto strong = oracle::adequate_subsets(2, 3, 3);
  const auto weak = oracle::adequate_subsets(2, 3, 3, true);
  CHECK(count_outside_only_sets(GameShape(2, 3), 3) == weak.size() - strong.size());
}

TEST_CASE("worker cap from the environment") {
  CHECK(effective_workers(3) >= 1);
  CHECK(effective_workers(1) == 1);
}
