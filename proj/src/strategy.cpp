#include "hatgame/strategy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

Action Action::guess(Color color) {
  if (color < 0) throw InvalidInput("guessed color must be nonnegative");
  return Action(color);
}

DecisionMatrix::DecisionMatrix(const GameShape& shape)
    : shape_(shape),
      cells_(static_cast<std::size_t>(shape.num_players()) * shape.num_scores(), Action::pass()) {}

std::size_t DecisionMatrix::index(int player, Code observed) const {
  if (player < 0 || player >= shape_.num_players() || observed >= shape_.num_scores()) {
    throw InvalidInput("decision matrix cell (" + std::to_string(player) + ", " +
                       std::to_string(observed) + ") out of range");
  }
  return static_cast<std::size_t>(player) * shape_.num_scores() + observed;
}

void DecisionMatrix::set(int player, Code observed, Action action) {
  if (!action.is_pass() && action.color() >= shape_.num_colors()) {
    throw InvalidInput("guessed color " + std::to_string(action.color()) + " out of range");
  }
  cells_[index(player, observed)] = action;
}

ConfigOutcome play(const DecisionMatrix& matrix, Code config) {
  const GameShape& shape = matrix.shape();
  ConfigOutcome out;
  out.code = config;
  out.guesses.reserve(static_cast<std::size_t>(shape.num_players()));
  for (int i = 0; i < shape.num_players(); ++i) {
    const Action a = matrix.at(i, score(shape, i, config));
    out.guesses.push_back(a.raw());
    if (a.is_pass()) continue;
    if (a.color() == digit_of(shape, config, i)) {
      ++out.correct;
    } else {
      ++out.incorrect;
    }
  }
  out.win = out.correct > 0 && out.incorrect == 0;
  return out;
}

DecisionMatrix build_decision_matrix(const AdequateSet& set) {
  const GameShape& shape = set.shape();
  const ScoreLineTable table(shape);
  if (!is_adequate(table, set.mask())) {
    throw InvalidInput("decision matrix requires an adequate set");
  }
  DecisionMatrix matrix(shape);
  const int need = shape.num_colors() - 1;
  for (Code t = 0; t < shape.num_codes(); ++t) {
    if (set.contains(t)) continue;
    for (int i = 0; i < shape.num_players(); ++i) {
      if (std::popcount(table.line_mask(i, t) & set.mask()) < need) continue;
      const Code observed = table.score(i, t);
      const Action wanted = Action::guess(digit_of(shape, t, i));
      const Action current = matrix.at(i, observed);
      if (!current.is_pass() && current != wanted) {
        throw InvariantViolation("conflicting assignments to cell (player " +
                                 std::to_string(i + 1) + ", score " +
                                 std::to_string(observed) + ")");
      }
      matrix.set(i, observed, wanted);
    }
  }
  for (Code k = 0; k < shape.num_codes(); ++k) {
    if (play(matrix, k).win == set.contains(k)) {
      throw InvariantViolation("losing set of the decision matrix differs from the set at code " +
                               std::to_string(k));
    }
  }
  return matrix;
}

StrategyReport evaluate_exact(const DecisionMatrix& matrix, const ProbabilityVector& probs) {
  const GameShape& shape = matrix.shape();
  if (probs.size() != static_cast<std::size_t>(shape.num_colors())) {
    throw InvalidInput("expected " + std::to_string(shape.num_colors()) + " probabilities");
  }
  StrategyReport report;
  Rational exact = 0;
  const auto q = static_cast<Code>(shape.num_colors());
  for (Code k = 0; k < shape.num_codes(); ++k) {
    ConfigOutcome outcome = play(matrix, k);
    if (outcome.win) {
      report.winning.push_back(k);
      report.win_probability += config_probability(shape, k, probs);
      if (probs.is_exact()) {
        Rational term = 1;
        Code c = k;
        for (int i = 0; i < shape.num_players(); ++i, c /= q) term *= probs.exact()[c % q];
        exact += term;
      }
    } else {
      report.losing.push_back(k);
    }
    report.trace.push_back(std::move(outcome));
  }
  if (probs.is_exact()) report.exact_win_probability = exact;
  return report;
}

SimulationResult simulate(const DecisionMatrix& matrix, const ProbabilityVector& probs,
                          std::uint64_t trials, std::uint64_t seed) {
  const GameShape& shape = matrix.shape();
  if (trials == 0) throw InvalidInput("simulation needs at least one trial");
  if (probs.size() != static_cast<std::size_t>(shape.num_colors())) {
    throw InvalidInput("expected " + std::to_string(shape.num_colors()) + " probabilities");
  }
  std::vector<bool> wins(shape.num_codes());
  for (Code k = 0; k < shape.num_codes(); ++k) wins[k] = play(matrix, k).win;

  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> hat(probs.values().begin(), probs.values().end());
  const auto q = static_cast<Code>(shape.num_colors());
  std::uint64_t won = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Code config = 0;
    for (int i = 0; i < shape.num_players(); ++i) config = config * q + static_cast<Code>(hat(rng));
    if (wins[config]) ++won;
  }
  const double estimate = static_cast<double>(won) / static_cast<double>(trials);
  return {estimate, std::sqrt(estimate * (1 - estimate) / static_cast<double>(trials)), won,
          trials};
}

std::string to_string(SolveMode mode) {
  return mode == SolveMode::kExhaustive ? "exhaustive" : "closed_form";
}

SolveMode parse_solve_mode(const std::string& text) {
  if (text == "exhaustive") return SolveMode::kExhaustive;
  if (text == "closed_form" || text == "closed-form") return SolveMode::kClosedForm;
  throw InvalidInput("unknown solve mode '" + text + "'");
}

Solution solve_exhaustive(const GameShape& shape, int das, const ProbabilityVector& probs,
                          const EnumerationOptions& options) {
  if (probs.size() != static_cast<std::size_t>(shape.num_colors())) {
    throw InvalidInput("expected " + std::to_string(shape.num_colors()) + " probabilities");
  }
  const auto sets = enumerate_adequate_sets(shape, das, options);
  if (sets.empty()) throw InvalidInput("no adequate set of size " + std::to_string(das));

  std::vector<double> phis;
  std::vector<Rational> exact;
  for (const auto& s : sets) {
    phis.push_back(phi(s, probs));
    if (probs.is_exact()) exact.push_back(phi_exact(s, probs));
  }
  std::vector<std::size_t> best;
  if (probs.is_exact()) {
    const Rational lowest = *std::min_element(exact.begin(), exact.end());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (exact[i] == lowest) best.push_back(i);
    }
  } else {
    const double lowest = *std::min_element(phis.begin(), phis.end());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (phis[i] - lowest <= 1e-12 * lowest) best.push_back(i);
    }
  }

  Solution sol{SolveMode::kExhaustive, shape, probs, 0.0, std::nullopt, std::nullopt, {}};
  for (std::size_t i : best) {
    std::optional<Rational> e;
    if (probs.is_exact()) e = exact[i];
    sol.optimal.push_back({sets[i], phis[i], e, build_decision_matrix(sets[i])});
  }
  sol.value = 1.0 - sol.optimal.front().phi;
  if (probs.is_exact()) sol.exact_value = 1 - *sol.optimal.front().exact_phi;
  if (shape.num_players() == 3 && shape.num_colors() == 3) sol.classification = classify(probs);
  return sol;
}

AdequateSet region_representative(Region region) {
  const GameShape shape(3, 3);
  switch (region) {
    case Region::kA:
      return AdequateSet(shape, {4, 5, 7, 8, 9, 13, 14, 16, 17, 18, 20, 24});
    case Region::kB:
      return AdequateSet(shape, {4, 5, 7, 8, 9, 11, 15, 18, 22, 23, 25, 26});
    case Region::kC:
      return AdequateSet(shape, {0, 2, 6, 13, 14, 16, 17, 18, 22, 23, 25, 26});
  }
  throw InvalidInput("unknown region");
}

Solution solve(const ProbabilityVector& probs, SolveMode mode, const EnumerationOptions& options) {
  const GameShape shape(3, 3);
  if (probs.size() != 3) throw InvalidInput("solve needs exactly 3 color probabilities");
  if (mode == SolveMode::kExhaustive) return solve_exhaustive(shape, kThreeColorDas, probs, options);

  const Classification c = classify(probs);
  // Representatives are written for sorted colors; relabel to input colors.
  const std::array<Color, 3> relabel{c.sorted.color_permutation[0],
                                     c.sorted.color_permutation[1],
                                     c.sorted.color_permutation[2]};
  const AdequateSet set = permute_colors(region_representative(c.label.region), relabel);
  const double set_phi = phi(set, probs);
  if (std::abs((1.0 - set_phi) - c.value) > 1e-12) {
    throw InvariantViolation("closed form " + format_real(c.value) +
                             " disagrees with representative set value " +
                             format_real(1.0 - set_phi));
  }
  Solution sol{SolveMode::kClosedForm, shape, probs, c.value, std::nullopt, c, {}};
  std::optional<Rational> exact_phi;
  if (probs.is_exact()) {
    exact_phi = phi_exact(set, probs);
    sol.exact_value = 1 - *exact_phi;
  }
  sol.optimal.push_back({set, set_phi, exact_phi, build_decision_matrix(set)});
  return sol;
}

}  // namespace hatgame
