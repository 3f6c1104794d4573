#pragma once

// Decision matrices built from adequate sets, their exact evaluation, Monte
// Carlo play, and the end-to-end solver for three players and three colors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hatgame/adequate.hpp"
#include "hatgame/regions.hpp"

namespace hatgame {

class Action {
 public:
  static constexpr Action pass() { return Action(-1); }
  static Action guess(Color color);

  bool is_pass() const { return value_ < 0; }
  // Precondition: !is_pass().
  Color color() const { return value_; }
  // -1 for pass, the color otherwise.
  int raw() const { return value_; }

  friend bool operator==(Action, Action) = default;

 private:
  constexpr explicit Action(int value) : value_(value) {}
  int value_;
};

// Cell (player, observed score) holds that player's action.
class DecisionMatrix {
 public:
  explicit DecisionMatrix(const GameShape& shape);

  const GameShape& shape() const { return shape_; }
  Action at(int player, Code observed) const { return cells_[index(player, observed)]; }
  void set(int player, Code observed, Action action);

  friend bool operator==(const DecisionMatrix&, const DecisionMatrix&) = default;

 private:
  std::size_t index(int player, Code observed) const;

  GameShape shape_;
  std::vector<Action> cells_;
};

// Every outside configuration t, for every player whose line through t holds
// Q-1 set members, sets cell (player, score) to t's digit for that player.
// Throws InvalidInput if the set is not adequate, InvariantViolation on a
// conflicting assignment.
DecisionMatrix build_decision_matrix(const AdequateSet& set);

struct ConfigOutcome {
  Code code;
  // Per player: -1 pass, otherwise guessed color.
  std::vector<int> guesses;
  int correct = 0;
  int incorrect = 0;
  bool win = false;
};

struct StrategyReport {
  double win_probability = 0.0;
  std::optional<Rational> exact_win_probability;
  std::vector<Code> winning;
  std::vector<Code> losing;
  std::vector<ConfigOutcome> trace;
};

ConfigOutcome play(const DecisionMatrix& matrix, Code config);
StrategyReport evaluate_exact(const DecisionMatrix& matrix, const ProbabilityVector& probs);

struct SimulationResult {
  double estimate;
  double standard_error;
  std::uint64_t wins;
  std::uint64_t trials;
};

SimulationResult simulate(const DecisionMatrix& matrix, const ProbabilityVector& probs,
                          std::uint64_t trials, std::uint64_t seed);

enum class SolveMode { kExhaustive, kClosedForm };

std::string to_string(SolveMode mode);
SolveMode parse_solve_mode(const std::string& text);

struct OptimalSet {
  AdequateSet set;
  double phi;
  std::optional<Rational> exact_phi;
  DecisionMatrix matrix;
};

struct Solution {
  SolveMode mode;
  GameShape shape;
  ProbabilityVector probs;
  double value;
  std::optional<Rational> exact_value;
  std::optional<Classification> classification;
  std::vector<OptimalSet> optimal;
};

inline constexpr int kThreeColorDas = 12;

// Minimal-phi adequate das-sets of any shape. Ties use exact comparison when
// probs are exact, relative tolerance 1e-12 otherwise.
Solution solve_exhaustive(const GameShape& shape, int das, const ProbabilityVector& probs,
                          const EnumerationOptions& options = {});

// Three players, three colors.
Solution solve(const ProbabilityVector& probs, SolveMode mode,
               const EnumerationOptions& options = {});

// Optimal set for region A, B or C when colors are sorted p >= q >= r.
AdequateSet region_representative(Region region);

}  // namespace hatgame
