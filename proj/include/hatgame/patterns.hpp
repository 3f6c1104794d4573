#pragma once

// Digit-signature patterns and their dominance order.
//
// The signature of a configuration counts its hats of each color except the
// last one: for three colors, (a, b) = (#color-0, #color-1), giving the
// monomial p^a q^b r^(N-a-b). A pattern counts the members of a set per
// signature, so phi of the set is a polynomial fixed by the pattern.
//
// Slots are ordered lexicographically; for N = Q = 3 that is
// 00 01 02 03 10 11 12 20 21 30.

#include <cstdint>
#include <string>
#include <vector>

#include "hatgame/adequate.hpp"

namespace hatgame {

using Signature = std::vector<int>;

std::vector<Signature> signature_slots(int num_players, int num_colors);
// Concatenated counts, e.g. "12" for (1, 2).
std::string slot_label(const Signature& signature);

class Pattern {
 public:
  Pattern(int num_players, int num_colors, std::vector<int> coefficients);

  int num_players() const { return num_players_; }
  int num_colors() const { return num_colors_; }
  const std::vector<int>& coefficients() const { return coefficients_; }
  int total() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  int num_players_;
  int num_colors_;
  std::vector<int> coefficients_;
};

Pattern pattern_of(const AdequateSet& set);

// Product of probs over the signature, the last color taking the remainder.
double monomial(const Signature& signature, int num_players, std::span<const double> probs);

double phi_of_pattern(const Pattern& pattern, const ProbabilityVector& probs);
Rational phi_of_pattern_exact(const Pattern& pattern, const ProbabilityVector& probs);

// Partial order on signature slots: u <= v when monomial(u) <= monomial(v)
// follows from p0 >= p1 >= ... >= p_{Q-1}. Generated by replacing one hat of
// color c with color c-1, then closed reflexively and transitively.
class MonomialOrder {
 public:
  MonomialOrder(int num_players, int num_colors);

  const std::vector<Signature>& slots() const { return slots_; }
  std::size_t num_slots() const { return slots_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& generators() const {
    return generators_;
  }
  bool leq(std::size_t u, std::size_t v) const { return closure_[u * slots_.size() + v]; }

 private:
  std::vector<Signature> slots_;
  std::vector<std::pair<std::size_t, std::size_t>> generators_;
  std::vector<bool> closure_;
};

// Sorted probability vectors used to refute dominance claims. For three
// colors: the barycentric grid with step 0.005 restricted to p >= q >= r,
// plus 10,000 pseudo-random sorted triples from a fixed seed.
class RefutationSampler {
 public:
  static constexpr int kGridDivisions = 200;
  static constexpr int kRandomSamples = 10000;
  static constexpr std::uint64_t kSeed = 0x5eed'4a75'0000'0003ULL;

  RefutationSampler(int num_players, int num_colors);

  const std::vector<std::vector<double>>& points() const { return points_; }
  // phi of the pattern at every sample point.
  std::vector<double> evaluate(const Pattern& pattern) const;

 private:
  int num_players_;
  int num_colors_;
  std::vector<std::vector<double>> points_;
  // monomial values, point-major
  std::vector<double> monomials_;
  std::size_t num_slots_;
};

enum class Dominance { kCertified, kRefuted, kUnknown };

std::string to_string(Dominance d);

inline constexpr double kRefutationMargin = 1e-12;

// Unit-mass transport of `better` onto `worse` along the monomial order.
bool transport_certificate(const MonomialOrder& order, const Pattern& better,
                           const Pattern& worse);

// Whether `better` has phi <= phi of `worse` on the whole sorted region.
Dominance dominates(const Pattern& better, const Pattern& worse);
Dominance dominates(const Pattern& better, const Pattern& worse, const MonomialOrder& order,
                    const RefutationSampler& sampler);

struct DominanceSummary {
  // Indices into the input list.
  std::vector<std::size_t> minimal;
  // For every input pattern, one minimal pattern certified to dominate it.
  std::vector<std::size_t> dominator;
  // status[i][j] = dominates(input[i], input[j]).
  std::vector<std::vector<Dominance>> status;
};

// Throws IncompletenessError when some pattern can be neither certified nor
// refuted against the candidates it needs.
DominanceSummary dominant_patterns(const std::vector<Pattern>& patterns);

// Distinct patterns of the sets, in order of first appearance.
std::vector<Pattern> distinct_patterns(const std::vector<AdequateSet>& sets);

}  // namespace hatgame
