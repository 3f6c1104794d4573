#pragma once

// Adequate sets: loss-configuration sets from which a team strategy can be
// built. A set A is adequate when every configuration k has a player t whose
// line through k holds at least Q-1 members of A, k itself included when
// k is in A.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hatgame/hatcore.hpp"
#include "hatgame/probability.hpp"

namespace hatgame {

// Sorted, duplicate-free, nonempty set of configuration codes of a shape
// with Q^N <= 64. Adequacy is not implied by construction.
class AdequateSet {
 public:
  AdequateSet(const GameShape& shape, std::vector<Code> codes);
  AdequateSet(const GameShape& shape, CodeMask mask);

  const GameShape& shape() const { return shape_; }
  const std::vector<Code>& codes() const { return codes_; }
  CodeMask mask() const { return mask_; }
  std::size_t size() const { return codes_.size(); }
  bool contains(Code code) const { return code < 64 && ((mask_ >> code) & 1U) != 0; }

  friend bool operator==(const AdequateSet& a, const AdequateSet& b) {
    return a.shape_ == b.shape_ && a.mask_ == b.mask_;
  }
  // Lexicographic on the code sequences.
  friend bool operator<(const AdequateSet& a, const AdequateSet& b) {
    return a.codes_ < b.codes_;
  }

 private:
  GameShape shape_;
  std::vector<Code> codes_;
  CodeMask mask_;
};

enum class AdequacyRule {
  // Every configuration needs a qualifying line; members count themselves.
  kSelfCounting,
  // Only configurations outside the set need a qualifying line.
  kOutsideOnly,
};

bool is_adequate(const ScoreLineTable& table, CodeMask candidate,
                 AdequacyRule rule = AdequacyRule::kSelfCounting);
// Throws InvalidInput on an empty candidate or invalid codes.
bool is_adequate(const GameShape& shape, std::span<const Code> candidate,
                 AdequacyRule rule = AdequacyRule::kSelfCounting);

struct EnumerationOptions {
  int workers = 1;
  bool prune = true;
  AdequacyRule rule = AdequacyRule::kSelfCounting;
};

// Largest C(Q^N, das) enumerate_adequate_sets accepts.
inline constexpr double kMaxEnumerationCandidates = 1e9;
// Largest Q^N find_min_das accepts.
inline constexpr Code kMaxMinDasCodes = 32;

// All das-subsets of [0, Q^N) passing the adequacy rule, in lexicographic
// order. Throws CapacityError when the shape is too large.
std::vector<AdequateSet> enumerate_adequate_sets(const GameShape& shape, int das,
                                                 const EnumerationOptions& options = {});

// Streams every adequate mask to `visit` from the calling thread, in
// lexicographic order. Single worker.
void for_each_adequate_mask(const ScoreLineTable& table, int das,
                            const EnumerationOptions& options,
                            const std::function<void(CodeMask)>& visit);

// Lexicographically first adequate das-subset, if any.
std::optional<AdequateSet> first_adequate_set(const GameShape& shape, int das,
                                              const EnumerationOptions& options = {});

struct MinDasResult {
  int das;
  AdequateSet witness;
};

MinDasResult find_min_das(const GameShape& shape, const EnumerationOptions& options = {});

// Number of das-subsets adequate under kOutsideOnly but not kSelfCounting.
std::uint64_t count_outside_only_sets(const GameShape& shape, int das,
                                      const EnumerationOptions& options = {});

// Probability that the hat configuration lands in the set.
double phi(const AdequateSet& set, const ProbabilityVector& probs);
// Exact value; requires probs.is_exact().
Rational phi_exact(const AdequateSet& set, const ProbabilityVector& probs);

// Probability of one configuration.
double config_probability(const GameShape& shape, Code code, const ProbabilityVector& probs);

// Applies a color permutation digit-wise (color c -> perm[c]).
AdequateSet permute_colors(const AdequateSet& set, std::span<const Color> perm);
// Moves player i's hat to position perm[i].
AdequateSet permute_players(const AdequateSet& set, std::span<const int> perm);

// Worker count after applying the HATGAME_MAX_WORKERS cap; at least 1.
int effective_workers(int requested);

}  // namespace hatgame
