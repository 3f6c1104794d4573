#include "hatgame/adequate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "hatgame/errors.hpp"

namespace hatgame {

namespace {

void check_set_shape(const GameShape& shape) {
  if (!shape.fits_mask()) {
    throw CapacityError("adequate sets need Q^N <= 64, shape has " +
                        std::to_string(shape.num_codes()) + " configurations");
  }
}

// Codes strictly greater than c.
CodeMask above(Code c, CodeMask full) {
  return c >= 63 ? CodeMask{0} : full & ~((CodeMask{2} << c) - 1);
}

double binomial(double n, double k) {
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

// Depth-first lexicographic combination search. With pruning, a prefix is
// dropped as soon as some configuration can no longer reach Q-1 hits on any
// of its lines using the codes still selectable after the prefix.
class Search {
 public:
  // Return false from the visitor to stop the search.
  using Visitor = std::function<bool(CodeMask)>;

  Search(const ScoreLineTable& table, const EnumerationOptions& options)
      : lines_(table.lines()),
        full_(table.full_mask()),
        num_codes_(table.shape().num_codes()),
        need_(table.shape().num_colors() - 1),
        rule_(options.rule),
        prune_(options.prune) {}

  bool satisfiable(CodeMask chosen, CodeMask avail, int remaining) const {
    CodeMask covered = rule_ == AdequacyRule::kOutsideOnly
                           ? chosen | (remaining > 0 ? avail : 0)
                           : 0;
    for (CodeMask l : lines_) {
      if ((covered & l) == l) continue;
      int reach = std::popcount(l & chosen);
      if (reach < need_ && remaining > 0) {
        reach += std::min(std::popcount(l & avail), remaining);
      }
      if (reach >= need_) {
        covered |= l;
        if (covered == full_) return true;
      }
    }
    return covered == full_;
  }

  // Subsets of size das whose smallest element is `first`.
  bool run_partition(Code first, int das, const Visitor& visit) const {
    const CodeMask chosen = CodeMask{1} << first;
    if (prune_ && !satisfiable(chosen, above(first, full_), das - 1)) return true;
    return extend(chosen, first + 1, das - 1, visit);
  }

  bool run(int das, const Visitor& visit) const {
    for (Code first = 0; first + static_cast<Code>(das) <= num_codes_; ++first) {
      if (!run_partition(first, das, visit)) return false;
    }
    return true;
  }

  Code num_codes() const { return num_codes_; }

 private:
  bool extend(CodeMask chosen, Code next, int remaining, const Visitor& visit) const {
    if (remaining == 0) {
      if (prune_ || satisfiable(chosen, 0, 0)) return visit(chosen);
      return true;
    }
    const Code last = num_codes_ - static_cast<Code>(remaining);
    for (Code c = next; c <= last; ++c) {
      const CodeMask grown = chosen | (CodeMask{1} << c);
      if (prune_ && !satisfiable(grown, above(c, full_), remaining - 1)) continue;
      if (!extend(grown, c + 1, remaining - 1, visit)) return false;
    }
    return true;
  }

  const std::vector<CodeMask>& lines_;
  CodeMask full_;
  Code num_codes_;
  int need_;
  AdequacyRule rule_;
  bool prune_;
};

void check_das(const GameShape& shape, int das) {
  if (das < 1 || static_cast<Code>(das) > shape.num_codes()) {
    throw InvalidInput("set size " + std::to_string(das) + " outside [1, " +
                       std::to_string(shape.num_codes()) + "]");
  }
}

// Runs the search over first-element partitions on a worker pool. Returns the
// per-partition masks in partition order.
std::vector<std::vector<CodeMask>> run_partitioned(const ScoreLineTable& table, int das,
                                                   const EnumerationOptions& options,
                                                   bool stop_at_first) {
  const Search search(table, options);
  const Code partitions = search.num_codes() - static_cast<Code>(das) + 1;
  std::vector<std::vector<CodeMask>> found(partitions);
  std::atomic<Code> next{0};
  std::atomic<Code> best{partitions};

  auto work = [&] {
    for (Code p = next++; p < partitions; p = next++) {
      if (stop_at_first && p > best.load()) continue;
      auto& out = found[p];
      search.run_partition(p, das, [&](CodeMask m) {
        out.push_back(m);
        return !stop_at_first;
      });
      if (stop_at_first && !out.empty()) {
        Code current = best.load();
        while (p < current && !best.compare_exchange_weak(current, p)) {
        }
      }
    }
  };

  const int workers = std::min<int>(effective_workers(options.workers),
                                    static_cast<int>(partitions));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return found;
}

}  // namespace

AdequateSet::AdequateSet(const GameShape& shape, std::vector<Code> codes)
    : shape_(shape), codes_(std::move(codes)), mask_(0) {
  check_set_shape(shape);
  if (codes_.empty()) throw InvalidInput("adequate set must be nonempty");
  std::sort(codes_.begin(), codes_.end());
  if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end()) {
    throw InvalidInput("duplicate code in set");
  }
  if (codes_.back() >= shape.num_codes()) {
    throw InvalidInput("code " + std::to_string(codes_.back()) + " out of range [0, " +
                       std::to_string(shape.num_codes()) + ")");
  }
  mask_ = mask_of(codes_);
}

AdequateSet::AdequateSet(const GameShape& shape, CodeMask mask)
    : shape_(shape), codes_(), mask_(mask) {
  check_set_shape(shape);
  if (mask == 0) throw InvalidInput("adequate set must be nonempty");
  if ((mask & ~shape.full_mask()) != 0) throw InvalidInput("mask has out-of-range codes");
  codes_ = codes_of(mask);
}

bool is_adequate(const ScoreLineTable& table, CodeMask candidate, AdequacyRule rule) {
  EnumerationOptions options;
  options.rule = rule;
  return Search(table, options).satisfiable(candidate, 0, 0);
}

bool is_adequate(const GameShape& shape, std::span<const Code> candidate,
                 AdequacyRule rule) {
  const AdequateSet set(shape, std::vector<Code>(candidate.begin(), candidate.end()));
  return is_adequate(ScoreLineTable(shape), set.mask(), rule);
}

std::vector<AdequateSet> enumerate_adequate_sets(const GameShape& shape, int das,
                                                 const EnumerationOptions& options) {
  check_das(shape, das);
  if (!shape.fits_mask() ||
      binomial(shape.num_codes(), das) > kMaxEnumerationCandidates) {
    throw CapacityError(
        "enumerating " + std::to_string(das) + "-subsets of " +
        std::to_string(shape.num_codes()) +
        " configurations exceeds capacity (Q^N <= 64 and at most 1e9 candidates); "
        "use min-das incremental search for small sizes instead");
  }
  const ScoreLineTable table(shape);
  std::vector<AdequateSet> sets;
  for (const auto& part : run_partitioned(table, das, options, false)) {
    for (CodeMask m : part) sets.emplace_back(shape, m);
  }
  return sets;
}

void for_each_adequate_mask(const ScoreLineTable& table, int das,
                            const EnumerationOptions& options,
                            const std::function<void(CodeMask)>& visit) {
  check_das(table.shape(), das);
  Search(table, options).run(das, [&](CodeMask m) {
    visit(m);
    return true;
  });
}

std::optional<AdequateSet> first_adequate_set(const GameShape& shape, int das,
                                              const EnumerationOptions& options) {
  check_das(shape, das);
  check_set_shape(shape);
  const ScoreLineTable table(shape);
  for (const auto& part : run_partitioned(table, das, options, true)) {
    if (!part.empty()) return AdequateSet(shape, part.front());
  }
  return std::nullopt;
}

MinDasResult find_min_das(const GameShape& shape, const EnumerationOptions& options) {
  if (shape.num_codes() > kMaxMinDasCodes) {
    throw CapacityError("minimal-size search supports Q^N <= 32, shape has " +
                        std::to_string(shape.num_codes()) + " configurations");
  }
  for (int das = 1; static_cast<Code>(das) <= shape.num_codes(); ++das) {
    if (auto witness = first_adequate_set(shape, das, options)) {
      return {das, *std::move(witness)};
    }
  }
  throw InvariantViolation("no adequate set found; the full set is always adequate");
}

std::uint64_t count_outside_only_sets(const GameShape& shape, int das,
                                      const EnumerationOptions& options) {
  EnumerationOptions weak = options;
  weak.rule = AdequacyRule::kOutsideOnly;
  const auto weak_sets = enumerate_adequate_sets(shape, das, weak);
  const ScoreLineTable table(shape);
  std::uint64_t count = 0;
  for (const auto& set : weak_sets) {
    if (!is_adequate(table, set.mask(), AdequacyRule::kSelfCounting)) ++count;
  }
  return count;
}

double config_probability(const GameShape& shape, Code code, const ProbabilityVector& probs) {
  const auto q = static_cast<Code>(shape.num_colors());
  double prob = 1.0;
  for (int k = 0; k < shape.num_players(); ++k, code /= q) prob *= probs[code % q];
  return prob;
}

namespace {

void check_probs(const GameShape& shape, const ProbabilityVector& probs) {
  if (probs.size() != static_cast<std::size_t>(shape.num_colors())) {
    throw InvalidInput("expected " + std::to_string(shape.num_colors()) +
                       " probabilities, got " + std::to_string(probs.size()));
  }
}

}  // namespace

double phi(const AdequateSet& set, const ProbabilityVector& probs) {
  check_probs(set.shape(), probs);
  double sum = 0.0;
  for (Code c : set.codes()) sum += config_probability(set.shape(), c, probs);
  return sum;
}

Rational phi_exact(const AdequateSet& set, const ProbabilityVector& probs) {
  check_probs(set.shape(), probs);
  if (!probs.is_exact()) throw InvalidInput("exact phi needs rational probabilities");
  const auto q = static_cast<Code>(set.shape().num_colors());
  Rational sum = 0;
  for (Code c : set.codes()) {
    Rational term = 1;
    for (int k = 0; k < set.shape().num_players(); ++k, c /= q) term *= probs.exact()[c % q];
    sum += term;
  }
  return sum;
}

AdequateSet permute_colors(const AdequateSet& set, std::span<const Color> perm) {
  const GameShape& shape = set.shape();
  if (perm.size() != static_cast<std::size_t>(shape.num_colors())) {
    throw InvalidInput("color permutation has wrong length");
  }
  std::vector<Code> out;
  for (Code c : set.codes()) {
    auto digits = decode_config(c, shape);
    for (auto& d : digits) d = perm[static_cast<std::size_t>(d)];
    out.push_back(encode_config(digits, shape));
  }
  return AdequateSet(shape, std::move(out));
}

AdequateSet permute_players(const AdequateSet& set, std::span<const int> perm) {
  const GameShape& shape = set.shape();
  if (perm.size() != static_cast<std::size_t>(shape.num_players())) {
    throw InvalidInput("player permutation has wrong length");
  }
  std::vector<Code> out;
  for (Code c : set.codes()) {
    const auto digits = decode_config(c, shape);
    std::vector<Color> moved(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
      moved[static_cast<std::size_t>(perm[i])] = digits[i];
    }
    out.push_back(encode_config(moved, shape));
  }
  return AdequateSet(shape, std::move(out));
}

int effective_workers(int requested) {
  int workers = requested > 0 ? requested
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("HATGAME_MAX_WORKERS")) {
    const int limit = std::atoi(cap);
    if (limit > 0) workers = std::min(workers, limit);
  }
  return std::max(workers, 1);
}

}  // namespace hatgame
