#include "hatgame/patterns.hpp"

#include <algorithm>
#include <set>
#include <numeric>
#include <random>
#include <string>

#include "hatgame/errors.hpp"
#include "hatgame/maxflow.hpp"

namespace hatgame {

namespace {

void fill_slots(int remaining, std::size_t position, Signature& current,
                std::vector<Signature>& out) {
  if (position == current.size()) {
    out.push_back(current);
    return;
  }
  for (int count = 0; count <= remaining; ++count) {
    current[position] = count;
    fill_slots(remaining - count, position + 1, current, out);
  }
}

std::size_t slot_index(const std::vector<Signature>& slots, const Signature& s) {
  const auto it = std::lower_bound(slots.begin(), slots.end(), s);
  if (it == slots.end() || *it != s) throw InvariantViolation("signature has no slot");
  return static_cast<std::size_t>(it - slots.begin());
}

void check_comparable(const Pattern& a, const Pattern& b) {
  if (a.num_players() != b.num_players() || a.num_colors() != b.num_colors()) {
    throw InvalidInput("patterns belong to different shapes");
  }
  if (a.total() != b.total()) {
    throw InvalidInput("patterns have unequal totals " + std::to_string(a.total()) +
                       " and " + std::to_string(b.total()));
  }
}

void check_sorted_probs(const ProbabilityVector& probs, int num_colors) {
  if (probs.size() != static_cast<std::size_t>(num_colors)) {
    throw InvalidInput("expected " + std::to_string(num_colors) + " probabilities, got " +
                       std::to_string(probs.size()));
  }
}

}  // namespace

std::vector<Signature> signature_slots(int num_players, int num_colors) {
  if (num_players < 1 || num_colors < 2) throw InvalidInput("invalid pattern shape");
  std::vector<Signature> slots;
  Signature current(static_cast<std::size_t>(num_colors - 1), 0);
  fill_slots(num_players, 0, current, slots);
  return slots;
}

std::string slot_label(const Signature& signature) {
  std::string label;
  for (int c : signature) label += std::to_string(c);
  return label;
}

Pattern::Pattern(int num_players, int num_colors, std::vector<int> coefficients)
    : num_players_(num_players), num_colors_(num_colors), coefficients_(std::move(coefficients)) {
  const auto expected = signature_slots(num_players, num_colors).size();
  if (coefficients_.size() != expected) {
    throw InvalidInput("pattern needs " + std::to_string(expected) + " coefficients, got " +
                       std::to_string(coefficients_.size()));
  }
  if (std::any_of(coefficients_.begin(), coefficients_.end(), [](int c) { return c < 0; })) {
    throw InvalidInput("pattern coefficients must be nonnegative");
  }
}

int Pattern::total() const { return std::accumulate(coefficients_.begin(), coefficients_.end(), 0); }

Pattern pattern_of(const AdequateSet& set) {
  const GameShape& shape = set.shape();
  const auto slots = signature_slots(shape.num_players(), shape.num_colors());
  std::vector<int> coefficients(slots.size(), 0);
  Signature sig(static_cast<std::size_t>(shape.num_colors() - 1));
  for (Code code : set.codes()) {
    for (std::size_t c = 0; c < sig.size(); ++c) {
      sig[c] = count_color(shape, code, static_cast<Color>(c));
    }
    ++coefficients[slot_index(slots, sig)];
  }
  return Pattern(shape.num_players(), shape.num_colors(), std::move(coefficients));
}

double monomial(const Signature& signature, int num_players, std::span<const double> probs) {
  double value = 1.0;
  int rest = num_players;
  for (std::size_t c = 0; c < signature.size(); ++c) {
    for (int k = 0; k < signature[c]; ++k) value *= probs[c];
    rest -= signature[c];
  }
  for (int k = 0; k < rest; ++k) value *= probs[signature.size()];
  return value;
}

double phi_of_pattern(const Pattern& pattern, const ProbabilityVector& probs) {
  check_sorted_probs(probs, pattern.num_colors());
  const auto slots = signature_slots(pattern.num_players(), pattern.num_colors());
  double sum = 0.0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (pattern.coefficients()[s] != 0) {
      sum += pattern.coefficients()[s] * monomial(slots[s], pattern.num_players(), probs.values());
    }
  }
  return sum;
}

Rational phi_of_pattern_exact(const Pattern& pattern, const ProbabilityVector& probs) {
  check_sorted_probs(probs, pattern.num_colors());
  if (!probs.is_exact()) throw InvalidInput("exact phi needs rational probabilities");
  const auto slots = signature_slots(pattern.num_players(), pattern.num_colors());
  const auto& exact = probs.exact();
  Rational sum = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    Rational term = pattern.coefficients()[s];
    int rest = pattern.num_players();
    for (std::size_t c = 0; c < slots[s].size(); ++c) {
      for (int k = 0; k < slots[s][c]; ++k) term *= exact[c];
      rest -= slots[s][c];
    }
    for (int k = 0; k < rest; ++k) term *= exact.back();
    sum += term;
  }
  return sum;
}

MonomialOrder::MonomialOrder(int num_players, int num_colors)
    : slots_(signature_slots(num_players, num_colors)) {
  const std::size_t n = slots_.size();
  closure_.assign(n * n, false);
  for (std::size_t u = 0; u < n; ++u) {
    closure_[u * n + u] = true;
    const Signature& s = slots_[u];
    const int last = num_players - std::accumulate(s.begin(), s.end(), 0);
    // One hat of color c becomes color c-1; color Q-1 is the implicit remainder.
    for (std::size_t c = 1; c <= s.size(); ++c) {
      const int available = c == s.size() ? last : s[c];
      if (available == 0) continue;
      Signature t = s;
      if (c < s.size()) --t[c];
      ++t[c - 1];
      const std::size_t v = slot_index(slots_, t);
      generators_.emplace_back(u, v);
      closure_[u * n + v] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!closure_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (closure_[k * n + j]) closure_[i * n + j] = true;
      }
    }
  }
}

RefutationSampler::RefutationSampler(int num_players, int num_colors)
    : num_players_(num_players), num_colors_(num_colors) {
  if (num_colors == 3) {
    const int n = kGridDivisions;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        const int k = n - i - j;
        if (i >= j && j >= k) {
          points_.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n,
                             static_cast<double>(k) / n});
        }
      }
    }
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> cuts(static_cast<std::size_t>(num_colors + 1));
  for (int s = 0; s < kRandomSamples; ++s) {
    cuts.front() = 0.0;
    cuts.back() = 1.0;
    for (int c = 1; c < num_colors; ++c) cuts[static_cast<std::size_t>(c)] = unit(rng);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> point;
    for (int c = 0; c < num_colors; ++c) {
      point.push_back(cuts[static_cast<std::size_t>(c + 1)] - cuts[static_cast<std::size_t>(c)]);
    }
    std::sort(point.begin(), point.end(), std::greater<>());
    points_.push_back(std::move(point));
  }
  const auto slots = signature_slots(num_players, num_colors);
  num_slots_ = slots.size();
  monomials_.reserve(points_.size() * num_slots_);
  for (const auto& point : points_) {
    for (const auto& slot : slots) monomials_.push_back(monomial(slot, num_players, point));
  }
}

std::vector<double> RefutationSampler::evaluate(const Pattern& pattern) const {
  if (pattern.num_players() != num_players_ || pattern.num_colors() != num_colors_) {
    throw InvalidInput("pattern shape does not match sampler");
  }
  std::vector<double> values(points_.size(), 0.0);
  const auto& coeffs = pattern.coefficients();
  for (std::size_t p = 0; p < points_.size(); ++p) {
    const double* row = &monomials_[p * num_slots_];
    double sum = 0.0;
    for (std::size_t s = 0; s < num_slots_; ++s) sum += coeffs[s] * row[s];
    values[p] = sum;
  }
  return values;
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::kCertified: return "certified";
    case Dominance::kRefuted: return "refuted";
    case Dominance::kUnknown: return "unknown";
  }
  return "unknown";
}

bool transport_certificate(const MonomialOrder& order, const Pattern& better,
                           const Pattern& worse) {
  check_comparable(better, worse);
  const int n = static_cast<int>(order.num_slots());
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  detail::FlowNetwork network(2 * n + 2);
  for (int u = 0; u < n; ++u) {
    if (better.coefficients()[u] > 0) network.add_edge(source, u, better.coefficients()[u]);
    if (worse.coefficients()[u] > 0) network.add_edge(n + u, sink, worse.coefficients()[u]);
    for (int v = 0; v < n; ++v) {
      if (order.leq(u, v)) network.add_edge(u, n + v, detail::FlowNetwork::kInfinite);
    }
  }
  return network.max_flow(source, sink) == better.total();
}

namespace {

bool refuted_by(const std::vector<double>& better, const std::vector<double>& worse) {
  for (std::size_t p = 0; p < better.size(); ++p) {
    if (better[p] > worse[p] + kRefutationMargin) return true;
  }
  return false;
}

Dominance combine(bool certified, bool refuted) {
  if (certified && refuted) {
    throw InvariantViolation("dominance both certified by transport and refuted by sampling");
  }
  if (certified) return Dominance::kCertified;
  if (refuted) return Dominance::kRefuted;
  return Dominance::kUnknown;
}

}  // namespace

Dominance dominates(const Pattern& better, const Pattern& worse, const MonomialOrder& order,
                    const RefutationSampler& sampler) {
  const bool certified = transport_certificate(order, better, worse);
  return combine(certified, refuted_by(sampler.evaluate(better), sampler.evaluate(worse)));
}

Dominance dominates(const Pattern& better, const Pattern& worse) {
  check_comparable(better, worse);
  const MonomialOrder order(better.num_players(), better.num_colors());
  const RefutationSampler sampler(better.num_players(), better.num_colors());
  return dominates(better, worse, order, sampler);
}

DominanceSummary dominant_patterns(const std::vector<Pattern>& patterns) {
  DominanceSummary summary;
  const std::size_t n = patterns.size();
  if (n == 0) return summary;
  for (std::size_t i = 1; i < n; ++i) check_comparable(patterns[0], patterns[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (patterns[i] == patterns[j]) throw InvalidInput("duplicate pattern in input");
    }
  }

  const MonomialOrder order(patterns[0].num_players(), patterns[0].num_colors());
  const RefutationSampler sampler(patterns[0].num_players(), patterns[0].num_colors());
  std::vector<std::vector<double>> values;
  values.reserve(n);
  for (const auto& p : patterns) values.push_back(sampler.evaluate(p));

  summary.status.assign(n, std::vector<Dominance>(n, Dominance::kUnknown));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      summary.status[i][j] = combine(transport_certificate(order, patterns[i], patterns[j]),
                                     refuted_by(values[i], values[j]));
    }
  }
  const auto& st = summary.status;
  auto certified = [&](std::size_t i, std::size_t j) { return st[i][j] == Dominance::kCertified; };

  // Minimal classes: nobody outside the class certifies over it.
  for (std::size_t i = 0; i < n; ++i) {
    bool beaten = false;
    for (std::size_t j = 0; j < n && !beaten; ++j) {
      beaten = j != i && certified(j, i) && !certified(i, j);
    }
    if (!beaten) summary.minimal.push_back(i);
  }
  // A minimal pattern must be refuted as dominated by every non-equivalent one.
  for (std::size_t m : summary.minimal) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == m || (certified(j, m) && certified(m, j))) continue;
      if (st[j][m] == Dominance::kUnknown) {
        throw IncompletenessError("cannot confirm minimality of pattern #" +
                                  std::to_string(m + 1) + ": dominance by pattern #" +
                                  std::to_string(j + 1) + " is unresolved");
      }
    }
  }
  summary.dominator.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::find_if(summary.minimal.begin(), summary.minimal.end(),
                                 [&](std::size_t m) { return certified(m, i); });
    if (it == summary.minimal.end()) {
      throw IncompletenessError("pattern #" + std::to_string(i + 1) +
                                " has no certified dominator among the minimal patterns");
    }
    summary.dominator[i] = *it;
  }
  return summary;
}

std::vector<Pattern> distinct_patterns(const std::vector<AdequateSet>& sets) {
  std::vector<Pattern> out;
  std::set<std::vector<int>> seen;
  for (const auto& set : sets) {
    Pattern p = pattern_of(set);
    if (seen.insert(p.coefficients()).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hatgame
