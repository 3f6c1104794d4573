#include "hatgame/complexity.hpp"

#include <cstdio>
#include <string>

#include "hatgame/errors.hpp"
#include "hatgame/hatcore.hpp"

namespace hatgame {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace

ComplexityReport complexity_report(int num_players, int num_colors, int das) {
  if (num_players < 1) throw InvalidInput("number of players must be at least 1");
  if (num_colors < 2) throw InvalidInput("number of colors must be at least 2");
  std::uint64_t scores = 1;  // Q^(N-1)
  for (int i = 1; i < num_players; ++i) {
    scores *= static_cast<std::uint64_t>(num_colors);
    if (scores * static_cast<std::uint64_t>(num_colors) > kMaxCodes) {
      throw InvalidInput("shape exceeds 2^30 configurations");
    }
  }
  const std::uint64_t codes = scores * static_cast<std::uint64_t>(num_colors);
  if (das < 1 || static_cast<std::uint64_t>(das) > codes) {
    throw InvalidInput("set size " + std::to_string(das) + " outside [1, " +
                       std::to_string(codes) + "]");
  }
  const BigInt base = num_colors + 1;
  const auto n = static_cast<std::uint64_t>(num_players);
  ComplexityReport report;
  report.brute = boost::multiprecision::pow(base, static_cast<unsigned>(n * scores));
  report.reduced = boost::multiprecision::pow(base, static_cast<unsigned>(n * (scores - 1)));
  report.adequate = binomial(codes, static_cast<std::uint64_t>(das));
  return report;
}

std::string scientific(const BigInt& value, int significant) {
  if (significant < 1) throw InvalidInput("need at least one significant digit");
  if (value < 0) return "-" + scientific(BigInt(-value), significant);
  std::string digits = value.str();
  long exponent = static_cast<long>(digits.size()) - 1;
  if (static_cast<int>(digits.size()) > significant) {
    // Round half up on the first dropped digit.
    const bool up = digits[static_cast<std::size_t>(significant)] >= '5';
    std::string kept = digits.substr(0, static_cast<std::size_t>(significant));
    if (up) {
      BigInt bumped = BigInt(kept) + 1;
      kept = bumped.str();
      if (static_cast<int>(kept.size()) > significant) {
        kept.pop_back();
        ++exponent;
      }
    }
    digits = kept;
  } else {
    digits.append(static_cast<std::size_t>(significant) - digits.size(), '0');
  }
  std::string out(1, digits[0]);
  if (significant > 1) out += "." + digits.substr(1);
  char exp[16];
  std::snprintf(exp, sizeof exp, "E%+03ld", exponent);
  return out + exp;
}

}  // namespace hatgame
