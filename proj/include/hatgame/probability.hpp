#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hatgame {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kNormalizationTolerance = 1e-12;

// Per-color probabilities, color 0 first. Entries are nonnegative and sum to
// one (within 1e-12 for floating input, exactly for rational input). When
// built from rationals the exact values are kept alongside the doubles and
// every consumer that can computes exactly.
class ProbabilityVector {
 public:
  static ProbabilityVector from_doubles(std::vector<double> probs);
  static ProbabilityVector from_rationals(std::vector<Rational> probs);
  // "0.7,0.2,0.1" or "1/2,1/3,1/6". Every entry is read exactly.
  static ProbabilityVector parse(std::string_view text);
  static ProbabilityVector uniform(int num_colors);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t color) const { return probs_[color]; }
  std::span<const double> values() const { return probs_; }

  bool is_exact() const { return exact_.has_value(); }
  // Precondition: is_exact().
  const std::vector<Rational>& exact() const { return *exact_; }

 private:
  ProbabilityVector() = default;

  std::vector<double> probs_;
  std::optional<std::vector<Rational>> exact_;
};

// "3/10", "0.25", "1e-3", "2". Throws InvalidInput.
Rational parse_rational(std::string_view text);

// 15 significant digits, '.' as decimal separator, no locale.
std::string format_real(double value);
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace hatgame
