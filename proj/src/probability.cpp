#include "hatgame/probability.hpp"

#include <cmath>
#include <cstdio>

#include "hatgame/errors.hpp"

namespace hatgame {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw InvalidInput("malformed number '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw InvalidInput("malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

BigInt pow10(unsigned exponent) { return boost::multiprecision::pow(BigInt(10), exponent); }

// Unsigned decimal with optional fraction and exponent.
Rational parse_decimal(std::string_view text, std::string_view whole) {
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 4) {
      throw InvalidInput("malformed exponent in '" + std::string(whole) + "'");
    }
    exponent = static_cast<long>(parse_digits(exp_text, whole));
    if (negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw InvalidInput("malformed number '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    digits = std::string(text);
  }
  Rational value(parse_digits(digits, whole));
  if (exponent >= 0) {
    value *= pow10(static_cast<unsigned>(exponent));
  } else {
    value /= pow10(static_cast<unsigned>(-exponent));
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(text.substr(0, slash)), whole);
    Rational den = parse_decimal(trim(text.substr(slash + 1)), whole);
    if (den == 0) {
      throw InvalidInput("zero denominator in '" + std::string(whole) + "'");
    }
    value = num / den;
  } else {
    value = parse_decimal(text, whole);
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

ProbabilityVector ProbabilityVector::from_doubles(std::vector<double> probs) {
  if (probs.size() < 2) {
    throw InvalidInput("probability vector needs at least 2 entries");
  }
  double sum = 0.0;
  for (std::size_t c = 0; c < probs.size(); ++c) {
    if (!std::isfinite(probs[c]) || probs[c] < 0.0) {
      throw InvalidInput("probability of color " + std::to_string(c) +
                         " is negative or not finite");
    }
    sum += probs[c];
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw InvalidInput("probabilities sum to " + format_real(sum) + ", not 1");
  }
  ProbabilityVector v;
  v.probs_ = std::move(probs);
  return v;
}

ProbabilityVector ProbabilityVector::from_rationals(std::vector<Rational> probs) {
  if (probs.size() < 2) {
    throw InvalidInput("probability vector needs at least 2 entries");
  }
  Rational sum = 0;
  for (std::size_t c = 0; c < probs.size(); ++c) {
    if (probs[c] < 0) {
      throw InvalidInput("probability of color " + std::to_string(c) + " is negative");
    }
    sum += probs[c];
  }
  if (sum != 1) {
    throw InvalidInput("probabilities sum to " + format_rational(sum) + ", not 1");
  }
  ProbabilityVector v;
  v.probs_.reserve(probs.size());
  for (const auto& p : probs) v.probs_.push_back(to_double(p));
  v.exact_ = std::move(probs);
  return v;
}

ProbabilityVector ProbabilityVector::parse(std::string_view text) {
  std::vector<Rational> probs;
  while (true) {
    const auto comma = text.find(',');
    probs.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_rationals(std::move(probs));
}

ProbabilityVector ProbabilityVector::uniform(int num_colors) {
  if (num_colors < 2) throw InvalidInput("need at least 2 colors");
  return from_rationals(
      std::vector<Rational>(static_cast<std::size_t>(num_colors), Rational(1, num_colors)));
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace hatgame
