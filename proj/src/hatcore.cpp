#include "hatgame/hatcore.hpp"

#include <bit>
#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

namespace {

void check_player(const GameShape& shape, int player) {
  if (player < 0 || player >= shape.num_players()) {
    throw InvalidInput("player index " + std::to_string(player) +
                       " out of range [0, " +
                       std::to_string(shape.num_players()) + ")");
  }
}

void check_code(const GameShape& shape, Code code) {
  if (code >= shape.num_codes()) {
    throw InvalidInput("configuration code " + std::to_string(code) +
                       " out of range [0, " +
                       std::to_string(shape.num_codes()) + ")");
  }
}

}  // namespace

GameShape::GameShape(int num_players, int num_colors)
    : num_players_(num_players), num_colors_(num_colors), num_codes_(1) {
  if (num_players < 2) {
    throw InvalidInput("number of players must be at least 2, got " +
                       std::to_string(num_players));
  }
  if (num_colors < 2) {
    throw InvalidInput("number of colors must be at least 2, got " +
                       std::to_string(num_colors));
  }
  std::uint64_t total = 1;
  for (int i = 0; i < num_players; ++i) {
    total *= static_cast<std::uint64_t>(num_colors);
    if (total > kMaxCodes) {
      throw InvalidInput("shape " + std::to_string(num_players) + " players x " +
                         std::to_string(num_colors) +
                         " colors exceeds 2^30 configurations");
    }
  }
  num_codes_ = static_cast<Code>(total);
}

Code GameShape::stride(int player) const {
  check_player(*this, player);
  Code s = 1;
  for (int k = player + 1; k < num_players_; ++k) s *= static_cast<Code>(num_colors_);
  return s;
}

CodeMask GameShape::full_mask() const {
  if (!fits_mask()) {
    throw InvalidInput("shape has more than 64 configurations; no bitmask form");
  }
  return num_codes_ == 64 ? ~CodeMask{0} : (CodeMask{1} << num_codes_) - 1;
}

Code encode_config(std::span<const Color> digits, const GameShape& shape) {
  if (digits.size() != static_cast<std::size_t>(shape.num_players())) {
    throw InvalidInput("expected " + std::to_string(shape.num_players()) +
                       " digits, got " + std::to_string(digits.size()));
  }
  Code code = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= shape.num_colors()) {
      throw InvalidInput("digit at position " + std::to_string(k + 1) + " is " +
                         std::to_string(digits[k]) + ", outside [0, " +
                         std::to_string(shape.num_colors()) + ")");
    }
    code = code * static_cast<Code>(shape.num_colors()) + static_cast<Code>(digits[k]);
  }
  return code;
}

std::vector<Color> decode_config(Code code, const GameShape& shape) {
  check_code(shape, code);
  std::vector<Color> digits(static_cast<std::size_t>(shape.num_players()));
  const auto q = static_cast<Code>(shape.num_colors());
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = static_cast<Color>(code % q);
    code /= q;
  }
  return digits;
}

Color digit_of(const GameShape& shape, Code code, int player) {
  check_code(shape, code);
  return static_cast<Color>((code / shape.stride(player)) %
                            static_cast<Code>(shape.num_colors()));
}

int count_color(const GameShape& shape, Code code, Color color) {
  check_code(shape, code);
  const auto q = static_cast<Code>(shape.num_colors());
  int count = 0;
  for (int k = 0; k < shape.num_players(); ++k, code /= q) {
    if (static_cast<Color>(code % q) == color) ++count;
  }
  return count;
}

Code score(const GameShape& shape, int player, Code code) {
  check_code(shape, code);
  const Code stride = shape.stride(player);
  const Code high = code / (stride * static_cast<Code>(shape.num_colors()));
  const Code low = code % stride;
  return high * stride + low;
}

Code score(const GameShape& shape, int player, std::span<const Color> digits) {
  return score(shape, player, encode_config(digits, shape));
}

Code config_from_score(const GameShape& shape, int player, Code observed,
                       Color color) {
  if (observed >= shape.num_scores()) {
    throw InvalidInput("observed score " + std::to_string(observed) +
                       " out of range [0, " +
                       std::to_string(shape.num_scores()) + ")");
  }
  if (color < 0 || color >= shape.num_colors()) {
    throw InvalidInput("color " + std::to_string(color) + " out of range");
  }
  const Code stride = shape.stride(player);
  const Code high = observed / stride;
  const Code low = observed % stride;
  return (high * static_cast<Code>(shape.num_colors()) + static_cast<Code>(color)) *
             stride +
         low;
}

std::vector<Code> line(const GameShape& shape, int player, Code code) {
  const Code base = config_from_score(shape, player, score(shape, player, code), 0);
  const Code stride = shape.stride(player);
  std::vector<Code> members;
  members.reserve(static_cast<std::size_t>(shape.num_colors()));
  for (Color c = 0; c < shape.num_colors(); ++c) {
    members.push_back(base + static_cast<Code>(c) * stride);
  }
  return members;
}

ScoreLineTable::ScoreLineTable(const GameShape& shape) : shape_(shape) {
  if (!shape.fits_mask()) {
    throw CapacityError("line table needs Q^N <= 64, shape has " +
                        std::to_string(shape.num_codes()) + " configurations");
  }
  const std::size_t total =
      static_cast<std::size_t>(shape.num_players()) * shape.num_codes();
  scores_.resize(total);
  line_masks_.resize(total);
  for (int i = 0; i < shape.num_players(); ++i) {
    for (Code k = 0; k < shape.num_codes(); ++k) {
      scores_[index(i, k)] = hatgame::score(shape, i, k);
      line_masks_[index(i, k)] = mask_of(line(shape, i, k));
    }
    for (Code s = 0; s < shape.num_scores(); ++s) {
      distinct_lines_.push_back(
          line_masks_[index(i, config_from_score(shape, i, s, 0))]);
    }
  }
}

CodeMask mask_of(std::span<const Code> codes) {
  CodeMask mask = 0;
  for (Code c : codes) {
    if (c >= kMaxMaskCodes) {
      throw InvalidInput("code " + std::to_string(c) + " does not fit a 64-bit mask");
    }
    mask |= CodeMask{1} << c;
  }
  return mask;
}

std::vector<Code> codes_of(CodeMask mask) {
  std::vector<Code> codes;
  codes.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    codes.push_back(static_cast<Code>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return codes;
}

}  // namespace hatgame
