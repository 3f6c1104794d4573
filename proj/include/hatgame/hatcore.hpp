#pragma once

// Configuration encoding, score arithmetic and line geometry.
//
// A configuration assigns one of Q colors to each of N players. It is coded
// as the base-Q number b_1 b_2 ... b_N with b_1 the most significant digit.
// Player i observes every digit except b_i; the base-Q value of that reduced
// sequence is the player's score. The Q configurations sharing a score at
// player i form a line: they differ only in player i's own hat.
//
// Players are 0-based throughout the library.

#include <cstdint>
#include <span>
#include <vector>

namespace hatgame {

using Code = std::uint32_t;
using Color = int;

// Bitmask over configuration codes; only shapes with Q^N <= 64 use it.
using CodeMask = std::uint64_t;
inline constexpr Code kMaxMaskCodes = 64;
inline constexpr std::uint64_t kMaxCodes = std::uint64_t{1} << 30;

class GameShape {
 public:
  // Throws InvalidInput unless N >= 2, Q >= 2 and Q^N <= 2^30.
  GameShape(int num_players, int num_colors);

  int num_players() const { return num_players_; }
  int num_colors() const { return num_colors_; }
  // Q^N.
  Code num_codes() const { return num_codes_; }
  // Q^(N-1), the number of distinct scores one player can observe.
  Code num_scores() const { return num_codes_ / static_cast<Code>(num_colors_); }
  // Q^(N-1-player): place value of a player's digit in a code.
  Code stride(int player) const;

  bool fits_mask() const { return num_codes_ <= kMaxMaskCodes; }
  CodeMask full_mask() const;

  friend bool operator==(const GameShape&, const GameShape&) = default;

 private:
  int num_players_;
  int num_colors_;
  Code num_codes_;
};

Code encode_config(std::span<const Color> digits, const GameShape& shape);
std::vector<Color> decode_config(Code code, const GameShape& shape);

// b_{player+1} of the configuration.
Color digit_of(const GameShape& shape, Code code, int player);

int count_color(const GameShape& shape, Code code, Color color);

Code score(const GameShape& shape, int player, Code code);
Code score(const GameShape& shape, int player, std::span<const Color> digits);

// The configuration seen as `observed` by `player` whose own hat is `color`.
Code config_from_score(const GameShape& shape, int player, Code observed,
                       Color color);

// Sorted codes sharing player's score with `code`; always Q members.
std::vector<Code> line(const GameShape& shape, int player, Code code);

// Per (player, code) scores and line masks for shapes with Q^N <= 64.
// Immutable after construction.
class ScoreLineTable {
 public:
  // Throws CapacityError when Q^N > 64.
  explicit ScoreLineTable(const GameShape& shape);

  const GameShape& shape() const { return shape_; }

  Code score(int player, Code code) const {
    return scores_[index(player, code)];
  }
  CodeMask line_mask(int player, Code code) const {
    return line_masks_[index(player, code)];
  }
  // Every distinct line once: N * Q^(N-1) masks, player-major.
  const std::vector<CodeMask>& lines() const { return distinct_lines_; }
  CodeMask full_mask() const { return shape_.full_mask(); }

 private:
  std::size_t index(int player, Code code) const {
    return static_cast<std::size_t>(player) * shape_.num_codes() + code;
  }

  GameShape shape_;
  std::vector<Code> scores_;
  std::vector<CodeMask> line_masks_;
  std::vector<CodeMask> distinct_lines_;
};

CodeMask mask_of(std::span<const Code> codes);
std::vector<Code> codes_of(CodeMask mask);

}  // namespace hatgame
