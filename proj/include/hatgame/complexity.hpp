#pragma once

#include <string>

#include "hatgame/probability.hpp"

namespace hatgame {

// Strategy-space sizes for N players and Q colors:
//   brute    = (Q+1)^(N Q^(N-1))      every player answers every observation
//   reduced  = (Q+1)^(N (Q^(N-1)-1))  one observation per player fixed
//   adequate = C(Q^N, das)            candidate loss sets of size das
struct ComplexityReport {
  BigInt brute;
  BigInt reduced;
  BigInt adequate;
};

// Takes raw counts: N >= 1, Q >= 2, 1 <= das <= Q^N, Q^N <= 2^30.
ComplexityReport complexity_report(int num_players, int num_colors, int das);

// Rounded to `significant` digits, e.g. "1.80144E+16".
std::string scientific(const BigInt& value, int significant = 6);

}  // namespace hatgame
