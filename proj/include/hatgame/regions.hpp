#pragma once

// Closed-form optimal winning probabilities for three players and three
// colors, and the split of the sorted simplex p >= q >= r into regions
// A, B, C where psi(1), psi(2), psi(3) respectively are optimal.

#include <array>
#include <cmath>
#include <vector>

#include "hatgame/probability.hpp"

namespace hatgame {

inline const double kAlpha = (3.0 - std::sqrt(5.0)) / 2.0;
inline constexpr double kTieTolerance = 1e-12;

enum class Region { kA, kB, kC };

char region_letter(Region region);
int formula_index(Region region);
Region region_of_formula(int index);

struct RegionLabel {
  Region region;
  bool is_boundary = false;
  // Formula indices (1..3) tying for the maximum.
  std::vector<int> tied;

  int winning_formula_index() const { return formula_index(region); }
};

struct SortedProbs {
  double p;
  double q;
  double r;
  // color_permutation[k] = input color placed at sorted position k.
  std::array<int, 3> color_permutation;
};

// Stable descending sort of a three-color vector.
SortedProbs sort_probs(const ProbabilityVector& probs);

// psi(1) = p(1 - 2r^2) + (1-p)^2 (p + r)
// psi(2) = 1 + p^2 r + 2 p r^2 + p^2 - p - r
// psi(3) = 3p(1 - p - pr)
// Throws InvalidInput unless index is 1..3 and (p, 1-p-r, r) is sorted.
double psi(int index, double p, double r);

// True when (p, r) satisfies the inequality description of the region.
bool in_region(Region region, double p, double r, double tolerance = kTieTolerance);

struct Classification {
  RegionLabel label;
  double value;
  SortedProbs sorted;
  std::array<double, 3> psi_values;
};

Classification classify(const ProbabilityVector& probs);

struct RegionBoundaries {
  double p;
  // Raw curve values r(p).
  double psi1_lower;    // (1-p)^2 / (2p)
  double psi3_upper;    // (1-2p) / (2p)
  double domain_lower;  // 1 - 2p
  double domain_upper;  // (1-p) / 2
  double alpha;
  // Whether each curve bounds a region at this p.
  bool psi1_lower_active;
  bool psi3_upper_active;
  bool domain_lower_active;
  bool domain_upper_active;

  // Curve values clamped to r >= 0.
  double clamped(double value) const { return value < 0.0 ? 0.0 : value; }
};

// Throws InvalidInput unless 1/3 <= p <= 1.
RegionBoundaries region_boundaries(double p);

struct RegionMapRow {
  double p;
  double r;
  Region region;
  double value;
};

// Valid (p, r) grid points with spacing `step` on both axes.
std::vector<RegionMapRow> region_map(double step);

}  // namespace hatgame
