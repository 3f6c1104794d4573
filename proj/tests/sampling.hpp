#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <vector>

namespace sampling {

// Uniform points of the simplex sorted so that p >= q >= r.
inline std::vector<std::array<double, 3>> sorted_triples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::array<double, 3>> out;
  out.reserve(count);
  while (out.size() < count) {
    double a = unit(rng);
    double b = unit(rng);
    if (a > b) std::swap(a, b);
    std::array<double, 3> t{a, b - a, 1.0 - b};
    std::sort(t.begin(), t.end(), std::greater<>());
    t[2] = 1.0 - t[0] - t[1];
    if (t[2] < 0.0 || t[1] < t[2]) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace sampling
