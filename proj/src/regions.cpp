#include "hatgame/regions.hpp"

#include <algorithm>
#include <string>

#include "hatgame/errors.hpp"

namespace hatgame {

namespace {

constexpr double kDomainTolerance = 1e-12;

void check_domain(double p, double r) {
  const double q = 1.0 - p - r;
  if (!(r >= -kDomainTolerance)) throw InvalidInput("domain violation: r >= 0 fails");
  if (!(q >= r - kDomainTolerance)) throw InvalidInput("domain violation: q >= r fails");
  if (!(p >= q - kDomainTolerance)) throw InvalidInput("domain violation: p >= q fails");
}

}  // namespace

char region_letter(Region region) {
  switch (region) {
    case Region::kA: return 'A';
    case Region::kB: return 'B';
    case Region::kC: return 'C';
  }
  return '?';
}

int formula_index(Region region) { return static_cast<int>(region) + 1; }

Region region_of_formula(int index) {
  if (index < 1 || index > 3) {
    throw InvalidInput("formula index " + std::to_string(index) + " not in {1, 2, 3}");
  }
  return static_cast<Region>(index - 1);
}

SortedProbs sort_probs(const ProbabilityVector& probs) {
  if (probs.size() != 3) throw InvalidInput("region analysis needs exactly 3 colors");
  std::array<int, 3> perm{0, 1, 2};
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return probs[a] > probs[b]; });
  return {probs[perm[0]], probs[perm[1]], probs[perm[2]], perm};
}

double psi(int index, double p, double r) {
  region_of_formula(index);
  check_domain(p, r);
  switch (index) {
    case 1: return p * (1 - 2 * r * r) + (1 - p) * (1 - p) * (p + r);
    case 2: return 1 + p * p * r + 2 * p * r * r + p * p - p - r;
    default: return 3 * p * (1 - p - p * r);
  }
}

bool in_region(Region region, double p, double r, double tol) {
  const double lower = 1 - 2 * p;
  const double upper = (1 - p) / 2;
  const double curve1 = (1 - p) * (1 - p) / (2 * p);
  const double curve3 = (1 - 2 * p) / (2 * p);
  auto between = [tol](double lo, double x, double hi) { return lo - tol <= x && x <= hi + tol; };
  if (!between(std::max(lower, 0.0), r, upper)) return false;
  switch (region) {
    case Region::kA:
      return p >= 0.5 - tol && between(curve1, r, upper);
    case Region::kB:
      return (between(kAlpha, p, 0.5) && between(curve3, r, upper)) ||
             (p >= 0.5 - tol && between(0.0, r, curve1));
    case Region::kC:
      return (between(1.0 / 3, p, kAlpha) && between(lower, r, upper)) ||
             (between(kAlpha, p, 0.5) && between(lower, r, curve3));
  }
  return false;
}

Classification classify(const ProbabilityVector& probs) {
  Classification out;
  out.sorted = sort_probs(probs);
  const double p = out.sorted.p;
  const double r = out.sorted.r;
  for (int i = 1; i <= 3; ++i) out.psi_values[static_cast<std::size_t>(i - 1)] = psi(i, p, r);
  out.value = *std::max_element(out.psi_values.begin(), out.psi_values.end());
  for (int i = 1; i <= 3; ++i) {
    if (out.value - out.psi_values[static_cast<std::size_t>(i - 1)] <= kTieTolerance) {
      out.label.tied.push_back(i);
    }
  }
  out.label.is_boundary = out.label.tied.size() > 1;
  int chosen = out.label.tied.front();
  if (out.label.is_boundary) {
    // Display label: tied regions whose inequalities hold, A > B > C.
    const auto it = std::find_if(out.label.tied.begin(), out.label.tied.end(),
                                 [&](int i) { return in_region(region_of_formula(i), p, r); });
    if (it != out.label.tied.end()) chosen = *it;
  }
  out.label.region = region_of_formula(chosen);
  return out;
}

RegionBoundaries region_boundaries(double p) {
  if (!(p >= 1.0 / 3 - kDomainTolerance && p <= 1.0 + kDomainTolerance)) {
    throw InvalidInput("p must lie in [1/3, 1]");
  }
  RegionBoundaries b{};
  b.p = p;
  b.psi1_lower = (1 - p) * (1 - p) / (2 * p);
  b.psi3_upper = (1 - 2 * p) / (2 * p);
  b.domain_lower = 1 - 2 * p;
  b.domain_upper = (1 - p) / 2;
  b.alpha = kAlpha;
  b.domain_upper_active = true;
  b.domain_lower_active = p <= 0.5;
  b.psi3_upper_active = p >= kAlpha && p <= 0.5;
  b.psi1_lower_active = p >= 0.5;
  return b;
}

std::vector<RegionMapRow> region_map(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw InvalidInput("grid step must lie in (0, 1]");
  std::vector<RegionMapRow> rows;
  const int n = static_cast<int>(std::floor(1.0 / step + 1e-9));
  for (int i = 0; i <= n; ++i) {
    const double p = i * step;
    for (int j = 0; j <= n; ++j) {
      const double r = j * step;
      const double q = 1 - p - r;
      if (r < 0 || q < r - 1e-12 || p < q - 1e-12) continue;
      const auto c = classify(ProbabilityVector::from_doubles({p, std::max(q, 0.0), r}));
      rows.push_back({p, r, c.label.region, c.value});
    }
  }
  return rows;
}

}  // namespace hatgame
