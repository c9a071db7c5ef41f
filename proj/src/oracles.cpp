#include "mbk/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

namespace mbk::oracles {

namespace {

// Bit k set <=> generator i(k+1) is a factor.
constexpr std::array<unsigned, kUnitCount> kMask = {0b000, 0b001, 0b010, 0b100,
                                                    0b111, 0b011, 0b101, 0b110};

Unit unit_of_mask(unsigned m) {
  for (std::size_t i = 0; i < kUnitCount; ++i)
    if (kMask[i] == m) return unit_at(i);
  return Unit::one;
}

}  // namespace

SignedUnit generator_unit_product(Unit a, Unit b) {
  const unsigned ma = kMask[index_of(a)], mb = kMask[index_of(b)];
  const int sign = std::popcount(ma & mb) % 2 ? -1 : 1;
  return {sign, unit_of_mask(ma ^ mb)};
}

UnitTable generator_unit_table() {
  UnitTable t{};
  for (Unit a : kAllUnits)
    for (Unit b : kAllUnits) t[index_of(a)][index_of(b)] = generator_unit_product(a, b);
  return t;
}

Tricomplex zeta_pair_multiply(const Tricomplex& a, const Tricomplex& b) {
  const ZetaPair x = split_i3(a), y = split_i3(b);
  return join_i3({x.zeta1 * y.zeta1 - x.zeta2 * y.zeta2, x.zeta1 * y.zeta2 + x.zeta2 * y.zeta1});
}

int sampled_real_root_count(const roots::CubicCoeffs& cc) {
  const double R = 1.0 + std::max({std::abs(cc.b), std::abs(cc.c), std::abs(cc.d)});
  std::vector<double> xs;
  constexpr int kGrid = 4000;
  for (int k = 0; k <= kGrid; ++k) xs.push_back(-R + 2.0 * R * k / kGrid);
  // P'(x) = 3x^2 + 2bx + c.
  const double disc = cc.b * cc.b - 3.0 * cc.c;
  std::vector<double> crit;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    crit = {(-cc.b - s) / 3.0, (-cc.b + s) / 3.0};
    xs.insert(xs.end(), crit.begin(), crit.end());
  }
  std::sort(xs.begin(), xs.end());

  // A critical value that vanishes to working precision is a double root.
  const double scale = std::max(1.0, R * R * R);
  for (double x : crit)
    if (disc > 0.0 && std::abs(cc(x)) <= 1e-12 * scale) return 2;

  int changes = 0;
  double prev = cc(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double cur = cc(xs[i]);
    if (cur == 0.0) continue;
    if (prev != 0.0 && (prev < 0.0) != (cur < 0.0)) ++changes;
    prev = cur;
  }
  return changes >= 3 ? 3 : 1;
}

roots::RootKind sampled_root_kind(const roots::CubicCoeffs& cc) {
  switch (sampled_real_root_count(cc)) {
    case 3: return roots::RootKind::three_distinct_real;
    case 2: return roots::RootKind::three_real_one_double;
    default: return roots::RootKind::one_real_two_complex;
  }
}

bool hyperbric_member(double a, double b) {
  // Both real orbits a - b and a + b must stay bounded.
  const double r = 2.0 / (3.0 * std::sqrt(3.0));
  return std::abs(a - b) <= r && std::abs(a + b) <= r;
}

bool perplexbric_union_member(double c1, double c4, double c6) {
  return hyperbric_member(c1, c4 + c6) && hyperbric_member(c1, c4 - c6);
}

}  // namespace mbk::oracles
