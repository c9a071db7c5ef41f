#pragma once

#include <algorithm>
#include <random>

#include "mbk/hypercomplex.hpp"

namespace mbk::test {

inline Tricomplex random_tc(std::mt19937_64& rng, double half_width = 2.0) {
  std::uniform_real_distribution<double> d(-half_width, half_width);
  std::array<double, kUnitCount> x{};
  for (double& v : x) v = d(rng);
  return Tricomplex(x);
}

inline double rel(const Tricomplex& got, const Tricomplex& want) {
  return norm3(got - want) / std::max(1.0, norm3(want));
}

}  // namespace mbk::test
