#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mbk/oracles.hpp"
#include "mbk/roots.hpp"

using namespace mbk::roots;

namespace {
std::vector<double> real_parts(const RootSet& rs) {
  std::vector<double> out;
  for (const Root& r : rs.roots)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value.real());
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("depressed reduction") {
  const Depressed dp = depressed_reduce({3, 3, 1});  // (x + 1)^3
  CHECK(dp.p == doctest::Approx(0.0));
  CHECK(dp.q == doctest::Approx(0.0));
  const Depressed e = depressed_reduce({0, -1, 0.25});
  CHECK(e.p == -1.0);
  CHECK(e.q == 0.25);
}

TEST_CASE("anchor cubics") {
  SUBCASE("x^3 + 1: D = 27, one real root") {
    const CubicCoeffs cc{0, 0, 1};
    CHECK(cubic_discriminant(cc) == doctest::Approx(27.0));
    const RootSet rs = cubic_roots(cc);
    CHECK(rs.kind == RootKind::one_real_two_complex);
    CHECK(max_scaled_residual(cc, rs) <= 1e-12);
  }
  SUBCASE("x^3 - x: D = -4, three distinct roots") {
    const CubicCoeffs cc{0, -1, 0};
    CHECK(cubic_discriminant(cc) == doctest::Approx(-4.0));
    const RootSet rs = cubic_roots(cc);
    CHECK(rs.kind == RootKind::three_distinct_real);
    const auto r = real_parts(rs);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(-1.0));
    CHECK(r[1] == doctest::Approx(0.0));
    CHECK(r[2] == doctest::Approx(1.0));
  }
  SUBCASE("(x - 1)^2 (x + 2): D = 0, double root") {
    const CubicCoeffs cc{0, -3, 2};
    CHECK(cubic_discriminant(cc) == doctest::Approx(0.0));
    const RootSet rs = cubic_roots(cc);
    CHECK(rs.kind == RootKind::three_real_one_double);
    const auto r = real_parts(rs);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(-2.0).epsilon(1e-7));
    CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(r[2] == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("random cubics agree with the sign-change oracle") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int s = 0; s < 5000; ++s) {
    const CubicCoeffs cc{d(rng), d(rng), d(rng)};
    const RootSet rs = cubic_roots(cc);
    REQUIRE(rs.kind == mbk::oracles::sampled_root_kind(cc));
    REQUIRE(max_scaled_residual(cc, rs) <= 1e-9);
    int total = 0;
    std::complex<double> sum = 0, product = 1;
    for (const Root& r : rs.roots) {
      total += r.multiplicity;
      for (int k = 0; k < r.multiplicity; ++k) {
        sum += r.value;
        product *= r.value;
      }
    }
    REQUIRE(total == 3);
    REQUIRE(std::abs(sum + cc.b) <= 1e-9 * cc.scale());
    REQUIRE(std::abs(product + cc.d) <= 1e-8 * std::pow(cc.scale(), 3));
  }
}

TEST_CASE("mandelbric attracting root") {
  const double c = 0.2;
  const double a = mandelbric_attracting_root(c);
  CHECK(a >= 1.0 / std::sqrt(3.0));
  CHECK(a < 1.0);
  CHECK(std::abs(a * a * a - a + c) <= 1e-14);
  CHECK(mandelbric_attracting_root(kMandelbricBound) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-7));
  CHECK_THROWS_AS(mandelbric_attracting_root(0.0), std::domain_error);
  CHECK_THROWS_AS(mandelbric_attracting_root(0.4), std::domain_error);
}

TEST_CASE("root kind names") {
  CHECK(to_string(RootKind::three_distinct_real) != to_string(RootKind::one_real_two_complex));
}
