#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "mbk/dynamics.hpp"
#include "mbk/oracles.hpp"

using namespace mbk;
using namespace mbk::dynamics;
using U = Unit;

TEST_CASE("escape bound and default parameters") {
  CHECK(escape_bound(2) == 2.0);
  CHECK(escape_bound(3) == doctest::Approx(std::sqrt(2.0)));
  const auto p = IterationParams::for_degree(4);
  CHECK(p.max_iter == kDefaultMaxIter);
  CHECK(p.escape_radius == doctest::Approx(std::cbrt(2.0)));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(IterationParams::for_degree(1), std::invalid_argument);
  auto p = IterationParams::for_degree(3);
  p.max_iter = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = IterationParams::for_degree(3);
  p.escape_radius = 1.0;
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS(p.validate_for_membership(), std::invalid_argument);
  CHECK_THROWS_AS(member_multibrot(0.0, p), std::invalid_argument);
}

TEST_CASE("complex iteration examples") {
  const auto p2 = IterationParams::for_degree(2);
  CHECK(member_multibrot(0.0, p2));
  CHECK(member_multibrot(-1.0, p2));
  CHECK(member_multibrot(-2.0, p2));
  CHECK_FALSE(member_multibrot(0.26, p2));
  const auto r = iterate_complex(1.0, p2);  // 1, 2, 5
  CHECK(r.escaped);
  CHECK(r.iterations == 3);
  const auto orbit = complex_orbit(1.0, p2);
  REQUIRE(orbit.size() == 3);
  CHECK(orbit[2] == complex(5.0));
  const auto nan = iterate_complex(complex(std::nan(""), 0), p2);
  CHECK(nan.escaped);
}

TEST_CASE("escaped orbits grow past the radius") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int p = 2; p <= 6; ++p) {
    const auto params = IterationParams::for_degree(p, 200);
    const double L = escape_bound(p);
    for (int s = 0; s < 200; ++s) {
      // |c| > L escapes immediately and every later iterate keeps growing.
      const double arg = d(rng) * 2;
      const complex c = std::polar(L * (1.0 + 0.5 * std::abs(d(rng))) + 1e-9, arg);
      const auto r = iterate_complex(c, params);
      REQUIRE(r.escaped);
      REQUIRE(r.iterations == 1);
      complex z = c;
      for (int k = 0; k < 5 && std::abs(z) < 1e50; ++k) {
        const complex next = std::pow(z, p) + c;
        REQUIRE(std::abs(next) >= std::abs(z) * (1.0 - 1e-12));
        z = next;
      }
    }
  }
}

TEST_CASE("real extents reproduce the closed forms") {
  for (int p : {2, 3}) {
    const auto params = IterationParams::for_degree(p, kBoundaryMaxIter);
    const RealExtent e = real_axis_extent(p, params, 1e-4);
    const Interval want = closed_form_real_extent(p);
    CHECK(std::abs(e.lo() - want.lo) <= 1e-3);
    CHECK(std::abs(e.hi() - want.hi) <= 1e-3);
    CHECK(real_extent_is_theorem(p));
  }
  CHECK_FALSE(real_extent_is_theorem(4));
  CHECK(closed_form_real_extent(3).hi == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))));
  CHECK(closed_form_real_extent(2).lo == doctest::Approx(-2.0));
  CHECK(closed_form_real_extent(2).hi == doctest::Approx(0.25));
}

TEST_CASE("cubic Multibrot symmetries") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> d(-1, 1);
  const auto params = IterationParams::for_degree(3, 300);
  for (int s = 0; s < 2000; ++s) {
    const complex c(d(rng), d(rng));
    const auto base = iterate_complex(c, params);
    REQUIRE(iterate_complex(-c, params).iterations == base.iterations);
    REQUIRE(iterate_complex(std::conj(c), params).iterations == base.iterations);
  }
}

TEST_CASE("hyperbolic iteration") {
  const auto params = IterationParams::for_degree(3, 500);
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> d(-0.6, 0.6);
  for (int s = 0; s < 5000; ++s) {
    const Hyperbolic c{d(rng), d(rng)};
    const auto a = iterate_hyperbolic(c, params), b = iterate_hyperbolic_direct(c, params);
    REQUIRE(a.escaped == b.escaped);
    REQUIRE(a.iterations == b.iterations);
    const double band = std::abs(std::abs(c.u) + std::abs(c.v) - roots::kMandelbricBound);
    if (band > 1e-2) REQUIRE(member_hyperbrot(c, params) == member_hyperbric_analytic(c.u, c.v));
  }
  CHECK(member_hyperbric_analytic(0.2, 0.1));
  CHECK_FALSE(member_hyperbric_analytic(0.3, 0.1));
}

TEST_CASE("tricomplex modes agree") {
  std::mt19937_64 rng(44);
  for (int p : {2, 3}) {
    const auto params = IterationParams::for_degree(p, 200);
    for (int s = 0; s < 2000; ++s) {
      const Tricomplex c = test::random_tc(rng, 0.7);
      const auto a = iterate_tricomplex(c, params, TricomplexMode::direct);
      const auto b = iterate_tricomplex(c, params, TricomplexMode::idempotent);
      REQUIRE(a.escaped == b.escaped);
      REQUIRE(a.iterations == b.iterations);
    }
  }
}

TEST_CASE("tricomplex membership examples") {
  const auto params = IterationParams::for_degree(3);
  CHECK(member_tricomplex(Tricomplex{}, params));
  CHECK_FALSE(member_tricomplex(Tricomplex(1.0), params));
  // The real line of the tricomplex set is the real line of the Multibrot.
  for (double x : {-0.38, -0.1, 0.0, 0.2, 0.38, 0.39, -0.39, 0.5})
    CHECK(member_tricomplex(Tricomplex(x), params) == member_multibrot(x, params));
  // Bicomplex numbers iterate the same inside the tricomplex algebra.
  const Bicomplex b(std::array<double, 4>{0.1, 0.2, -0.15, 0.05});
  CHECK(member_bicomplex(b, params) == member_tricomplex(b.embed(), params));
}

TEST_CASE("perplexbric analytic form agrees with the union oracle") {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  for (int s = 0; s < 20000; ++s) {
    const double a = d(rng), b = d(rng), c = d(rng);
    REQUIRE(member_perplexbric_analytic(a, b, c) == oracles::perplexbric_union_member(a, b, c));
  }
}

TEST_CASE("perplexbric escape matches the l1 ball off its boundary") {
  std::mt19937_64 rng(46);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  const auto params = IterationParams::for_degree(3, kBoundaryMaxIter);
  int checked = 0;
  for (int s = 0; s < 3000; ++s) {
    const double a = d(rng), b = d(rng), c = d(rng);
    if (std::abs(std::abs(a) + std::abs(b) + std::abs(c) - roots::kMandelbricBound) <= 1e-2) continue;
    Tricomplex t;
    t[U::one] = a;
    t[U::j1] = b;
    t[U::j2] = c;
    REQUIRE(member_tricomplex(t, params) == member_perplexbric_analytic(a, b, c));
    ++checked;
  }
  CHECK(checked > 2500);
}
