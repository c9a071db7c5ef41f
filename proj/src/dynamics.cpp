#include "mbk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mbk/roots.hpp"

namespace mbk::dynamics {

namespace {

constexpr double kGuardSquared = kOverflowGuard * kOverflowGuard;

// NaN compares false, so it escapes as well.
inline bool escapes(double norm_sq, double radius_sq) {
  return !(norm_sq <= radius_sq) || norm_sq > kGuardSquared;
}

inline double real_pow(double x, int p) {
  double w = x;
  for (int k = 1; k < p; ++k) w *= x;
  return w;
}

template <class T, class Step, class NormSq>
EscapeResult run(T z, const IterationParams& params, Step step, NormSq norm_sq) {
  const double r2 = params.escape_radius * params.escape_radius;
  for (int m = 1; m <= params.max_iter; ++m) {
    z = step(z);
    const double n2 = norm_sq(z);
    if (escapes(n2, r2)) return {true, m, std::sqrt(n2)};
    if (m == params.max_iter) return {false, m, std::sqrt(n2)};
  }
  return {false, params.max_iter, 0.0};
}

struct CPoint {
  double re, im;
};

inline CPoint cpow_plus(CPoint z, int p, CPoint c) {
  double wr = z.re, wi = z.im;
  for (int k = 1; k < p; ++k) {
    const double nr = wr * z.re - wi * z.im;
    const double ni = wr * z.im + wi * z.re;
    wr = nr;
    wi = ni;
  }
  return {wr + c.re, wi + c.im};
}

}  // namespace

double escape_bound(int p) {
  if (p < 2) throw std::invalid_argument("degree p must be >= 2");
  return std::pow(2.0, 1.0 / (p - 1));
}

IterationParams IterationParams::for_degree(int p, int max_iter) {
  IterationParams params{p, max_iter, escape_bound(p)};
  params.validate();
  return params;
}

void IterationParams::validate() const {
  if (p < 2) throw std::invalid_argument("degree p must be >= 2, got " + std::to_string(p));
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(escape_radius > 0.0)) throw std::invalid_argument("escape radius must be positive");
}

void IterationParams::validate_for_membership() const {
  validate();
  // Small slack for radii written out in decimal.
  if (escape_radius < escape_bound(p) * (1.0 - 1e-12))
    throw std::invalid_argument("escape radius below 2^(1/(p-1)) cannot decide membership");
}

EscapeResult iterate_complex(complex c, const IterationParams& params) {
  params.validate();
  const CPoint cc{c.real(), c.imag()};
  const int p = params.p;
  return run(
      CPoint{0.0, 0.0}, params, [&](CPoint z) { return cpow_plus(z, p, cc); },
      [](CPoint z) { return z.re * z.re + z.im * z.im; });
}

std::vector<complex> complex_orbit(complex c, const IterationParams& params) {
  params.validate();
  const double r2 = params.escape_radius * params.escape_radius;
  const CPoint cc{c.real(), c.imag()};
  std::vector<complex> orbit;
  CPoint z{0.0, 0.0};
  for (int m = 1; m <= params.max_iter; ++m) {
    z = cpow_plus(z, params.p, cc);
    orbit.emplace_back(z.re, z.im);
    if (escapes(z.re * z.re + z.im * z.im, r2)) break;
  }
  return orbit;
}

bool member_multibrot(complex c, const IterationParams& params) {
  params.validate_for_membership();
  if (std::abs(c) > escape_bound(params.p)) return false;
  return !iterate_complex(c, params).escaped;
}

RealExtent real_axis_extent(int p, const IterationParams& params, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  IterationParams pp = params;
  pp.p = p;
  pp.validate_for_membership();
  const double bound = escape_bound(p);
  const auto member = [&](double x) { return member_multibrot(complex(x, 0.0), pp); };

  const auto bisect = [&](double inner, double outer) {
    while (std::abs(outer - inner) > tol) {
      const double mid = 0.5 * (inner + outer);
      (member(mid) ? inner : outer) = mid;
    }
    return std::pair{inner, outer};
  };

  RealExtent e;
  // Beyond the bound nothing is a member, so 2*bound is always outside.
  std::tie(e.hi_inner, e.hi_outer) = bisect(0.0, 2.0 * bound);
  std::tie(e.lo_inner, e.lo_outer) = bisect(0.0, -2.0 * bound);
  return e;
}

Interval closed_form_real_extent(int p) {
  if (p < 2) throw std::invalid_argument("degree p must be >= 2");
  const double right = (p - 1) * std::pow(double(p), -double(p) / (p - 1));
  if (p % 2 == 1) return {-right, right};
  return {-escape_bound(p), right};
}

bool real_extent_is_theorem(int p) { return p == 2 || p == 3; }

EscapeResult iterate_hyperbolic(Hyperbolic c, const IterationParams& params) {
  params.validate();
  const double r = params.escape_radius;
  const double cm = c.u - c.v, cp = c.u + c.v;
  const int p = params.p;
  double x = 0.0, y = 0.0;
  for (int m = 1; m <= params.max_iter; ++m) {
    x = real_pow(x, p) + cm;
    y = real_pow(y, p) + cp;
    const double n = std::max(std::abs(x), std::abs(y));
    if (!(n <= r) || n > kOverflowGuard) return {true, m, n};
    if (m == params.max_iter) return {false, m, n};
  }
  return {false, params.max_iter, 0.0};
}

EscapeResult iterate_hyperbolic_direct(Hyperbolic c, const IterationParams& params) {
  params.validate();
  const double r = params.escape_radius;
  Hyperbolic z{0.0, 0.0};
  for (int m = 1; m <= params.max_iter; ++m) {
    const Hyperbolic w = diamond_pow(z, static_cast<unsigned>(params.p));
    z = {w.u + c.u, w.v + c.v};
    const Hyperbolic t = hyp_T(z);
    const double n = std::max(std::abs(t.u), std::abs(t.v));
    if (!(n <= r) || n > kOverflowGuard) return {true, m, n};
    if (m == params.max_iter) return {false, m, n};
  }
  return {false, params.max_iter, 0.0};
}

bool member_hyperbrot(Hyperbolic c, const IterationParams& params) {
  params.validate_for_membership();
  return !iterate_hyperbolic(c, params).escaped;
}

bool member_hyperbric_analytic(double a, double b) {
  return std::abs(a) + std::abs(b) <= roots::kMandelbricBound;
}

EscapeResult iterate_tricomplex(const Tricomplex& c, const IterationParams& params,
                                TricomplexMode mode) {
  params.validate();
  const int p = params.p;
  if (mode == TricomplexMode::direct) {
    return run(
        Tricomplex{}, params,
        [&](const Tricomplex& z) {
          Tricomplex w = z;
          for (int k = 1; k < p; ++k) w = w * z;
          return w + c;
        },
        [](const Tricomplex& z) { return norm3_squared(z); });
  }
  const IdempotentPair cc = to_idempotent(c);
  return run(
      IdempotentPair{}, params,
      [&](const IdempotentPair& z) {
        return IdempotentPair{pow(z.u1, unsigned(p)) + cc.u1, pow(z.u2, unsigned(p)) + cc.u2};
      },
      [](const IdempotentPair& z) {
        return (norm2_squared(z.u1) + norm2_squared(z.u2)) / 2.0;
      });
}

bool member_tricomplex(const Tricomplex& c, const IterationParams& params, TricomplexMode mode) {
  params.validate_for_membership();
  return !iterate_tricomplex(c, params, mode).escaped;
}

EscapeResult iterate_bicomplex(const Bicomplex& c, const IterationParams& params) {
  params.validate();
  const unsigned p = static_cast<unsigned>(params.p);
  return run(
      Bicomplex{}, params, [&](const Bicomplex& z) { return pow(z, p) + c; },
      [](const Bicomplex& z) { return norm2_squared(z); });
}

bool member_bicomplex(const Bicomplex& c, const IterationParams& params) {
  params.validate_for_membership();
  return !iterate_bicomplex(c, params).escaped;
}

bool member_perplexbric_analytic(double c1, double c4, double c6) {
  return std::abs(c1) + std::abs(c4) + std::abs(c6) <= roots::kMandelbricBound;
}

}  // namespace mbk::dynamics
