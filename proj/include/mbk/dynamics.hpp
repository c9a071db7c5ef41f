#pragma once

// Escape-time iteration of Q(z) = z^p + c from z = 0 over the complex,
// hyperbolic, bicomplex and tricomplex numbers.
//
// A point that has not escaped after max_iter iterates counts as a member.
// Iterate m (1-based) escapes when its norm exceeds escape_radius or the
// overflow guard.

#include <complex>
#include <cstdint>
#include <vector>

#include "mbk/hypercomplex.hpp"

namespace mbk::dynamics {

using complex = std::complex<double>;

inline constexpr double kOverflowGuard = 1e100;
inline constexpr int kDefaultMaxIter = 1000;
inline constexpr int kBoundaryMaxIter = 2000;

// 2^(1/(p-1)): every member orbit stays inside this radius.
double escape_bound(int p);

struct IterationParams {
  int p = 2;
  int max_iter = kDefaultMaxIter;
  double escape_radius = 2.0;

  // Radius defaults to the sharp bound 2^(1/(p-1)).
  static IterationParams for_degree(int p, int max_iter = kDefaultMaxIter);

  // Throws std::invalid_argument on p < 2, max_iter < 1 or radius <= 0.
  void validate() const;
  // Membership answers need a radius at least the sharp bound.
  void validate_for_membership() const;
};

struct EscapeResult {
  bool escaped = false;
  int iterations = 0;
  double final_norm = 0.0;

  friend bool operator==(const EscapeResult&, const EscapeResult&) = default;
};

EscapeResult iterate_complex(complex c, const IterationParams& params);

// Iterates Q^1(0), Q^2(0), ... up to and including the escaping iterate.
std::vector<complex> complex_orbit(complex c, const IterationParams& params);

bool member_multibrot(complex c, const IterationParams& params);

struct RealExtent {
  // Bisection brackets: *_inner is a member, *_outer is not.
  double lo_inner = 0.0, lo_outer = 0.0;
  double hi_inner = 0.0, hi_outer = 0.0;

  double lo() const { return 0.5 * (lo_inner + lo_outer); }
  double hi() const { return 0.5 * (hi_inner + hi_outer); }
};

// Bisects the membership boundary on both real half-lines to width <= tol.
RealExtent real_axis_extent(int p, const IterationParams& params, double tol);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Proven for p = 2 and p = 3; otherwise the conjectured
// [-(p-1)p^(-p/(p-1)), (p-1)p^(-p/(p-1))] (odd p) or
// [-2^(1/(p-1)), (p-1)p^(-p/(p-1))] (even p).
Interval closed_form_real_extent(int p);
bool real_extent_is_theorem(int p);

// Hyperbolic iteration through T: the two real orbits of a - b and a + b.
// final_norm is max(|u - v|, |u + v|) = |u| + |v|.
EscapeResult iterate_hyperbolic(Hyperbolic c, const IterationParams& params);
// Same dynamics with the <> product directly.
EscapeResult iterate_hyperbolic_direct(Hyperbolic c, const IterationParams& params);

bool member_hyperbrot(Hyperbolic c, const IterationParams& params);

// |a| + |b| <= 2/(3 sqrt 3).
bool member_hyperbric_analytic(double a, double b);

enum class TricomplexMode { direct, idempotent };

EscapeResult iterate_tricomplex(const Tricomplex& c, const IterationParams& params,
                                TricomplexMode mode = TricomplexMode::direct);
bool member_tricomplex(const Tricomplex& c, const IterationParams& params,
                       TricomplexMode mode = TricomplexMode::direct);

EscapeResult iterate_bicomplex(const Bicomplex& c, const IterationParams& params);
bool member_bicomplex(const Bicomplex& c, const IterationParams& params);

// |c1| + |c4| + |c6| <= 2/(3 sqrt 3) for c = c1 + c4 j1 + c6 j2.
bool member_perplexbric_analytic(double c1, double c4, double c6);

}  // namespace mbk::dynamics
