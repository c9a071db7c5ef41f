#include "mbk/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mbk::roots {

namespace {

using complex = std::complex<double>;

const complex kOmega{-0.5, std::sqrt(3.0) / 2.0};

RootSet shifted(RootKind kind, std::vector<Root> ys, double b) {
  for (auto& r : ys) r.value -= b / 3.0;
  return {kind, std::move(ys)};
}

}  // namespace

double CubicCoeffs::scale() const {
  return std::max({1.0, std::abs(b), std::abs(c), std::abs(d)});
}

std::string_view to_string(RootKind k) {
  switch (k) {
    case RootKind::one_real_two_complex: return "one-real-two-complex";
    case RootKind::three_real_one_double: return "three-real-one-double";
    case RootKind::three_distinct_real: return "three-distinct-real";
  }
  return "?";
}

Depressed depressed_reduce(const CubicCoeffs& cc) {
  const double b = cc.b, c = cc.c, d = cc.d;
  return {c - b * b / 3.0, 2.0 * b * b * b / 27.0 - c * b / 3.0 + d};
}

double cubic_discriminant(const CubicCoeffs& cc) {
  const double b = cc.b, c = cc.c, d = cc.d;
  return 4.0 * c * c * c + 27.0 * d * d + 4.0 * d * b * b * b - b * b * c * c -
         18.0 * b * c * d;
}

double discriminant_band(const Depressed& dp) {
  const double p3 = std::abs(dp.p * dp.p * dp.p);
  return 1e-9 * std::max({1.0, p3, dp.q * dp.q});
}

RootKind classify(const CubicCoeffs& cc) {
  const double D = cubic_discriminant(cc);
  const Depressed dp = depressed_reduce(cc);
  if (std::abs(D) <= discriminant_band(dp)) return RootKind::three_real_one_double;
  return D > 0 ? RootKind::one_real_two_complex : RootKind::three_distinct_real;
}

RootSet cubic_roots(const CubicCoeffs& cc) {
  const Depressed dp = depressed_reduce(cc);
  const double p = dp.p, q = dp.q;
  const RootKind kind = classify(cc);

  switch (kind) {
    case RootKind::one_real_two_complex: {
      // y1^3, y2^3 are the roots t1, t2 of t^2 + q t - p^3/27.
      const double delta = std::max(0.0, q * q + 4.0 * p * p * p / 27.0);
      const double s = std::sqrt(delta);
      const double t_big = (q >= 0.0) ? (-q - s) / 2.0 : (-q + s) / 2.0;
      const double t_small = t_big != 0.0 ? (-p * p * p / 27.0) / t_big : 0.0;
      const double y1 = std::cbrt(t_big);
      // Among the three cube roots of t_small take the one closest to
      // satisfying y1 y2 = -p/3.
      const double r2 = std::cbrt(t_small);
      complex y2 = r2;
      double best = std::abs(y1 * y2 + p / 3.0);
      for (const complex w : {kOmega * r2, std::conj(kOmega) * r2}) {
        const double err = std::abs(y1 * w + p / 3.0);
        if (err < best) {
          best = err;
          y2 = w;
        }
      }
      const complex z1 = y1 + y2;
      const complex z2 = kOmega * y1 + std::conj(kOmega) * y2;
      const complex z3 = std::conj(kOmega) * y1 + kOmega * y2;
      return shifted(kind, {{complex(z1.real(), 0.0), 1}, {z2, 1}, {z3, 1}}, cc.b);
    }
    case RootKind::three_real_one_double: {
      const double y = std::cbrt(-q / 2.0);
      return shifted(kind, {{2.0 * y, 1}, {-y, 2}}, cc.b);
    }
    case RootKind::three_distinct_real: {
      // t = (-q + i sqrt(-delta)) / 2, |t|^(1/3) = sqrt(-p/3).
      const double delta = q * q + 4.0 * p * p * p / 27.0;
      const double theta = std::atan2(std::sqrt(std::max(0.0, -delta)), -q);
      const double r = std::sqrt(std::max(0.0, -p / 3.0));
      std::vector<Root> ys;
      for (int k = 0; k < 3; ++k)
        ys.push_back({2.0 * r * std::cos((theta + 2.0 * std::numbers::pi * k) / 3.0), 1});
      return shifted(kind, std::move(ys), cc.b);
    }
  }
  throw std::logic_error("unreachable root kind");
}

double max_scaled_residual(const CubicCoeffs& cc, const RootSet& rs) {
  double worst = 0.0;
  for (const auto& r : rs.roots) worst = std::max(worst, std::abs(cc(r.value)));
  return worst / cc.scale();
}

double mandelbric_attracting_root(double c) {
  if (!(c > 0.0) || c > kMandelbricBound)
    throw std::domain_error("c must lie in (0, 2/(3 sqrt 3)]");
  const double D = std::min(0.0, -4.0 + 27.0 * c * c);
  const double s3 = std::sqrt(3.0);
  const double theta = std::atan(std::sqrt(-D) / (-3.0 * c * s3)) + std::numbers::pi;
  return 2.0 / s3 * std::cos(theta / 3.0);
}

}  // namespace mbk::roots
