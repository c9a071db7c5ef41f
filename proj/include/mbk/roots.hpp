#pragma once

// Monic real cubics x^3 + b x^2 + c x + d: reduction to y^3 + p y + q,
// discriminant classification and closed-form roots.

#include <cmath>
#include <complex>
#include <string_view>
#include <vector>

namespace mbk::roots {

struct CubicCoeffs {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double operator()(double x) const { return ((x + b) * x + c) * x + d; }
  std::complex<double> operator()(std::complex<double> x) const {
    return ((x + b) * x + c) * x + d;
  }
  double scale() const;
};

struct Depressed {
  double p = 0.0;
  double q = 0.0;
};

enum class RootKind { one_real_two_complex, three_real_one_double, three_distinct_real };

std::string_view to_string(RootKind k);

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

struct RootSet {
  RootKind kind = RootKind::one_real_two_complex;
  std::vector<Root> roots;
};

// y = x + b/3.
Depressed depressed_reduce(const CubicCoeffs& cc);

// D = 4c^3 + 27d^2 + 4db^3 - b^2c^2 - 18bcd.
double cubic_discriminant(const CubicCoeffs& cc);

// |D| at or below this value is treated as D = 0.
double discriminant_band(const Depressed& dp);

RootKind classify(const CubicCoeffs& cc);

RootSet cubic_roots(const CubicCoeffs& cc);

// max |P(root)| / scale over the set.
double max_scaled_residual(const CubicCoeffs& cc, const RootSet& rs);

// 2 / (3 sqrt 3): right end of the real cross-section for z^3 + c.
inline const double kMandelbricBound = 2.0 / (3.0 * std::sqrt(3.0));

// Root a in [1/sqrt3, 1) of x^3 - x + c for 0 < c <= 2/(3 sqrt 3), from the
// trigonometric form. Throws std::domain_error outside that range.
double mandelbric_attracting_root(double c);

}  // namespace mbk::roots
