#pragma once

// Arithmetic for the real hypercomplex tower used by the escape-time engine:
// complex (std::complex), hyperbolic, bicomplex M(2) and tricomplex M(3).
//
// Tricomplex coefficients are stored in the canonical order
//   (1, i1, i2, i3, i4, j1, j2, j3)
// with i1, i2, i3 the generators, i4 = i1 i2 i3, j1 = i1 i2, j2 = i1 i3,
// j3 = i2 i3. Bicomplex coefficients are (1, i1, i2, j1).

#include <array>
#include <complex>
#include <initializer_list>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mbk {

enum class Unit : std::uint8_t { one = 0, i1, i2, i3, i4, j1, j2, j3 };

inline constexpr std::size_t kUnitCount = 8;

inline constexpr std::array<Unit, kUnitCount> kAllUnits = {
    Unit::one, Unit::i1, Unit::i2, Unit::i3,
    Unit::i4,  Unit::j1, Unit::j2, Unit::j3};

constexpr std::size_t index_of(Unit u) { return static_cast<std::size_t>(u); }
constexpr Unit unit_at(std::size_t i) { return static_cast<Unit>(i); }

std::string_view unit_name(Unit u);
std::optional<Unit> parse_unit(std::string_view text);

struct SignedUnit {
  int sign = 1;
  Unit unit = Unit::one;

  friend constexpr bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

using UnitTable = std::array<std::array<SignedUnit, kUnitCount>, kUnitCount>;

// Products of tricomplex imaginary units, rows and columns in canonical order.
inline constexpr UnitTable kUnitTable = [] {
  using U = Unit;
  constexpr auto P = [](U u) { return SignedUnit{+1, u}; };
  constexpr auto N = [](U u) { return SignedUnit{-1, u}; };
  return UnitTable{{
      {P(U::one), P(U::i1), P(U::i2), P(U::i3), P(U::i4), P(U::j1), P(U::j2), P(U::j3)},
      {P(U::i1), N(U::one), P(U::j1), P(U::j2), N(U::j3), N(U::i2), N(U::i3), P(U::i4)},
      {P(U::i2), P(U::j1), N(U::one), P(U::j3), N(U::j2), N(U::i1), P(U::i4), N(U::i3)},
      {P(U::i3), P(U::j2), P(U::j3), N(U::one), N(U::j1), P(U::i4), N(U::i1), N(U::i2)},
      {P(U::i4), N(U::j3), N(U::j2), N(U::j1), N(U::one), P(U::i3), P(U::i2), P(U::i1)},
      {P(U::j1), N(U::i2), N(U::i1), P(U::i4), P(U::i3), P(U::one), N(U::j3), N(U::j2)},
      {P(U::j2), N(U::i3), P(U::i4), N(U::i1), P(U::i2), N(U::j3), P(U::one), N(U::j1)},
      {P(U::j3), P(U::i4), N(U::i3), N(U::i2), P(U::i1), N(U::j2), N(U::j1), P(U::one)},
  }};
}();

constexpr SignedUnit unit_product(Unit a, Unit b) {
  return kUnitTable[index_of(a)][index_of(b)];
}

constexpr SignedUnit operator*(SignedUnit a, SignedUnit b) {
  const SignedUnit p = unit_product(a.unit, b.unit);
  return {a.sign * b.sign * p.sign, p.unit};
}

// Set of units as a bit mask (bit k <=> unit_at(k)).
class UnitSet {
 public:
  constexpr UnitSet() = default;
  constexpr UnitSet(std::initializer_list<Unit> units) {
    for (Unit u : units) insert(u);
  }
  static constexpr UnitSet from_mask(std::uint8_t m) {
    UnitSet s;
    s.mask_ = m;
    return s;
  }

  constexpr void insert(Unit u) { mask_ |= std::uint8_t(1u << index_of(u)); }
  constexpr bool contains(Unit u) const { return (mask_ >> index_of(u)) & 1u; }
  constexpr std::uint8_t mask() const { return mask_; }
  constexpr int size() const { return __builtin_popcount(mask_); }
  constexpr bool subset_of(UnitSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr UnitSet operator|(UnitSet o) const { return from_mask(mask_ | o.mask_); }

  friend constexpr bool operator==(UnitSet, UnitSet) = default;

 private:
  std::uint8_t mask_ = 0;
};

std::string to_string(UnitSet s);

class Bicomplex;

class Tricomplex {
 public:
  constexpr Tricomplex() = default;
  constexpr explicit Tricomplex(const std::array<double, kUnitCount>& x) : x_(x) {}
  constexpr Tricomplex(double real) { x_[0] = real; }

  static constexpr Tricomplex unit(Unit u, double scale = 1.0) {
    Tricomplex t;
    t.x_[index_of(u)] = scale;
    return t;
  }

  constexpr double operator[](Unit u) const { return x_[index_of(u)]; }
  constexpr double& operator[](Unit u) { return x_[index_of(u)]; }
  constexpr double operator[](std::size_t i) const { return x_[i]; }
  constexpr double& operator[](std::size_t i) { return x_[i]; }
  constexpr const std::array<double, kUnitCount>& coefficients() const { return x_; }

  // Support of the nonzero coefficients.
  UnitSet support(double threshold = 0.0) const;

  Tricomplex& operator+=(const Tricomplex& o) {
    for (std::size_t i = 0; i < kUnitCount; ++i) x_[i] += o.x_[i];
    return *this;
  }
  Tricomplex& operator-=(const Tricomplex& o) {
    for (std::size_t i = 0; i < kUnitCount; ++i) x_[i] -= o.x_[i];
    return *this;
  }
  Tricomplex& operator*=(double s) {
    for (double& v : x_) v *= s;
    return *this;
  }

  friend Tricomplex operator+(Tricomplex a, const Tricomplex& b) { return a += b; }
  friend Tricomplex operator-(Tricomplex a, const Tricomplex& b) { return a -= b; }
  friend Tricomplex operator-(Tricomplex a) {
    for (double& v : a.x_) v = -v;
    return a;
  }
  friend Tricomplex operator*(Tricomplex a, double s) { return a *= s; }
  friend Tricomplex operator*(double s, Tricomplex a) { return a *= s; }
  friend Tricomplex operator*(const Tricomplex& a, const Tricomplex& b);

  friend bool operator==(const Tricomplex&, const Tricomplex&) = default;

 private:
  std::array<double, kUnitCount> x_{};
};

// Bilinear product through an arbitrary unit table. operator* uses kUnitTable.
Tricomplex multiply(const Tricomplex& a, const Tricomplex& b, const UnitTable& table);

Tricomplex pow(const Tricomplex& a, unsigned m);

double norm3_squared(const Tricomplex& a);
double norm3(const Tricomplex& a);

// Textual form: 8 whitespace-separated decimals in canonical order.
std::string to_text(const Tricomplex& a);
Tricomplex parse_tricomplex(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Tricomplex& a);

// Element of M(2) spanned by (1, i1, i2, j1). Multiplication goes through the
// pair form zeta = z1 + z2 i2 with z1, z2 in C(i1); it does not use kUnitTable.
class Bicomplex {
 public:
  using complex = std::complex<double>;

  constexpr Bicomplex() = default;
  constexpr explicit Bicomplex(const std::array<double, 4>& z) : z_(z) {}
  constexpr Bicomplex(double real) { z_[0] = real; }
  Bicomplex(complex z1, complex z2) : z_{z1.real(), z1.imag(), z2.real(), z2.imag()} {}

  // Basis (1, i1, i2, j1).
  static constexpr std::array<Unit, 4> kBasis = {Unit::one, Unit::i1, Unit::i2, Unit::j1};

  constexpr double operator[](std::size_t i) const { return z_[i]; }
  constexpr double& operator[](std::size_t i) { return z_[i]; }
  constexpr const std::array<double, 4>& coefficients() const { return z_; }

  complex z1() const { return {z_[0], z_[1]}; }
  complex z2() const { return {z_[2], z_[3]}; }

  // Idempotent components w.r.t. (1 + j1)/2 and (1 - j1)/2.
  complex first_idempotent() const { return z1() - z2() * complex(0, 1); }
  complex second_idempotent() const { return z1() + z2() * complex(0, 1); }

  Bicomplex times_i2() const { return Bicomplex(std::array<double, 4>{-z_[2], -z_[3], z_[0], z_[1]}); }

  Tricomplex embed() const;

  Bicomplex& operator+=(const Bicomplex& o) {
    for (std::size_t i = 0; i < 4; ++i) z_[i] += o.z_[i];
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    for (std::size_t i = 0; i < 4; ++i) z_[i] -= o.z_[i];
    return *this;
  }
  Bicomplex& operator*=(double s) {
    for (double& v : z_) v *= s;
    return *this;
  }
  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
  friend Bicomplex operator-(Bicomplex a) {
    for (double& v : a.z_) v = -v;
    return a;
  }
  friend Bicomplex operator*(Bicomplex a, double s) { return a *= s; }
  friend Bicomplex operator*(double s, Bicomplex a) { return a *= s; }
  friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b);

  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

 private:
  std::array<double, 4> z_{};
};

Bicomplex pow(const Bicomplex& a, unsigned m);
double norm2_squared(const Bicomplex& a);
double norm2(const Bicomplex& a);

// eta = zeta1 + zeta2 i3.
struct ZetaPair {
  Bicomplex zeta1;
  Bicomplex zeta2;
};
ZetaPair split_i3(const Tricomplex& eta);
Tricomplex join_i3(const ZetaPair& z);

// eta = u1 gamma + u2 gamma_bar, gamma = (1 + j3)/2.
struct IdempotentPair {
  Bicomplex u1;
  Bicomplex u2;
};

IdempotentPair to_idempotent(const Tricomplex& eta);
Tricomplex from_idempotent(const IdempotentPair& p);

IdempotentPair operator+(const IdempotentPair& a, const IdempotentPair& b);
IdempotentPair operator*(const IdempotentPair& a, const IdempotentPair& b);

// sqrt((|u1|^2 + |u2|^2) / 2), equal to norm3 of the recombined number.
double idempotent_norm(const IdempotentPair& p);

class Discus {
 public:
  Discus(const Tricomplex& center, double r1, double r2);

  const Tricomplex& center() const { return center_; }
  double r1() const { return r1_; }
  double r2() const { return r2_; }

 private:
  Tricomplex center_;
  double r1_;
  double r2_;
};

bool in_discus(const Tricomplex& eta, const Discus& d, bool closed);

// Hyperbolic number u + v j written as the column (u, v).
struct Hyperbolic {
  double u = 0.0;
  double v = 0.0;

  friend constexpr bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

// Hyperbolic product: (u, v) <> (x, y) = (ux + vy, vx + uy).
constexpr Hyperbolic diamond(Hyperbolic a, Hyperbolic b) {
  return {a.u * b.u + a.v * b.v, a.v * b.u + a.u * b.v};
}
// Componentwise product on R^2.
constexpr Hyperbolic star(Hyperbolic a, Hyperbolic b) { return {a.u * b.u, a.v * b.v}; }
// T = [[1, -1], [1, 1]], carrying <> onto *.
constexpr Hyperbolic hyp_T(Hyperbolic a) { return {a.u - a.v, a.u + a.v}; }
constexpr Hyperbolic hyp_T_inverse(Hyperbolic a) {
  return {(a.u + a.v) / 2.0, (a.v - a.u) / 2.0};
}

Hyperbolic diamond_pow(Hyperbolic a, unsigned m);

// u + v j for a hyperbolic unit j in {j1, j2, j3}.
Tricomplex embed(Hyperbolic h, Unit j);
Hyperbolic hyperbolic_part(const Tricomplex& eta, Unit j);

// Ordered triple of distinct units naming a 3D slice.
class SliceSpec {
 public:
  SliceSpec(Unit a, Unit b, Unit c);
  explicit SliceSpec(const std::array<Unit, 3>& units) : SliceSpec(units[0], units[1], units[2]) {}

  const std::array<Unit, 3>& units() const { return units_; }
  Unit operator[](std::size_t i) const { return units_[i]; }
  UnitSet unit_set() const { return {units_[0], units_[1], units_[2]}; }
  // Sorted triple, used as a set key.
  std::array<Unit, 3> canonical() const;
  bool same_set(const SliceSpec& other) const { return unit_set() == other.unit_set(); }

  std::string to_string() const;

  friend bool operator==(const SliceSpec&, const SliceSpec&) = default;

 private:
  std::array<Unit, 3> units_;
};

// Parses "1,j1,j2" (or space separated).
SliceSpec parse_slice(std::string_view text);

Tricomplex embed_slice_point(const SliceSpec& s, const std::array<double, 3>& coords);

// Units whose coefficients can be nonzero in eta^k for eta ranging over the
// span of `generators`, found by evaluating random elements.
UnitSet power_support(UnitSet generators, unsigned exponent, std::uint64_t seed = 7);

// True iff eta^k stays in span(subspace) for every eta in span(generators)
// and every k in [1, max_exponent].
bool powers_closed_in(UnitSet generators, UnitSet subspace, unsigned max_exponent,
                      std::uint64_t seed = 7);

// M(k, l) = span{1, k, l, kl}, closed under every power, and
// M(k, l, m) = span{k, l, m, klm}, closed under odd powers only.
UnitSet pair_subspace(Unit k, Unit l);
UnitSet triple_subspace(Unit k, Unit l, Unit m);

}  // namespace mbk
