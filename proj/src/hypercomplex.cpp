#include "mbk/hypercomplex.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mbk {

namespace {

constexpr std::array<std::string_view, kUnitCount> kUnitNames = {
    "1", "i1", "i2", "i3", "i4", "j1", "j2", "j3"};

std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
      ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string_view unit_name(Unit u) { return kUnitNames[index_of(u)]; }

std::optional<Unit> parse_unit(std::string_view text) {
  if (text == "one") return Unit::one;
  for (std::size_t i = 0; i < kUnitCount; ++i)
    if (kUnitNames[i] == text) return unit_at(i);
  return std::nullopt;
}

std::string to_string(UnitSet s) {
  std::string out = "{";
  bool first = true;
  for (Unit u : kAllUnits) {
    if (!s.contains(u)) continue;
    if (!first) out += ",";
    out += unit_name(u);
    first = false;
  }
  return out + "}";
}

UnitSet Tricomplex::support(double threshold) const {
  UnitSet s;
  for (std::size_t i = 0; i < kUnitCount; ++i)
    if (std::abs(x_[i]) > threshold) s.insert(unit_at(i));
  return s;
}

Tricomplex multiply(const Tricomplex& a, const Tricomplex& b, const UnitTable& table) {
  Tricomplex r;
  for (std::size_t i = 0; i < kUnitCount; ++i) {
    for (std::size_t j = 0; j < kUnitCount; ++j) {
      const SignedUnit e = table[i][j];
      r[index_of(e.unit)] += e.sign * (a[i] * b[j]);
    }
  }
  return r;
}

Tricomplex operator*(const Tricomplex& a, const Tricomplex& b) {
  // Same summation order as multiply(); the constant table lets the compiler
  // resolve every destination index.
  std::array<double, kUnitCount> r{};
#pragma GCC unroll 8
  for (std::size_t i = 0; i < kUnitCount; ++i) {
#pragma GCC unroll 8
    for (std::size_t j = 0; j < kUnitCount; ++j) {
      const SignedUnit e = kUnitTable[i][j];
      const double prod = a.x_[i] * b.x_[j];
      if (e.sign > 0)
        r[index_of(e.unit)] += prod;
      else
        r[index_of(e.unit)] -= prod;
    }
  }
  return Tricomplex(r);
}

Tricomplex pow(const Tricomplex& a, unsigned m) {
  Tricomplex result(1.0);
  for (unsigned k = 0; k < m; ++k) result = result * a;
  return result;
}

double norm3_squared(const Tricomplex& a) {
  double s = 0.0;
  for (double v : a.coefficients()) s += v * v;
  return s;
}

double norm3(const Tricomplex& a) { return std::sqrt(norm3_squared(a)); }

std::string to_text(const Tricomplex& a) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < kUnitCount; ++i) {
    if (i) os << ' ';
    os << a[i];
  }
  return os.str();
}

Tricomplex parse_tricomplex(std::string_view text) {
  const auto fields = split_fields(text);
  if (fields.size() != kUnitCount)
    throw std::invalid_argument("tricomplex text needs 8 coefficients, got " +
                                std::to_string(fields.size()));
  Tricomplex t;
  for (std::size_t i = 0; i < kUnitCount; ++i) {
    const auto f = fields[i];
    const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), t[i]);
    if (ec != std::errc() || end != f.data() + f.size())
      throw std::invalid_argument("bad coefficient '" + std::string(f) + "'");
  }
  return t;
}

std::ostream& operator<<(std::ostream& os, const Tricomplex& a) { return os << to_text(a); }

Tricomplex Bicomplex::embed() const {
  Tricomplex t;
  for (std::size_t i = 0; i < 4; ++i) t[kBasis[i]] = z_[i];
  return t;
}

Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
  const auto z1 = a.z1(), z2 = a.z2(), w1 = b.z1(), w2 = b.z2();
  return Bicomplex(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1);
}

Bicomplex pow(const Bicomplex& a, unsigned m) {
  Bicomplex result(1.0);
  for (unsigned k = 0; k < m; ++k) result = result * a;
  return result;
}

double norm2_squared(const Bicomplex& a) {
  double s = 0.0;
  for (double v : a.coefficients()) s += v * v;
  return s;
}

double norm2(const Bicomplex& a) { return std::sqrt(norm2_squared(a)); }

ZetaPair split_i3(const Tricomplex& eta) {
  using U = Unit;
  return {Bicomplex({eta[U::one], eta[U::i1], eta[U::i2], eta[U::j1]}),
          Bicomplex({eta[U::i3], eta[U::j2], eta[U::j3], eta[U::i4]})};
}

Tricomplex join_i3(const ZetaPair& z) {
  using U = Unit;
  Tricomplex t;
  t[U::one] = z.zeta1[0];
  t[U::i1] = z.zeta1[1];
  t[U::i2] = z.zeta1[2];
  t[U::j1] = z.zeta1[3];
  t[U::i3] = z.zeta2[0];
  t[U::j2] = z.zeta2[1];
  t[U::j3] = z.zeta2[2];
  t[U::i4] = z.zeta2[3];
  return t;
}

IdempotentPair to_idempotent(const Tricomplex& eta) {
  const ZetaPair z = split_i3(eta);
  const Bicomplex w = z.zeta2.times_i2();
  return {z.zeta1 - w, z.zeta1 + w};
}

Tricomplex from_idempotent(const IdempotentPair& p) {
  const Bicomplex zeta1 = (p.u1 + p.u2) * 0.5;
  // zeta2 i2 = (u2 - u1)/2 and i2^{-1} = -i2.
  const Bicomplex zeta2 = -((p.u2 - p.u1) * 0.5).times_i2();
  return join_i3({zeta1, zeta2});
}

IdempotentPair operator+(const IdempotentPair& a, const IdempotentPair& b) {
  return {a.u1 + b.u1, a.u2 + b.u2};
}

IdempotentPair operator*(const IdempotentPair& a, const IdempotentPair& b) {
  return {a.u1 * b.u1, a.u2 * b.u2};
}

double idempotent_norm(const IdempotentPair& p) {
  return std::sqrt((norm2_squared(p.u1) + norm2_squared(p.u2)) / 2.0);
}

Discus::Discus(const Tricomplex& center, double r1, double r2)
    : center_(center), r1_(r1), r2_(r2) {
  if (!(r1 > 0.0) || !(r2 >= r1))
    throw std::invalid_argument("discus radii must satisfy r2 >= r1 > 0");
}

bool in_discus(const Tricomplex& eta, const Discus& d, bool closed) {
  const IdempotentPair e = to_idempotent(eta);
  const IdempotentPair a = to_idempotent(d.center());
  const double n1 = norm2(e.u1 - a.u1);
  const double n2 = norm2(e.u2 - a.u2);
  if (closed) return n1 <= d.r1() && n2 <= d.r2();
  return n1 < d.r1() && n2 < d.r2();
}

Hyperbolic diamond_pow(Hyperbolic a, unsigned m) {
  Hyperbolic r{1.0, 0.0};
  for (unsigned k = 0; k < m; ++k) r = diamond(r, a);
  return r;
}

namespace {
void require_hyperbolic_unit(Unit j) {
  if (j != Unit::j1 && j != Unit::j2 && j != Unit::j3)
    throw std::invalid_argument("hyperbolic unit must be j1, j2 or j3");
}
}  // namespace

Tricomplex embed(Hyperbolic h, Unit j) {
  require_hyperbolic_unit(j);
  Tricomplex t(h.u);
  t[j] = h.v;
  return t;
}

Hyperbolic hyperbolic_part(const Tricomplex& eta, Unit j) {
  require_hyperbolic_unit(j);
  return {eta[Unit::one], eta[j]};
}

SliceSpec::SliceSpec(Unit a, Unit b, Unit c) : units_{a, b, c} {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("slice units must be distinct");
}

std::array<Unit, 3> SliceSpec::canonical() const {
  auto s = units_;
  std::sort(s.begin(), s.end());
  return s;
}

std::string SliceSpec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += unit_name(units_[i]);
  }
  return out + ")";
}

SliceSpec parse_slice(std::string_view text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '(' && ch != ')') cleaned += ch;
  const auto fields = split_fields(cleaned);
  if (fields.size() != 3) throw std::invalid_argument("slice needs three units: '" + std::string(text) + "'");
  std::array<Unit, 3> units{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto u = parse_unit(fields[i]);
    if (!u) throw std::invalid_argument("unknown unit '" + std::string(fields[i]) + "'");
    units[i] = *u;
  }
  return SliceSpec(units);
}

Tricomplex embed_slice_point(const SliceSpec& s, const std::array<double, 3>& coords) {
  Tricomplex t;
  for (std::size_t i = 0; i < 3; ++i) t[s[i]] = coords[i];
  return t;
}

UnitSet power_support(UnitSet generators, unsigned exponent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  UnitSet out;
  for (int sample = 0; sample < 6; ++sample) {
    Tricomplex eta;
    for (Unit u : kAllUnits)
      if (generators.contains(u)) eta[u] = coef(rng);
    const Tricomplex q = pow(eta, exponent);
    out = out | q.support(1e-9 * std::max(1.0, norm3(q)));
  }
  return out;
}

bool powers_closed_in(UnitSet generators, UnitSet subspace, unsigned max_exponent,
                      std::uint64_t seed) {
  for (unsigned k = 1; k <= max_exponent; ++k)
    if (!power_support(generators, k, seed + k).subset_of(subspace)) return false;
  return true;
}

UnitSet pair_subspace(Unit k, Unit l) {
  return {Unit::one, k, l, unit_product(k, l).unit};
}

UnitSet triple_subspace(Unit k, Unit l, Unit m) {
  const SignedUnit klm = SignedUnit{1, k} * SignedUnit{1, l} * SignedUnit{1, m};
  return {k, l, m, klm.unit};
}

}  // namespace mbk
