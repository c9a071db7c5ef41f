#include "mbk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mbk/dynamics.hpp"
#include "mbk/oracles.hpp"
#include "mbk/roots.hpp"
#include "mbk/slices.hpp"

namespace mbk::verify {

namespace {

using report::Check;
using report::Report;
using report::format_double;
namespace dyn = mbk::dynamics;

// Worst residual over a sample, with a witness for the worst violation.
class Tally {
 public:
  Tally(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

  void add(double r, const std::function<std::string()>& describe) {
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    ++samples_;
    const bool bad = !(r <= tol_);
    if (bad) ++violations_;
    if (r > worst_ || samples_ == 1) {
      worst_ = r;
      if (bad) witness_ = describe();
    }
  }
  // Pass/fail samples where the residual is the number of failures.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++samples_;
    if (ok) return;
    ++violations_;
    worst_ = double(violations_);
    if (witness_.empty()) witness_ = describe();
  }

  Check finish(std::string note = {}) const {
    Check c;
    c.name = name_;
    c.passed = violations_ == 0 && samples_ > 0;
    c.max_residual = worst_;
    c.samples = samples_;
    c.witness = c.passed ? std::string{} : (witness_.empty() ? "no samples" : witness_);
    if (note.empty()) note = "tol=" + format_double(tol_);
    c.note = std::move(note);
    return c;
  }

 private:
  std::string name_;
  double tol_;
  double worst_ = 0.0;
  std::size_t samples_ = 0;
  std::size_t violations_ = 0;
  std::string witness_;
};

std::string unit_text(SignedUnit s) {
  return (s.sign < 0 ? "-" : "") + std::string(unit_name(s.unit));
}

Tricomplex random_tricomplex(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> d(-half_width, half_width);
  std::array<double, kUnitCount> x{};
  for (double& v : x) v = d(rng);
  return Tricomplex(x);
}

double rel_diff(const Tricomplex& got, const Tricomplex& want) {
  return norm3(got - want) / std::max(1.0, norm3(want));
}

Tricomplex table_pow(const Tricomplex& a, unsigned m, const UnitTable& t) {
  Tricomplex r(1.0);
  for (unsigned k = 0; k < m; ++k) r = multiply(r, a, t);
  return r;
}

std::string pair_text(const Tricomplex& a, const Tricomplex& b) {
  return "a=[" + to_text(a) + "] b=[" + to_text(b) + "]";
}

}  // namespace

// ---------------------------------------------------------------------------

Report algebra(std::uint64_t seed, const UnitTable& table) {
  Report rep{"algebra", {}};
  std::mt19937_64 rng(seed);
  constexpr double kRel = 1e-12;

  {
    Tally t("unit-table-generator-model", 0.0);
    for (Unit a : kAllUnits)
      for (Unit b : kAllUnits) {
        const SignedUnit got = table[index_of(a)][index_of(b)];
        const SignedUnit want = oracles::generator_unit_product(a, b);
        t.expect(got == want, [&] {
          return std::string(unit_name(a)) + "*" + std::string(unit_name(b)) + ": table=" +
                 unit_text(got) + " model=" + unit_text(want);
        });
      }
    rep.checks.push_back(t.finish("64 unit products"));
  }
  {
    Tally t("unit-table-commutative", 0.0);
    for (Unit a : kAllUnits)
      for (Unit b : kAllUnits)
        t.expect(table[index_of(a)][index_of(b)] == table[index_of(b)][index_of(a)], [&] {
          return std::string(unit_name(a)) + "*" + std::string(unit_name(b)) + " != " +
                 std::string(unit_name(b)) + "*" + std::string(unit_name(a));
        });
    rep.checks.push_back(t.finish("64 unit products"));
  }
  {
    Tally t("product-vs-zeta-pair-oracle", kRel);
    for (int s = 0; s < 10000; ++s) {
      const Tricomplex a = random_tricomplex(rng, 2.0), b = random_tricomplex(rng, 2.0);
      t.add(rel_diff(multiply(a, b, table), oracles::zeta_pair_multiply(a, b)),
            [&] { return pair_text(a, b); });
    }
    rep.checks.push_back(t.finish());
  }
  {
    Tally assoc("associativity", kRel), dist("distributivity", kRel), comm("commutativity", kRel),
        ident("multiplicative-identity", 0.0);
    for (int s = 0; s < 1000; ++s) {
      const Tricomplex a = random_tricomplex(rng, 2.0), b = random_tricomplex(rng, 2.0),
                       c = random_tricomplex(rng, 2.0);
      const auto w = [&] { return pair_text(a, b) + " c=[" + to_text(c) + "]"; };
      assoc.add(rel_diff(multiply(multiply(a, b, table), c, table),
                         multiply(a, multiply(b, c, table), table)),
                w);
      dist.add(rel_diff(multiply(a, b + c, table), multiply(a, b, table) + multiply(a, c, table)), w);
      comm.add(rel_diff(multiply(a, b, table), multiply(b, a, table)), w);
      ident.add(norm3(multiply(Tricomplex(1.0), a, table) - a), w);
    }
    for (Tally* t : {&assoc, &dist, &comm, &ident}) rep.checks.push_back(t->finish());
  }
  {
    Tally t("idempotent-homomorphism", kRel);
    for (int s = 0; s < 10000; ++s) {
      const Tricomplex a = random_tricomplex(rng, 2.0), b = random_tricomplex(rng, 2.0);
      const IdempotentPair want = to_idempotent(a) * to_idempotent(b);
      t.add(rel_diff(multiply(a, b, table), from_idempotent(want)), [&] { return pair_text(a, b); });
    }
    rep.checks.push_back(t.finish());
  }
  {
    Tally round("idempotent-round-trip", 1e-15), norm("idempotent-norm-identity", kRel);
    for (int s = 0; s < 10000; ++s) {
      const Tricomplex a = random_tricomplex(rng, 2.0);
      const auto w = [&] { return "eta=[" + to_text(a) + "]"; };
      round.add(rel_diff(from_idempotent(to_idempotent(a)), a), w);
      norm.add(std::abs(idempotent_norm(to_idempotent(a)) - norm3(a)) / std::max(1.0, norm3(a)), w);
    }
    rep.checks.push_back(round.finish());
    rep.checks.push_back(norm.finish());
  }
  {
    Tally t("power-vs-idempotent-powers", 1e-10);
    for (unsigned p = 2; p <= 6; ++p)
      for (int s = 0; s < 1000; ++s) {
        const Tricomplex a = random_tricomplex(rng, 1.5);
        const IdempotentPair e = to_idempotent(a);
        const Tricomplex want = from_idempotent({pow(e.u1, p), pow(e.u2, p)});
        t.add(rel_diff(table_pow(a, p, table), want),
              [&] { return "p=" + std::to_string(p) + " eta=[" + to_text(a) + "]"; });
      }
    rep.checks.push_back(t.finish());
  }
  {
    Tally hom("hyperbolic-T-homomorphism", kRel), emb("hyperbolic-embedding", kRel);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int s = 0; s < 10000; ++s) {
      const Hyperbolic a{d(rng), d(rng)}, b{d(rng), d(rng)};
      const auto w = [&] {
        return "a=(" + format_double(a.u) + "," + format_double(a.v) + ") b=(" + format_double(b.u) +
               "," + format_double(b.v) + ")";
      };
      const Hyperbolic l = hyp_T(diamond(a, b)), r = star(hyp_T(a), hyp_T(b));
      hom.add(std::hypot(l.u - r.u, l.v - r.v) / std::max(1.0, std::hypot(r.u, r.v)), w);
      for (Unit j : {Unit::j1, Unit::j2, Unit::j3})
        emb.add(rel_diff(multiply(embed(a, j), embed(b, j), table), embed(diamond(a, b), j)), w);
    }
    rep.checks.push_back(hom.finish());
    rep.checks.push_back(emb.finish());
  }
  {
    Tally t("pair-and-triple-subspace-closure", 0.0);
    const std::array<Unit, 4> is = {Unit::i1, Unit::i2, Unit::i3, Unit::i4};
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) {
        const UnitSet s = pair_subspace(is[a], is[b]);
        t.expect(powers_closed_in(s, s, 6), [&] { return "M(" + std::string(unit_name(is[a])) + "," +
                                                        std::string(unit_name(is[b])) + ")=" + to_string(s); });
        for (std::size_t c = b + 1; c < 4; ++c) {
          // Closed under odd powers only: eta^2 of imaginary units picks up 1 and j's.
          const UnitSet r = triple_subspace(is[a], is[b], is[c]);
          for (unsigned k = 1; k <= 6; ++k)
            t.expect(power_support(r, k).subset_of(r) == (k % 2 == 1),
                     [&] { return "triple " + to_string(r) + " exponent " + std::to_string(k); });
        }
      }
    rep.checks.push_back(t.finish("pairs: all powers up to 6; triples: odd powers only"));
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report roots(std::uint64_t seed) {
  Report rep{"roots", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  const auto text = [](const roots::CubicCoeffs& c) {
    return "b=" + format_double(c.b) + " c=" + format_double(c.c) + " d=" + format_double(c.d);
  };

  Tally disc("discriminant-consistency", 1e-9), kind("classification-vs-sign-change-oracle", 0.0),
      resid("root-residuals", 1e-9), mult("multiplicities-sum-to-3", 0.0), vieta_sum("vieta-sum", 1e-8),
      vieta_prod("vieta-product", 1e-8);
  for (int s = 0; s < 10000; ++s) {
    const roots::CubicCoeffs cc{coef(rng), coef(rng), coef(rng)};
    const auto w = [&] { return text(cc); };
    const double b = cc.b, c = cc.c, d = cc.d;
    const roots::Depressed dp = roots::depressed_reduce(cc);
    // Relative to the magnitude of the expanded terms, since D itself may cancel.
    const double mag = 4 * std::abs(c * c * c) + 27 * d * d + 4 * std::abs(d * b * b * b) +
                       b * b * c * c + 18 * std::abs(b * c * d);
    disc.add(std::abs(roots::cubic_discriminant(cc) - (27 * dp.q * dp.q + 4 * dp.p * dp.p * dp.p)) /
                 std::max(1.0, mag),
             w);

    const roots::RootSet rs = roots::cubic_roots(cc);
    kind.expect(rs.kind == oracles::sampled_root_kind(cc), [&] {
      return text(cc) + " solver=" + std::string(roots::to_string(rs.kind)) +
             " oracle=" + std::string(roots::to_string(oracles::sampled_root_kind(cc)));
    });
    resid.add(roots::max_scaled_residual(cc, rs), w);

    int total = 0;
    std::complex<double> sum = 0.0, prod = 1.0;
    double abs_sum = 0.0, abs_prod = 1.0;
    for (const auto& r : rs.roots) {
      total += r.multiplicity;
      for (int k = 0; k < r.multiplicity; ++k) {
        sum += r.value;
        prod *= r.value;
        abs_sum += std::abs(r.value);
        abs_prod *= std::abs(r.value);
      }
    }
    mult.expect(total == 3, w);
    vieta_sum.add(std::abs(sum + b) / std::max({1.0, std::abs(b), abs_sum}), w);
    vieta_prod.add(std::abs(prod + d) / std::max({1.0, std::abs(d), abs_prod}), w);
  }
  for (Tally* t : {&disc, &kind, &resid, &mult, &vieta_sum, &vieta_prod}) rep.checks.push_back(t->finish());

  {
    Tally t("anchor-cases", 1e-12);
    const double bound = roots::kMandelbricBound;
    struct Anchor {
      roots::CubicCoeffs cc;
      roots::RootKind kind;
      std::vector<std::complex<double>> roots;  // with multiplicity
    };
    const double h = std::sqrt(3.0) / 2.0, s3 = 1.0 / std::sqrt(3.0);
    const std::vector<Anchor> anchors = {
        {{0, 0, -1}, roots::RootKind::one_real_two_complex, {{1, 0}, {-0.5, h}, {-0.5, -h}}},
        {{0, -1, 0}, roots::RootKind::three_distinct_real, {{-1, 0}, {0, 0}, {1, 0}}},
        {{0, -1, bound}, roots::RootKind::three_real_one_double, {{-2 * s3, 0}, {s3, 0}, {s3, 0}}},
    };
    for (const Anchor& a : anchors) {
      const roots::RootSet rs = roots::cubic_roots(a.cc);
      t.expect(rs.kind == a.kind, [&] { return text(a.cc) + " kind=" + std::string(roots::to_string(rs.kind)); });
      std::vector<std::complex<double>> got;
      for (const auto& r : rs.roots)
        for (int k = 0; k < r.multiplicity; ++k) got.push_back(r.value);
      // Match each expected root to the nearest unused computed root.
      std::vector<bool> used(got.size(), false);
      for (const auto& want : a.roots) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t idx = 0;
        for (std::size_t k = 0; k < got.size(); ++k)
          if (!used[k] && std::abs(got[k] - want) < best) best = std::abs(got[k] - want), idx = k;
        if (idx < used.size()) used[idx] = true;
        // The double root is only determined to about sqrt(eps).
        const double tol = a.kind == roots::RootKind::three_real_one_double ? 1e-7 : 1e-12;
        t.add(best <= tol ? 0.0 : best, [&] { return text(a.cc) + " missing root near " +
                                                     format_double(want.real()) + "+" +
                                                     format_double(want.imag()) + "i"; });
      }
      t.expect(std::abs(roots::cubic_discriminant(a.cc) -
                        (a.kind == roots::RootKind::one_real_two_complex ? 27.0
                         : a.kind == roots::RootKind::three_distinct_real ? -4.0 : 0.0)) <= 1e-12,
               [&] { return text(a.cc) + " D=" + format_double(roots::cubic_discriminant(a.cc)); });
    }
    rep.checks.push_back(t.finish("D = 27, -4, 0"));
  }
  {
    Tally t("mandelbric-attracting-root", 1e-9);
    const double lo = 1.0 / std::sqrt(3.0);
    for (int k = 1; k <= 1000; ++k) {
      const double c = roots::kMandelbricBound * k / 1000.0;
      const double a = roots::mandelbric_attracting_root(c);
      const double out_of_range = (a >= lo - 1e-7 && a < 1.0) ? 0.0 : 1.0;
      t.add(std::abs(a * a * a - a + c) + out_of_range,
            [&] { return "c=" + format_double(c) + " a=" + format_double(a); });
    }
    const double a0 = roots::mandelbric_attracting_root(1e-9);
    t.add(std::abs(a0 - 1.0) <= 1e-8 ? 0.0 : std::abs(a0 - 1.0),
          [&] { return "c=1e-9 a=" + format_double(a0); });
    const double ab = roots::mandelbric_attracting_root(roots::kMandelbricBound);
    t.add(std::abs(ab - lo) <= 1e-7 ? 0.0 : std::abs(ab - lo),
          [&] { return "c=2/(3sqrt3) a=" + format_double(ab); });
    rep.checks.push_back(t.finish());
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::string complex_text(std::complex<double> c) {
  return "c=" + format_double(c.real()) + (c.imag() < 0 ? "" : "+") + format_double(c.imag()) + "i";
}

// |c|(|c|^(p-1) - 1)^(m-1) <= |Q^m(0)| for |c|^(p-1) > 2, compared in logs.
void growth_lower_bound(Tally& t, int p, int n, std::mt19937_64& rng) {
  const double L = dyn::escape_bound(p);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const dyn::IterationParams wide{p, 400, dyn::kOverflowGuard};
  for (int s = 0; s < n; ++s) {
    // Radius in (L, 2L].
    const double r = std::max(L * (2.0 - u(rng)), std::nextafter(L, 3.0));
    const std::complex<double> c = std::polar(r, 2.0 * std::numbers::pi * u(rng));
    const double rc = std::abs(c);
    const double log_base = std::log(std::pow(rc, p - 1) - 1.0);
    const auto orbit = dyn::complex_orbit(c, wide);
    double worst = 0.0;
    for (std::size_t m = 1; m <= orbit.size(); ++m) {
      const double bound = std::log(rc) + double(m - 1) * log_base;
      const double got = std::log(std::abs(orbit[m - 1]));
      worst = std::max(worst, bound - got - 1e-9 * (1.0 + std::abs(bound)));
    }
    const bool escaped_first = dyn::iterate_complex(c, dyn::IterationParams::for_degree(p)).escaped;
    t.add(escaped_first ? std::max(0.0, worst) : 1.0,
          [&] { return "p=" + std::to_string(p) + " " + complex_text(c); });
  }
}

}  // namespace

Report dynamics(std::uint64_t seed) {
  Report rep{"dynamics", {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  {
    Tally t("escape-bound-and-growth", 0.0);
    for (int p = 2; p <= 6; ++p) growth_lower_bound(t, p, 100, rng);
    rep.checks.push_back(t.finish("p=2..6, |c| > 2^(1/(p-1)), log slack 1e-9"));
  }
  {
    // Once |Q^n| = L + delta with |c| <= L, |Q^(n+m)| >= L + (2p)^m delta.
    Tally t("divergence-amplification", 0.0);
    for (int p = 2; p <= 6; ++p) {
      const double L = dyn::escape_bound(p);
      int found = 0;
      for (int tries = 0; tries < 20000 && found < 100; ++tries) {
        const std::complex<double> c = std::polar(L * std::sqrt(u01(rng)), 2.0 * std::numbers::pi * u01(rng));
        const auto orbit = dyn::complex_orbit(c, {p, 400, dyn::kOverflowGuard});
        std::size_t n = 0;
        while (n < orbit.size() && std::abs(orbit[n]) <= L) ++n;
        if (n >= orbit.size()) continue;
        ++found;
        const double delta = std::abs(orbit[n]) - L;
        double worst = 0.0;
        double grow = delta;
        for (std::size_t m = n + 1; m < orbit.size(); ++m) {
          grow *= 2.0 * p;
          if (!std::isfinite(grow) || L + grow > 1e90) break;
          const double want = L + grow;
          worst = std::max(worst, (want - std::abs(orbit[m])) / want - 1e-9);
        }
        t.add(std::max(0.0, worst), [&] { return "p=" + std::to_string(p) + " " + complex_text(c); });
      }
    }
    rep.checks.push_back(t.finish("relative slack 1e-9"));
  }
  {
    Tally t2("real-extent-p2", 1e-3), t3("real-extent-p3", 1e-3);
    for (auto [p, tally] : {std::pair{2, &t2}, std::pair{3, &t3}}) {
      const auto e = dyn::real_axis_extent(p, dyn::IterationParams::for_degree(p, dyn::kBoundaryMaxIter), 1e-4);
      const dyn::Interval cf = dyn::closed_form_real_extent(p);
      tally->add(std::max(std::abs(e.lo() - cf.lo), std::abs(e.hi() - cf.hi)), [&] {
        return "measured=[" + format_double(e.lo()) + "," + format_double(e.hi()) + "]";
      });
    }
    rep.checks.push_back(t2.finish("M=2000 tol=1e-4, expected [-2,0.25]"));
    rep.checks.push_back(t3.finish("M=2000 tol=1e-4, expected +-2/(3sqrt3)"));
  }
  for (int p = 4; p <= 6; ++p) {
    Tally t("real-extent-conjecture-p" + std::to_string(p), 1e-3);
    const auto e = dyn::real_axis_extent(p, dyn::IterationParams::for_degree(p, dyn::kBoundaryMaxIter), 1e-4);
    const dyn::Interval cf = dyn::closed_form_real_extent(p);
    const double err = std::max(std::abs(e.lo() - cf.lo), std::abs(e.hi() - cf.hi));
    t.add(err, [&] { return "measured=[" + format_double(e.lo()) + "," + format_double(e.hi()) + "]"; });
    rep.checks.push_back(t.finish(std::string(err <= 1e-3 ? "conjecture consistent" : "conjecture inconsistent") +
                                  ", not a theorem; measured=[" + format_double(e.lo()) + "," +
                                  format_double(e.hi()) + "] formula=[" + format_double(cf.lo) + "," +
                                  format_double(cf.hi) + "]"));
  }
  {
    Tally t("cubic-symmetries", 0.0);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    const auto params = dyn::IterationParams::for_degree(3);
    for (int s = 0; s < 10000; ++s) {
      const std::complex<double> c(d(rng), d(rng));
      const auto r = dyn::iterate_complex(c, params);
      t.expect(r == dyn::iterate_complex(std::conj(c), params) && r == dyn::iterate_complex(-c, params) &&
                   r == dyn::iterate_complex(-std::conj(c), params),
               [&] { return complex_text(c); });
    }
    rep.checks.push_back(t.finish("conj, negation, -conj; exact"));
  }
  {
    Tally t("monotone-real-orbits", 0.0);
    for (int p = 2; p <= 6; ++p) {
      const double L = dyn::escape_bound(p);
      for (int s = 0; s < 200; ++s) {
        const bool negative = p % 2 == 1 && s % 2 == 1;
        const double c = (negative ? -1.0 : 1.0) * L * (1.0 - u01(rng));
        if (c == 0.0) continue;
        const auto orbit = dyn::complex_orbit(c, dyn::IterationParams::for_degree(p));
        bool fixed = false, ok = true;
        for (std::size_t m = 1; m < orbit.size() && ok; ++m) {
          const double step = (orbit[m].real() - orbit[m - 1].real()) * (negative ? -1.0 : 1.0);
          // Strict until the float orbit lands on its fixed point, constant after.
          if (fixed) ok = step == 0.0;
          else if (step == 0.0) fixed = true;
          else ok = step > 0.0;
        }
        t.expect(ok, [&] { return "p=" + std::to_string(p) + " c=" + format_double(c); });
      }
    }
    rep.checks.push_back(t.finish("p=2..6; c<0 only for odd p"));
  }
  {
    Tally agree("hyperbolic-direct-vs-decomposed", 0.0), exact("hyperbolic-T-orbit-integers", 0.0),
        close("hyperbolic-T-orbit-reals", 1e-12);
    std::uniform_real_distribution<double> d(-0.5, 0.5);
    const auto params = dyn::IterationParams::for_degree(3);
    for (int s = 0; s < 10000; ++s) {
      const Hyperbolic c{d(rng), d(rng)};
      const auto x = dyn::iterate_hyperbolic(c, params), y = dyn::iterate_hyperbolic_direct(c, params);
      agree.expect(x.escaped == y.escaped && x.iterations == y.iterations, [&] {
        return "c=(" + format_double(c.u) + "," + format_double(c.v) + ")";
      });
    }
    const auto orbit_gap = [](Hyperbolic c, int p, int steps) {
      Hyperbolic z{0, 0};
      double x = 0, y = 0, worst = 0;
      for (int m = 0; m < steps; ++m) {
        const Hyperbolic w = diamond_pow(z, unsigned(p));
        z = {w.u + c.u, w.v + c.v};
        x = std::pow(x, p) + (c.u - c.v);
        y = std::pow(y, p) + (c.u + c.v);
        const Hyperbolic t = hyp_T(z);
        worst = std::max(worst, std::max(std::abs(t.u - x), std::abs(t.v - y)) /
                                    std::max(1.0, std::max(std::abs(x), std::abs(y))));
      }
      return worst;
    };
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int p = 2; p <= 3; ++p)
          exact.add(orbit_gap({double(a), double(b)}, p, 4),
                    [&] { return "c=(" + std::to_string(a) + "," + std::to_string(b) + ")"; });
    for (int s = 0; s < 10000; ++s) {
      const double a = d(rng) * 0.7, b = d(rng) * 0.7;
      if (!dyn::member_hyperbric_analytic(a, b)) continue;
      close.add(orbit_gap({a, b}, 3, 8), [&] { return "c=(" + format_double(a) + "," + format_double(b) + ")"; });
    }
    rep.checks.push_back(agree.finish("p=3 M=1000, escaped and iterations"));
    rep.checks.push_back(exact.finish("4 iterates, p=2,3"));
    rep.checks.push_back(close.finish());
  }
  {
    Tally t("hyperbric-square", 0.0);
    std::uniform_real_distribution<double> d(-0.5, 0.5);
    const auto params = dyn::IterationParams::for_degree(3, dyn::kBoundaryMaxIter);
    std::size_t banded = 0;
    for (int s = 0; s < 10000; ++s) {
      const double a = d(rng), b = d(rng);
      if (std::abs(std::abs(a) + std::abs(b) - roots::kMandelbricBound) <= 1e-2) {
        ++banded;
        continue;
      }
      t.expect(dyn::member_hyperbrot({a, b}, params) == dyn::member_hyperbric_analytic(a, b),
               [&] { return "c=(" + format_double(a) + "," + format_double(b) + ")"; });
    }
    rep.checks.push_back(t.finish("M=2000; excluded " + std::to_string(banded) + " points within l1 1e-2 of the boundary"));
  }
  for (int p = 2; p <= 3; ++p) {
    Tally t("tricomplex-modes-agree-p" + std::to_string(p), 0.0);
    const auto params = dyn::IterationParams::for_degree(p);
    for (int s = 0; s < 10000; ++s) {
      const Tricomplex c = random_tricomplex(rng, 1.5);
      const auto x = dyn::iterate_tricomplex(c, params, dyn::TricomplexMode::direct);
      const auto y = dyn::iterate_tricomplex(c, params, dyn::TricomplexMode::idempotent);
      t.expect(x.escaped == y.escaped && x.iterations == y.iterations,
               [&] { return "c=[" + to_text(c) + "]"; });
    }
    rep.checks.push_back(t.finish("escaped flag and iteration count"));
  }
  {
    Tally prod("tricomplex-cartesian-product", 0.0), discus("discus-bound", 0.0),
        chain("bicomplex-inclusion-chain", 0.0), line("tricomplex-real-line", 0.0);
    const auto params = dyn::IterationParams::for_degree(3);
    const double L = dyn::escape_bound(3);
    const Discus D(Tricomplex{}, L, L);
    std::size_t members = 0;
    for (int s = 0; s < 10000; ++s) {
      const Tricomplex c = random_tricomplex(rng, s % 2 ? 0.5 : 1.0);
      const IdempotentPair e = to_idempotent(c);
      const bool m3 = dyn::member_tricomplex(c, params);
      prod.expect(m3 == (dyn::member_bicomplex(e.u1, params) && dyn::member_bicomplex(e.u2, params)),
                  [&] { return "c=[" + to_text(c) + "]"; });
      if (m3) {
        ++members;
        discus.expect(in_discus(c, D, true), [&] { return "c=[" + to_text(c) + "]"; });
      }
      Bicomplex b(std::array<double, 4>{c[0], c[1], c[2], c[5]});
      if (dyn::member_bicomplex(b, params)) {
        chain.expect(std::abs(b.first_idempotent()) <= L && std::abs(b.second_idempotent()) <= L &&
                         norm2(b) <= L,
                     [&] { return "c=[" + to_text(b.embed()) + "]"; });
      }
    }
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    for (int s = 0; s < 1000; ++s) {
      const double x = d(rng);
      const auto a = dyn::iterate_tricomplex(Tricomplex(x), params), b = dyn::iterate_complex(x, params);
      line.expect(a.escaped == b.escaped && a.iterations == b.iterations,
                  [&] { return "c=" + format_double(x); });
    }
    rep.checks.push_back(prod.finish("p=3 M=1000"));
    rep.checks.push_back(discus.finish(std::to_string(members) + " members checked"));
    rep.checks.push_back(chain.finish());
    rep.checks.push_back(line.finish("real c against the complex engine"));
  }
  {
    Tally uni("perplexbric-union-vs-l1", 0.0), esc("perplexbric-escape-vs-l1", 0.0);
    std::uniform_real_distribution<double> d(-0.5, 0.5);
    for (int s = 0; s < 10000; ++s) {
      const double a = d(rng), b = d(rng), c = d(rng);
      uni.expect(oracles::perplexbric_union_member(a, b, c) == dyn::member_perplexbric_analytic(a, b, c),
                 [&] { return "c=(" + format_double(a) + "," + format_double(b) + "," + format_double(c) + ")"; });
    }
    const auto params = dyn::IterationParams::for_degree(3, dyn::kBoundaryMaxIter);
    std::size_t banded = 0;
    for (int s = 0; s < 3000; ++s) {
      const double a = d(rng), b = d(rng), c = d(rng);
      if (std::abs(std::abs(a) + std::abs(b) + std::abs(c) - roots::kMandelbricBound) <= 1e-2) {
        ++banded;
        continue;
      }
      Tricomplex t(a);
      t[Unit::j1] = b;
      t[Unit::j2] = c;
      esc.expect(dyn::member_tricomplex(t, params) == dyn::member_perplexbric_analytic(a, b, c),
                 [&] { return "c=(" + format_double(a) + "," + format_double(b) + "," + format_double(c) + ")"; });
    }
    rep.checks.push_back(uni.finish());
    rep.checks.push_back(esc.finish("M=2000; excluded " + std::to_string(banded) + " points in the 1e-2 band"));
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report slices(std::uint64_t seed) {
  Report rep{"slices", {}};
  namespace sl = mbk::slices;
  constexpr int kSamples = 10000;

  const auto all = sl::enumerate_slices();
  {
    Tally t("enumeration", 0.0);
    t.expect(all.size() == 56, [&] { return "count=" + std::to_string(all.size()); });
    for (std::size_t k = 1; k < all.size(); ++k)
      t.expect(all[k - 1].canonical() < all[k].canonical(), [&] { return all[k].to_string(); });
    rep.checks.push_back(t.finish("56 sorted triples"));
  }
  {
    Tally t("dynamical-subspaces", 0.0);
    for (const SliceSpec& s : all) {
      const UnitSet d = sl::dynamical_subspace(s, 3);
      const bool has_one = s.unit_set().contains(Unit::one);
      const UnitSet want = has_one ? pair_subspace(s[1], s[2]) : triple_subspace(s[0], s[1], s[2]);
      t.expect(d == want && (d.size() == 4),
               [&] { return s.to_string() + " got " + to_string(d) + " want " + to_string(want); });
    }
    rep.checks.push_back(t.finish("p=3"));
  }

  const auto maps = sl::conjugacy_catalog(3);
  {
    Tally maps_t("catalog-conjugacies", sl::kConjugacyTolerance),
        inv_t("catalog-inverses", sl::kConjugacyTolerance),
        comp_t("catalog-compositions", sl::kConjugacyTolerance);
    std::uint64_t k = seed;
    const auto run = [&](Tally& t, const sl::ConjugacyMap& m) {
      const auto r = sl::verify_conjugacy(m, 3, kSamples, sl::kConjugacyTolerance, ++k);
      t.add(r.max_residual, [&] {
        std::string w = r.label;
        if (r.witness) w += " eta=[" + to_text(r.witness->eta) + "] c=[" + to_text(r.witness->c) + "]";
        return w;
      });
    };
    for (const auto& m : maps) {
      run(maps_t, m);
      run(inv_t, m.inverse());
    }
    std::size_t compositions = 0;
    for (const auto& a : maps)
      for (const auto& b : maps)
        if (a.target().same_set(b.source()) && compositions < 40) {
          ++compositions;
          run(comp_t, a.then(b));
        }
    for (const auto& b : maps)
      for (const auto& a : maps)
        if (a.source().same_set(b.source()) && !a.target().same_set(b.target()) && compositions < 80) {
          ++compositions;
          run(comp_t, a.inverse().then(b));
          break;
        }
    rep.checks.push_back(maps_t.finish(std::to_string(maps.size()) + " maps x " + std::to_string(kSamples) + " samples"));
    rep.checks.push_back(inv_t.finish());
    rep.checks.push_back(comp_t.finish(std::to_string(compositions) + " compositions"));
  }
  {
    Tally t("principal-classes", 0.0);
    const auto cl = sl::classify_principal(3, 2000, seed);
    const std::vector<std::pair<std::string, std::size_t>> want = {
        {"Tetrabric", 24}, {"Perplexbric", 4}, {"Hourglassbric", 24}, {"Metabric", 4}};
    t.expect(cl.classes.size() == 4, [&] { return "classes=" + std::to_string(cl.classes.size()); });
    for (std::size_t i = 0; i < want.size() && i < cl.classes.size(); ++i)
      t.expect(cl.classes[i].name == want[i].first && cl.classes[i].members.size() == want[i].second, [&] {
        return cl.classes[i].name + " size " + std::to_string(cl.classes[i].members.size());
      });
    std::string note = "classes=" + std::to_string(cl.classes.size());
    for (const auto& c : cl.classes)
      note += " " + c.name + c.representative.to_string() + ":" + std::to_string(c.members.size());
    rep.checks.push_back(t.finish(note));
  }
  {
    Tally sym("tetrabric-voxel-symmetry", 0.0), prune("discus-pruning-sound", 0.0),
        io("mbv1-round-trip", 0.0);
    const SliceSpec tetra(Unit::one, Unit::i1, Unit::i2);
    const sl::Window3 w{{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}};
    const auto params = dyn::IterationParams::for_degree(3, 200);
    sl::SampleOptions with, without;
    without.prune_outside_discus = false;
    const auto g = sl::sample_slice(tetra, w, {24, 24, 24}, params, with);
    const auto h = sl::sample_slice(tetra, w, {24, 24, 24}, params, without);
    const std::size_t n = 24;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto v = g.cells[g.index(i, j, k)];
          const auto where = [&] { return "cell " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k); };
          sym.expect(v == g.cells[g.index(i, n - 1 - j, k)] && v == g.cells[g.index(i, j, n - 1 - k)] &&
                         v == g.cells[g.index(n - 1 - i, n - 1 - j, n - 1 - k)],
                     where);
          prune.expect(g.is_member(g.index(i, j, k)) == h.is_member(h.index(i, j, k)), where);
        }
    std::stringstream buf;
    sl::write_mbv1(buf, g);
    const auto back = sl::read_mbv1(buf);
    io.expect(back.cells == g.cells && back.dims == g.dims && back.origin == g.origin &&
                  back.spacing == g.spacing && back.max_iter == g.max_iter,
              [] { return "grid differs after read"; });
    rep.checks.push_back(sym.finish("24^3 over [-1.5,1.5]^3, M=200; i1, i2 and full negation"));
    rep.checks.push_back(prune.finish("members with and without pruning"));
    rep.checks.push_back(io.finish());
  }
  return rep;
}

Report run_suite(std::string_view suite, std::uint64_t seed, const UnitTable& table) {
  if (suite == "algebra") return algebra(seed, table);
  if (suite == "roots") return roots(seed);
  if (suite == "dynamics") return dynamics(seed);
  if (suite == "slices") return slices(seed);
  if (suite == "all") {
    Report all{"all", {}};
    all.append(algebra(seed, table));
    all.append(roots(seed));
    all.append(dynamics(seed));
    all.append(slices(seed));
    return all;
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "' (algebra|roots|dynamics|slices|all)");
}

}  // namespace mbk::verify
