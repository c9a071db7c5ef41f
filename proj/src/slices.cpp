#include "mbk/slices.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mbk/parallel.hpp"
#include "mbk/union_find.hpp"

namespace mbk::slices {

std::vector<SliceSpec> enumerate_slices() {
  std::vector<SliceSpec> out;
  for (std::size_t a = 0; a < kUnitCount; ++a)
    for (std::size_t b = a + 1; b < kUnitCount; ++b)
      for (std::size_t c = b + 1; c < kUnitCount; ++c)
        out.emplace_back(unit_at(a), unit_at(b), unit_at(c));
  return out;
}

UnitSet dynamical_subspace(const SliceSpec& spec, int p) {
  if (p < 2) throw std::invalid_argument("degree p must be >= 2");
  const UnitSet base = spec.unit_set();
  UnitSet s = base;
  for (;;) {
    const UnitSet next = base | power_support(s, static_cast<unsigned>(p));
    if ((next | s) == s) return s;
    s = s | next;
  }
}

// ---------------------------------------------------------------------------
// ConjugacyMap

namespace {

template <std::size_t N>
UnitSet froms(const std::array<SignedImage, N>& m) {
  UnitSet s;
  for (const auto& e : m) s.insert(e.from);
  return s;
}

template <std::size_t N>
UnitSet tos(const std::array<SignedImage, N>& m) {
  UnitSet s;
  for (const auto& e : m) s.insert(e.to);
  return s;
}

template <std::size_t N>
void require_bijective(const std::array<SignedImage, N>& m, const char* what) {
  if (froms(m).size() != int(N) || tos(m).size() != int(N))
    throw std::invalid_argument(std::string(what) + " must be a signed permutation of distinct units");
  for (const auto& e : m)
    if (e.sign != 1 && e.sign != -1)
      throw std::invalid_argument(std::string(what) + " signs must be +1 or -1");
}

template <std::size_t N>
std::array<SignedImage, N> inverted(std::array<SignedImage, N> m) {
  for (auto& e : m) std::swap(e.from, e.to);
  std::sort(m.begin(), m.end(), [](const SignedImage& a, const SignedImage& b) {
    return index_of(a.from) < index_of(b.from);
  });
  return m;
}

template <std::size_t N>
const SignedImage& entry_from(const std::array<SignedImage, N>& m, Unit u) {
  for (const auto& e : m)
    if (e.from == u) return e;
  throw std::invalid_argument("unit " + std::string(unit_name(u)) + " not in map domain");
}

template <std::size_t N>
std::array<SignedImage, N> composed(const std::array<SignedImage, N>& first,
                                    const std::array<SignedImage, N>& second) {
  std::array<SignedImage, N> out = first;
  for (auto& e : out) {
    const SignedImage& s = entry_from(second, e.to);
    e.to = s.to;
    e.sign *= s.sign;
  }
  return out;
}

}  // namespace

ConjugacyMap::ConjugacyMap(SliceSpec source, SliceSpec target, std::array<SignedImage, 4> phi,
                           std::array<SignedImage, 3> c_map, std::string label)
    : source_(source), target_(target), phi_(phi), c_map_(c_map), label_(std::move(label)) {
  require_bijective(phi_, "phi");
  require_bijective(c_map_, "c_map");
  if (froms(c_map_) != source_.unit_set() || tos(c_map_) != target_.unit_set())
    throw std::invalid_argument("c_map must carry the source slice units onto the target slice units");
  if (!source_.unit_set().subset_of(domain()) || !target_.unit_set().subset_of(range()))
    throw std::invalid_argument("phi must act on subspaces containing the slices");
}

ConjugacyMap ConjugacyMap::identity(const SliceSpec& spec, int p) {
  const UnitSet d = dynamical_subspace(spec, p);
  if (d.size() != 4)
    throw std::invalid_argument("dynamical subspace of " + spec.to_string() + " is not 4-dimensional");
  std::array<SignedImage, 4> phi{};
  std::size_t n = 0;
  for (Unit u : kAllUnits)
    if (d.contains(u)) phi[n++] = {u, u, 1};
  std::array<SignedImage, 3> c{};
  for (std::size_t i = 0; i < 3; ++i) c[i] = {spec[i], spec[i], 1};
  return ConjugacyMap(spec, spec, phi, c, "identity " + spec.to_string());
}

UnitSet ConjugacyMap::domain() const { return froms(phi_); }
UnitSet ConjugacyMap::range() const { return tos(phi_); }

Tricomplex ConjugacyMap::apply(const Tricomplex& x, double* outside_norm_sq) const {
  Tricomplex y;
  for (const auto& e : phi_) y[e.to] = e.sign * x[e.from];
  if (outside_norm_sq) {
    const UnitSet d = domain();
    double s = 0.0;
    for (Unit u : kAllUnits)
      if (!d.contains(u)) s += x[u] * x[u];
    *outside_norm_sq = s;
  }
  return y;
}

Tricomplex ConjugacyMap::apply_inverse(const Tricomplex& y, double* outside_norm_sq) const {
  return inverse().apply(y, outside_norm_sq);
}

Tricomplex ConjugacyMap::map_parameter(const Tricomplex& c) const {
  Tricomplex out;
  for (const auto& e : c_map_) out[e.to] = e.sign * c[e.from];
  return out;
}

ConjugacyMap ConjugacyMap::inverse() const {
  return ConjugacyMap(target_, source_, inverted(phi_), inverted(c_map_), "inverse of " + label_);
}

ConjugacyMap ConjugacyMap::then(const ConjugacyMap& next) const {
  if (!target_.same_set(next.source_))
    throw std::invalid_argument("cannot compose: " + target_.to_string() + " vs " +
                                next.source_.to_string());
  if (range() != next.domain())
    throw std::invalid_argument("cannot compose: mismatched subspaces");
  return ConjugacyMap(source_, next.target_, composed(phi_, next.phi_),
                      composed(c_map_, next.c_map_), label_ + " ; " + next.label_);
}

ConjugacyMap ConjugacyMap::with_flipped_sign(std::size_t phi_entry) const {
  auto phi = phi_;
  phi.at(phi_entry).sign = -phi.at(phi_entry).sign;
  return ConjugacyMap(source_, target_, phi, c_map_, label_ + " (sign flipped)");
}

ConjugacyReport verify_conjugacy(const ConjugacyMap& map, int p, int n_samples, double tol,
                                 std::uint64_t seed) {
  if (p < 2) throw std::invalid_argument("degree p must be >= 2");
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const UnitSet range = map.range();
  const ConjugacyMap inv = map.inverse();
  const unsigned pu = static_cast<unsigned>(p);

  ConjugacyReport report;
  report.label = map.label();
  report.samples = n_samples;
  ConjugacyWitness worst;
  for (int s = 0; s < n_samples; ++s) {
    Tricomplex eta, c;
    for (Unit u : kAllUnits)
      if (range.contains(u)) eta[u] = coef(rng);
    for (Unit u : map.source().units()) c[u] = coef(rng);

    double outside = 0.0;
    const Tricomplex lhs = map.apply(pow(inv.apply(eta), pu) + c, &outside);
    const Tricomplex rhs = pow(eta, pu) + map.map_parameter(c);
    const double r = std::sqrt(norm3_squared(lhs - rhs) + outside);
    if (!(r <= worst.residual) || s == 0) worst = {eta, c, r};
  }
  report.max_residual = worst.residual;
  report.passed = worst.residual <= tol;
  if (!report.passed) report.witness = worst;
  return report;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

using GlobalMap = std::array<SignedUnit, kUnitCount>;

constexpr std::uint8_t generator_mask(Unit u) {
  constexpr std::array<std::uint8_t, kUnitCount> masks = {0b000, 0b001, 0b010, 0b100,
                                                          0b111, 0b011, 0b101, 0b110};
  return masks[index_of(u)];
}

// Unit automorphisms determined by signed images of i1, i2, i3.
std::vector<GlobalMap> unit_automorphisms() {
  const std::array<Unit, 4> i_units = {Unit::i1, Unit::i2, Unit::i3, Unit::i4};
  std::vector<GlobalMap> out;
  for (Unit a : i_units)
    for (Unit b : i_units)
      for (Unit c : i_units) {
        if (a == b || a == c || b == c) continue;
        for (int signs = 0; signs < 8; ++signs) {
          const std::array<SignedUnit, 3> g = {SignedUnit{signs & 1 ? -1 : 1, a},
                                               SignedUnit{signs & 2 ? -1 : 1, b},
                                               SignedUnit{signs & 4 ? -1 : 1, c}};
          GlobalMap m{};
          for (Unit u : kAllUnits) {
            SignedUnit r{1, Unit::one};
            const std::uint8_t mask = generator_mask(u);
            for (int k = 0; k < 3; ++k)
              if (mask & (1u << k)) r = r * g[k];
            m[index_of(u)] = r;
          }
          bool ok = true;
          for (Unit x : kAllUnits)
            for (Unit y : kAllUnits) {
              const SignedUnit xy = unit_product(x, y);
              const SignedUnit img = m[index_of(xy.unit)];
              ok = ok && m[index_of(x)] * m[index_of(y)] == SignedUnit{xy.sign * img.sign, img.unit};
            }
          if (ok) out.push_back(m);
        }
      }
  return out;
}

// x -> u * alpha(x). For p = 3 and u^2 = 1 these conjugate Q_c to Q_{phi(c)}.
std::vector<GlobalMap> cubic_global_family() {
  const std::array<SignedUnit, 8> multipliers = {
      SignedUnit{1, Unit::one},  SignedUnit{1, Unit::j1},  SignedUnit{1, Unit::j2},
      SignedUnit{1, Unit::j3},   SignedUnit{-1, Unit::one}, SignedUnit{-1, Unit::j1},
      SignedUnit{-1, Unit::j2},  SignedUnit{-1, Unit::j3}};
  const auto autos = unit_automorphisms();
  std::vector<GlobalMap> out;
  for (SignedUnit u : multipliers)
    for (const GlobalMap& a : autos) {
      GlobalMap m{};
      for (std::size_t i = 0; i < kUnitCount; ++i) m[i] = u * a[i];
      out.push_back(m);
    }
  return out;
}

std::optional<ConjugacyMap> restrict_global(const GlobalMap& g, const SliceSpec& from,
                                            const SliceSpec& to, int p, const std::string& label) {
  for (Unit u : from.units())
    if (!to.unit_set().contains(g[index_of(u)].unit)) return std::nullopt;
  const UnitSet d = dynamical_subspace(from, p);
  const UnitSet r = dynamical_subspace(to, p);
  if (d.size() != 4) return std::nullopt;
  std::array<SignedImage, 4> phi{};
  std::size_t n = 0;
  for (Unit u : kAllUnits) {
    if (!d.contains(u)) continue;
    const SignedUnit img = g[index_of(u)];
    if (!r.contains(img.unit)) return std::nullopt;
    phi[n++] = {u, img.unit, img.sign};
  }
  std::array<SignedImage, 3> c{};
  for (std::size_t i = 0; i < 3; ++i) {
    const SignedUnit img = g[index_of(from[i])];
    c[i] = {from[i], img.unit, img.sign};
  }
  return ConjugacyMap(from, to, phi, c, label);
}

ConjugacyMap search_map(const std::vector<GlobalMap>& family, const SliceSpec& from,
                        const SliceSpec& to, int p, const std::string& family_name) {
  const std::string label = family_name + " " + from.to_string() + "->" + to.to_string();
  for (const GlobalMap& g : family)
    if (auto m = restrict_global(g, from, to, p, label)) return *m;
  throw std::logic_error("no unit symmetry relates " + from.to_string() + " and " +
                         to.to_string());
}

constexpr bool is_i(Unit u) { return u == Unit::i1 || u == Unit::i2 || u == Unit::i3 || u == Unit::i4; }
constexpr bool is_j(Unit u) { return u == Unit::j1 || u == Unit::j2 || u == Unit::j3; }

}  // namespace

std::vector<ConjugacyMap> conjugacy_catalog(int p) {
  if (p != 3) throw std::invalid_argument("conjugacy catalog is only available for p = 3");
  using U = Unit;
  std::vector<ConjugacyMap> out;

  // Explicit maps between slices of different unit types.
  out.emplace_back(SliceSpec(U::one, U::i1, U::i2), SliceSpec(U::i1, U::i2, U::j1),
                   std::array<SignedImage, 4>{{{U::one, U::j1, 1}, {U::i1, U::i1, 1},
                                               {U::i2, U::i2, 1}, {U::j1, U::one, 1}}},
                   std::array<SignedImage, 3>{{{U::one, U::j1, 1}, {U::i1, U::i1, 1},
                                               {U::i2, U::i2, 1}}},
                   "exchange 1<->j1 (1,i1,i2)->(i1,i2,j1)");
  out.emplace_back(SliceSpec(U::one, U::i1, U::i2), SliceSpec(U::i1, U::i2, U::j2),
                   std::array<SignedImage, 4>{{{U::one, U::j2, 1}, {U::i1, U::i1, 1},
                                               {U::i2, U::i2, 1}, {U::j1, U::j3, -1}}},
                   std::array<SignedImage, 3>{{{U::one, U::j2, 1}, {U::i1, U::i1, 1},
                                               {U::i2, U::i2, 1}}},
                   "multiply by j2 (1,i1,i2)->(i1,i2,j2)");
  out.emplace_back(SliceSpec(U::one, U::i1, U::j1), SliceSpec(U::i1, U::j1, U::j2),
                   std::array<SignedImage, 4>{{{U::one, U::j2, 1}, {U::i1, U::i1, 1},
                                               {U::i2, U::i4, 1}, {U::j1, U::j1, 1}}},
                   std::array<SignedImage, 3>{{{U::one, U::j2, 1}, {U::i1, U::i1, 1},
                                               {U::j1, U::j1, 1}}},
                   "1->j2, i2->i4 (1,i1,j1)->(i1,j1,j2)");
  out.emplace_back(SliceSpec(U::one, U::j1, U::j2), SliceSpec(U::j1, U::j2, U::j3),
                   std::array<SignedImage, 4>{{{U::one, U::j1, 1}, {U::j1, U::j2, 1},
                                               {U::j2, U::j3, 1}, {U::j3, U::one, 1}}},
                   std::array<SignedImage, 3>{{{U::one, U::j1, 1}, {U::j1, U::j2, 1},
                                               {U::j2, U::j3, 1}}},
                   "cycle 1->j1->j2->j3->1 (1,j1,j2)->(j1,j2,j3)");

  // Relations within one unit type, realized by unit symmetries.
  const auto family = cubic_global_family();
  struct Relation {
    const char* name;
    SliceSpec representative;
    bool (*member)(const SliceSpec&);
  };
  static const auto product_of_pair = [](const SliceSpec& s) {
    std::vector<Unit> ii, jj;
    for (Unit u : s.units()) (is_i(u) ? ii : jj).push_back(u);
    return ii.size() == 2 && jj.size() == 1 && unit_product(ii[0], ii[1]).unit == jj[0];
  };
  const std::vector<Relation> relations = {
      {"complex pair", SliceSpec(U::one, U::i1, U::i2),
       [](const SliceSpec& s) {
         return s.unit_set().contains(Unit::one) && is_i(s[1]) && is_i(s[2]);
       }},
      {"duplex pair", SliceSpec(U::one, U::j1, U::j2),
       [](const SliceSpec& s) {
         return s.unit_set().contains(Unit::one) && is_j(s[1]) && is_j(s[2]);
       }},
      {"pair with product", SliceSpec(U::i1, U::i2, U::j1),
       [](const SliceSpec& s) { return product_of_pair(s); }},
      {"complex-duplex", SliceSpec(U::one, U::i1, U::j1),
       [](const SliceSpec& s) { return s.unit_set().contains(Unit::one) && is_i(s[1]) && is_j(s[2]); }},
      {"imaginary triple", SliceSpec(U::i1, U::i2, U::i3),
       [](const SliceSpec& s) { return is_i(s[0]) && is_i(s[1]) && is_i(s[2]); }},
      {"pair with foreign duplex", SliceSpec(U::i1, U::i2, U::j2),
       [](const SliceSpec& s) {
         return is_i(s[0]) && is_i(s[1]) && is_j(s[2]) && !product_of_pair(s);
       }},
      {"imaginary with duplex pair", SliceSpec(U::i1, U::j1, U::j2),
       [](const SliceSpec& s) { return is_i(s[0]) && is_j(s[1]) && is_j(s[2]); }},
  };
  for (const Relation& rel : relations)
    for (const SliceSpec& s : enumerate_slices())
      if (rel.member(s) && !s.same_set(rel.representative))
        out.push_back(search_map(family, rel.representative, s, p, rel.name));
  return out;
}

const SliceClass* Classification::class_of(const SliceSpec& spec) const {
  for (const SliceClass& c : classes)
    for (const SliceSpec& m : c.members)
      if (m.same_set(spec)) return &c;
  return nullptr;
}

Classification classify_principal(int p, int n_samples, std::uint64_t seed) {
  const auto maps = conjugacy_catalog(p);
  const auto all = enumerate_slices();
  const auto index = [&](const SliceSpec& s) {
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i].same_set(s)) return i;
    throw std::logic_error("slice not enumerated: " + s.to_string());
  };

  Classification result;
  UnionFind uf(all.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    ConjugacyReport r = verify_conjugacy(maps[k], p, n_samples, kConjugacyTolerance, seed + k);
    if (r.passed) uf.unite(index(maps[k].source()), index(maps[k].target()));
    result.reports.push_back(std::move(r));
  }

  const std::array<std::pair<const char*, SliceSpec>, 4> named = {{
      {"Tetrabric", SliceSpec(Unit::one, Unit::i1, Unit::i2)},
      {"Perplexbric", SliceSpec(Unit::one, Unit::j1, Unit::j2)},
      {"Hourglassbric", SliceSpec(Unit::one, Unit::i1, Unit::j1)},
      {"Metabric", SliceSpec(Unit::i1, Unit::i2, Unit::i3)},
  }};
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  std::vector<bool> used(roots.size(), false);
  const auto build = [&](std::size_t root_pos, std::string name, const SliceSpec& rep) {
    SliceClass c{std::move(name), rep, {}};
    for (std::size_t i = 0; i < all.size(); ++i)
      if (uf.find(i) == roots[root_pos]) c.members.push_back(all[i]);
    used[root_pos] = true;
    result.classes.push_back(std::move(c));
  };
  for (const auto& [name, rep] : named) {
    const std::size_t r = uf.find(index(rep));
    const auto pos = std::size_t(std::find(roots.begin(), roots.end(), r) - roots.begin());
    if (!used[pos]) build(pos, name, rep);
  }
  int unnamed = 0;
  for (std::size_t pos = 0; pos < roots.size(); ++pos)
    if (!used[pos]) build(pos, "unnamed-" + std::to_string(++unnamed), all[roots[pos]]);
  return result;
}

// ---------------------------------------------------------------------------
// Voxel grids

std::vector<double> axis_centers(double origin, double spacing, std::uint32_t n) {
  const double half = 0.5 * spacing * n;
  const double center = origin + half;
  std::vector<double> out(n);
  for (std::uint32_t i = 0; i < n; ++i)
    out[i] = center + half * (double(2 * std::int64_t(i) + 1 - std::int64_t(n)) / n);
  return out;
}

std::array<double, 3> VoxelGrid::cell_center(std::size_t i, std::size_t j, std::size_t k) const {
  const std::array<std::size_t, 3> idx = {i, j, k};
  std::array<double, 3> out{};
  for (int a = 0; a < 3; ++a) {
    const double half = 0.5 * spacing[a] * dims[a];
    out[a] = origin[a] + half +
             half * (double(2 * std::int64_t(idx[a]) + 1 - std::int64_t(dims[a])) / dims[a]);
  }
  return out;
}

std::size_t VoxelGrid::member_count() const {
  return std::size_t(std::count(cells.begin(), cells.end(), max_iter));
}

bool prunable(const Tricomplex& c, int p) {
  const double bound = dynamics::escape_bound(p);
  return !in_discus(c, Discus(Tricomplex{}, bound, bound), true);
}

VoxelGrid sample_slice(const SliceSpec& spec, const Window3& window,
                       const std::array<int, 3>& dims, const dynamics::IterationParams& params,
                       const SampleOptions& options) {
  params.validate_for_membership();
  VoxelGrid g;
  g.spec = spec;
  g.max_iter = static_cast<std::uint32_t>(params.max_iter);
  for (int a = 0; a < 3; ++a) {
    if (dims[a] < 1) throw std::invalid_argument("grid dimensions must be positive");
    if (!(window.hi[a] > window.lo[a])) throw std::invalid_argument("window must have hi > lo");
    g.dims[a] = static_cast<std::uint32_t>(dims[a]);
    g.origin[a] = window.lo[a];
    g.spacing[a] = (window.hi[a] - window.lo[a]) / dims[a];
  }
  std::array<std::vector<double>, 3> axes;
  for (int a = 0; a < 3; ++a) axes[a] = axis_centers(g.origin[a], g.spacing[a], g.dims[a]);
  g.cells.assign(std::size_t(g.dims[0]) * g.dims[1] * g.dims[2], 0);

  const std::uint32_t cap = g.max_iter > 1 ? g.max_iter - 1 : 0;
  const unsigned workers = options.workers ? options.workers : worker_count();
  parallel_for(std::size_t(g.dims[0]) * g.dims[1], workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t row = begin; row < end; ++row) {
      const std::size_t i = row / g.dims[1], j = row % g.dims[1];
      for (std::size_t k = 0; k < g.dims[2]; ++k) {
        const Tricomplex c = embed_slice_point(spec, {axes[0][i], axes[1][j], axes[2][k]});
        std::uint32_t v;
        if (options.prune_outside_discus && prunable(c, params.p)) {
          v = std::min<std::uint32_t>(1, cap);
        } else {
          const auto r = dynamics::iterate_tricomplex(c, params, options.mode);
          v = r.escaped ? std::min<std::uint32_t>(std::uint32_t(r.iterations), cap) : g.max_iter;
        }
        g.cells[g.index(i, j, k)] = v;
      }
    }
  });
  return g;
}

void write_mbv1(std::ostream& os, const VoxelGrid& grid) {
  if (grid.cells.size() != std::size_t(grid.dims[0]) * grid.dims[1] * grid.dims[2])
    throw std::invalid_argument("voxel grid cell count does not match dims");
  std::ostringstream header;
  header << std::setprecision(17) << "MBV1 dims " << grid.dims[0] << ' ' << grid.dims[1] << ' '
         << grid.dims[2] << " origin " << grid.origin[0] << ' ' << grid.origin[1] << ' '
         << grid.origin[2] << " spacing " << grid.spacing[0] << ' ' << grid.spacing[1] << ' '
         << grid.spacing[2] << " max_iter " << grid.max_iter << '\n';
  os << header.str();
  std::vector<char> bytes(grid.cells.size() * 4);
  for (std::size_t n = 0; n < grid.cells.size(); ++n) {
    const std::uint32_t v = grid.cells[n];
    for (int b = 0; b < 4; ++b) bytes[4 * n + b] = static_cast<char>((v >> (8 * b)) & 0xFFu);
  }
  os.write(bytes.data(), std::streamsize(bytes.size()));
  if (!os) throw std::runtime_error("failed writing voxel grid");
}

VoxelGrid read_mbv1(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty voxel stream");
  std::istringstream h(line);
  std::string magic, k_dims, k_origin, k_spacing, k_max;
  VoxelGrid g;
  h >> magic >> k_dims >> g.dims[0] >> g.dims[1] >> g.dims[2] >> k_origin >> g.origin[0] >>
      g.origin[1] >> g.origin[2] >> k_spacing >> g.spacing[0] >> g.spacing[1] >> g.spacing[2] >>
      k_max >> g.max_iter;
  if (!h || magic != "MBV1" || k_dims != "dims" || k_origin != "origin" ||
      k_spacing != "spacing" || k_max != "max_iter")
    throw std::runtime_error("malformed MBV1 header");
  const std::size_t n = std::size_t(g.dims[0]) * g.dims[1] * g.dims[2];
  std::vector<unsigned char> bytes(n * 4);
  is.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(bytes.size()));
  if (std::size_t(is.gcount()) != bytes.size()) throw std::runtime_error("truncated MBV1 payload");
  g.cells.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    g.cells[i] = std::uint32_t(bytes[4 * i]) | std::uint32_t(bytes[4 * i + 1]) << 8 |
                 std::uint32_t(bytes[4 * i + 2]) << 16 | std::uint32_t(bytes[4 * i + 3]) << 24;
  return g;
}

void write_point_cloud(std::ostream& os, const VoxelGrid& grid) {
  std::ostringstream out;
  out << std::setprecision(10);
  for (std::size_t i = 0; i < grid.dims[0]; ++i)
    for (std::size_t j = 0; j < grid.dims[1]; ++j)
      for (std::size_t k = 0; k < grid.dims[2]; ++k) {
        if (!grid.is_member(grid.index(i, j, k))) continue;
        const auto c = grid.cell_center(i, j, k);
        out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
      }
  os << out.str();
}

}  // namespace mbk::slices
