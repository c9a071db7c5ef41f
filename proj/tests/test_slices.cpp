#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include "mbk/slices.hpp"

using namespace mbk;
using namespace mbk::slices;
using U = Unit;

TEST_CASE("slice enumeration") {
  const auto all = enumerate_slices();
  CHECK(all.size() == 56);
  std::set<std::uint8_t> masks;
  for (const auto& s : all) masks.insert(s.unit_set().mask());
  CHECK(masks.size() == 56);
  CHECK(all.front() == SliceSpec(U::one, U::i1, U::i2));
}

TEST_CASE("dynamical subspaces are four-dimensional for p = 3") {
  for (const auto& s : enumerate_slices()) {
    const UnitSet d = dynamical_subspace(s, 3);
    CHECK(d.size() == 4);
    CHECK(s.unit_set().subset_of(d));
  }
  CHECK(dynamical_subspace(SliceSpec(U::one, U::i1, U::i2), 3) == UnitSet{U::one, U::i1, U::i2, U::j1});
  CHECK(dynamical_subspace(SliceSpec(U::i1, U::i2, U::i3), 3) == UnitSet{U::i1, U::i2, U::i3, U::i4});
}

TEST_CASE("conjugacy map construction is validated") {
  const SliceSpec s(U::one, U::i1, U::i2);
  // phi repeats a target.
  CHECK_THROWS_AS(ConjugacyMap(s, s,
                               {{{U::one, U::one, 1}, {U::i1, U::i1, 1}, {U::i2, U::i1, 1}, {U::j1, U::j1, 1}}},
                               {{{U::one, U::one, 1}, {U::i1, U::i1, 1}, {U::i2, U::i2, 1}}}, "bad"),
                  std::invalid_argument);
  // Sign must be +-1.
  CHECK_THROWS_AS(ConjugacyMap(s, s,
                               {{{U::one, U::one, 2}, {U::i1, U::i1, 1}, {U::i2, U::i2, 1}, {U::j1, U::j1, 1}}},
                               {{{U::one, U::one, 1}, {U::i1, U::i1, 1}, {U::i2, U::i2, 1}}}, "bad"),
                  std::invalid_argument);
  // Parameter map must land on the target slice.
  CHECK_THROWS_AS(ConjugacyMap(s, s,
                               {{{U::one, U::one, 1}, {U::i1, U::i1, 1}, {U::i2, U::i2, 1}, {U::j1, U::j1, 1}}},
                               {{{U::one, U::one, 1}, {U::i1, U::i1, 1}, {U::i2, U::j1, 1}}}, "bad"),
                  std::invalid_argument);
}

TEST_CASE("identity, inverse and composition") {
  const auto id = ConjugacyMap::identity(SliceSpec(U::one, U::i1, U::j1), 3);
  CHECK(verify_conjugacy(id, 3, 500, kConjugacyTolerance).passed);

  const auto catalog = conjugacy_catalog(3);
  REQUIRE(catalog.size() >= 4);
  const ConjugacyMap& m = catalog[1];
  const Tricomplex x = Tricomplex::unit(U::one, 0.3) + Tricomplex::unit(U::j1, -0.7);
  CHECK(m.apply_inverse(m.apply(x)) == x);
  CHECK(verify_conjugacy(m.inverse(), 3, 1000, kConjugacyTolerance).passed);
  CHECK(verify_conjugacy(m.then(m.inverse()), 3, 1000, kConjugacyTolerance).passed);

  double outside = 0.0;
  m.apply(Tricomplex::unit(U::i3), &outside);
  CHECK(outside == 1.0);
}

TEST_CASE("catalog maps all verify") {
  for (const auto& m : conjugacy_catalog(3)) {
    const auto r = verify_conjugacy(m, 3, 1000, kConjugacyTolerance);
    INFO(m.label());
    CHECK(r.passed);
    CHECK(r.max_residual <= kConjugacyTolerance);
  }
  CHECK_THROWS_AS(conjugacy_catalog(2), std::invalid_argument);
}

TEST_CASE("a flipped sign breaks the conjugacy") {
  const auto m = conjugacy_catalog(3).front();
  const auto r = verify_conjugacy(m.with_flipped_sign(1), 3, 200, kConjugacyTolerance);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->residual > kConjugacyTolerance);
}

TEST_CASE("principal slices fall into four named classes") {
  const Classification c = classify_principal(3, 500);
  REQUIRE(c.classes.size() == 4);
  CHECK(c.classes[0].name == "Tetrabric");
  CHECK(c.classes[0].members.size() == 24);
  CHECK(c.classes[1].name == "Perplexbric");
  CHECK(c.classes[1].members.size() == 4);
  CHECK(c.classes[2].name == "Hourglassbric");
  CHECK(c.classes[2].members.size() == 24);
  CHECK(c.classes[3].name == "Metabric");
  CHECK(c.classes[3].members.size() == 4);
  CHECK(c.class_of(SliceSpec(U::j3, U::j2, U::j1))->name == "Perplexbric");
  CHECK(c.class_of(SliceSpec(U::i2, U::i3, U::i4))->name == "Metabric");
  CHECK(c.class_of(SliceSpec(U::i1, U::i2, U::j1))->name == "Tetrabric");
}

TEST_CASE("axis centers are symmetric") {
  const auto c = axis_centers(-1.5, 3.0 / 7, 7);
  REQUIRE(c.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(c[i] == -c[6 - i]);
  CHECK(c[3] == 0.0);
}

TEST_CASE("voxel sampling") {
  const auto params = dynamics::IterationParams::for_degree(3, 100);
  const Window3 w{{-1, -1, -1}, {1, 1, 1}};
  const auto pruned = sample_slice(SliceSpec(U::one, U::i1, U::i2), w, {12, 12, 12}, params);
  SampleOptions full;
  full.prune_outside_discus = false;
  const auto unpruned = sample_slice(SliceSpec(U::one, U::i1, U::i2), w, {12, 12, 12}, params, full);
  CHECK(pruned.member_count() == unpruned.member_count());
  CHECK(pruned.member_count() > 0);
  CHECK(pruned.cell_volume() == doctest::Approx(std::pow(2.0 / 12, 3)));
  CHECK(pruned.index(1, 2, 3) == (1 * 12 + 2) * 12 + 3);

  CHECK_THROWS_AS(sample_slice(SliceSpec(U::one, U::i1, U::i2), w, {0, 4, 4}, params), std::invalid_argument);
  CHECK_THROWS_AS(sample_slice(SliceSpec(U::one, U::i1, U::i2), Window3{{1, 0, 0}, {0, 1, 1}}, {4, 4, 4}, params),
                  std::invalid_argument);
  CHECK(prunable(Tricomplex(2.0), 3));
  CHECK_FALSE(prunable(Tricomplex(0.1), 3));
}

TEST_CASE("MBV1 round trip and malformed input") {
  const auto params = dynamics::IterationParams::for_degree(3, 50);
  const auto g = sample_slice(SliceSpec(U::one, U::j1, U::j2), Window3{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}},
                              {5, 6, 7}, params);
  std::stringstream ss;
  write_mbv1(ss, g);
  const auto back = read_mbv1(ss);
  CHECK(back.dims == g.dims);
  CHECK(back.origin == g.origin);
  CHECK(back.spacing == g.spacing);
  CHECK(back.max_iter == g.max_iter);
  CHECK(back.cells == g.cells);

  std::stringstream bad("MBV2 dims 1 1 1\n");
  CHECK_THROWS(read_mbv1(bad));
  std::string bytes = ss.str();
  std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS(read_mbv1(truncated));

  std::ostringstream pts;
  write_point_cloud(pts, g);
  std::size_t lines = 0;
  for (char ch : pts.str()) lines += ch == '\n';
  CHECK(lines == g.member_count());
}
