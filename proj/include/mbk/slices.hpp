#pragma once

// Principal 3D slices of the tricomplex Multibrot: c restricted to the span
// of three units. Covers the slice catalog, conjugacies between slices,
// classification into classes with identical dynamics, and voxel sampling.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mbk/dynamics.hpp"
#include "mbk/hypercomplex.hpp"

namespace mbk::slices {

// All 3-element subsets of the 8 units, each sorted, in lexicographic order.
std::vector<SliceSpec> enumerate_slices();

// Smallest coordinate subspace holding the slice and every iterate of
// Q(eta) = eta^p + c for c in the slice (determined numerically).
UnitSet dynamical_subspace(const SliceSpec& spec, int p);

struct SignedImage {
  Unit from;
  Unit to;
  int sign = 1;

  friend bool operator==(const SignedImage&, const SignedImage&) = default;
};

// A signed coefficient permutation phi between two 4-dimensional coordinate
// subspaces together with a signed permutation of the slice parameters,
// meant to satisfy phi o Q_{p,c} o phi^-1 = Q_{p,c'}.
class ConjugacyMap {
 public:
  ConjugacyMap(SliceSpec source, SliceSpec target, std::array<SignedImage, 4> phi,
               std::array<SignedImage, 3> c_map, std::string label);

  static ConjugacyMap identity(const SliceSpec& spec, int p);

  const SliceSpec& source() const { return source_; }
  const SliceSpec& target() const { return target_; }
  const std::array<SignedImage, 4>& phi() const { return phi_; }
  const std::array<SignedImage, 3>& c_map() const { return c_map_; }
  const std::string& label() const { return label_; }

  UnitSet domain() const;
  UnitSet range() const;

  // phi(x) for x in the domain. Mass of x outside the domain is returned
  // through `outside_norm_sq` when given.
  Tricomplex apply(const Tricomplex& x, double* outside_norm_sq = nullptr) const;
  Tricomplex apply_inverse(const Tricomplex& y, double* outside_norm_sq = nullptr) const;
  Tricomplex map_parameter(const Tricomplex& c) const;

  ConjugacyMap inverse() const;
  // next o this; requires this->target() and next.source() to name the same slice.
  ConjugacyMap then(const ConjugacyMap& next) const;

  // Copy with the sign of one phi entry flipped (negative controls).
  ConjugacyMap with_flipped_sign(std::size_t phi_entry) const;

 private:
  SliceSpec source_;
  SliceSpec target_;
  std::array<SignedImage, 4> phi_;
  std::array<SignedImage, 3> c_map_;
  std::string label_;
};

struct ConjugacyWitness {
  Tricomplex eta;
  Tricomplex c;
  double residual = 0.0;
};

struct ConjugacyReport {
  std::string label;
  bool passed = false;
  double max_residual = 0.0;
  int samples = 0;
  // Worst sample when the check failed.
  std::optional<ConjugacyWitness> witness;
};

// Samples eta in the map's range and c in the source slice, coefficients
// uniform in [-2, 2], and measures norm3(phi(Q_c(phi^-1 eta)) - Q_c'(eta)).
ConjugacyReport verify_conjugacy(const ConjugacyMap& map, int p, int n_samples, double tol,
                                 std::uint64_t seed = 1);

// The relations between slices of the cubic tricomplex Multibrot, as maps.
// Throws std::invalid_argument for p != 3.
std::vector<ConjugacyMap> conjugacy_catalog(int p);

struct SliceClass {
  std::string name;
  SliceSpec representative;
  std::vector<SliceSpec> members;
};

struct Classification {
  std::vector<SliceClass> classes;
  std::vector<ConjugacyReport> reports;

  const SliceClass* class_of(const SliceSpec& spec) const;
};

inline constexpr double kConjugacyTolerance = 1e-9;

// Union-find over every catalog map that verifies at kConjugacyTolerance.
Classification classify_principal(int p, int n_samples = 1000, std::uint64_t seed = 1);

struct Window3 {
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};
};

// Iteration counts on a lattice of cell centers. A cell equal to max_iter is
// a member; escaped cells hold their escape iteration, capped at max_iter - 1
// so the two never collide. Layout is row-major with the last axis fastest:
// index = (i * ny + j) * nz + k.
struct VoxelGrid {
  std::optional<SliceSpec> spec;
  std::array<double, 3> origin{};
  std::array<double, 3> spacing{};
  std::array<std::uint32_t, 3> dims{};
  std::uint32_t max_iter = 0;
  std::vector<std::uint32_t> cells;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dims[1] + j) * dims[2] + k;
  }
  std::array<double, 3> cell_center(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_member(std::size_t idx) const { return cells[idx] == max_iter; }
  std::size_t member_count() const;
  double cell_volume() const { return spacing[0] * spacing[1] * spacing[2]; }
  double member_volume() const { return double(member_count()) * cell_volume(); }
};

// Cell centers of n cells on [lo, lo + n*spacing]; symmetric windows give
// exactly negated coordinates.
std::vector<double> axis_centers(double origin, double spacing, std::uint32_t n);

struct SampleOptions {
  // Cells outside the closed discus of radius 2^(1/(p-1)) are recorded as
  // escaping at iteration 1 without iterating.
  bool prune_outside_discus = true;
  unsigned workers = 0;  // 0: worker_count()
  dynamics::TricomplexMode mode = dynamics::TricomplexMode::direct;
};

VoxelGrid sample_slice(const SliceSpec& spec, const Window3& window,
                       const std::array<int, 3>& dims, const dynamics::IterationParams& params,
                       const SampleOptions& options = {});

// true iff the cell center lies outside the closed discus bound.
bool prunable(const Tricomplex& c, int p);

// "MBV1 dims dx dy dz origin ox oy oz spacing sx sy sz max_iter M\n" then
// dx*dy*dz little-endian uint32 counts.
void write_mbv1(std::ostream& os, const VoxelGrid& grid);
VoxelGrid read_mbv1(std::istream& is);

// One "x y z" line per member cell center.
void write_point_cloud(std::ostream& os, const VoxelGrid& grid);

}  // namespace mbk::slices
