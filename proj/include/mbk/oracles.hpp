#pragma once

// Reference implementations that share no code path with the main modules.
// Used by the test suites and `mbk verify` as cross-checks.

#include <array>

#include "mbk/hypercomplex.hpp"
#include "mbk/roots.hpp"

namespace mbk::oracles {

// Each unit is the product of a subset of {i1, i2, i3}; two units multiply by
// xor-ing the subsets, with one factor -1 per shared generator.
SignedUnit generator_unit_product(Unit a, Unit b);
UnitTable generator_unit_table();

// Tricomplex product through eta = zeta1 + zeta2 i3 and bicomplex arithmetic.
Tricomplex zeta_pair_multiply(const Tricomplex& a, const Tricomplex& b);

// Real-root count of a monic cubic from sign changes on a grid refined with
// the critical points. Returns 1, 2 (a double root) or 3.
int sampled_real_root_count(const roots::CubicCoeffs& cc);
roots::RootKind sampled_root_kind(const roots::CubicCoeffs& cc);

// The sharp real cross-section of z^3 + c: [-2/(3 sqrt 3), 2/(3 sqrt 3)].
bool hyperbric_member(double a, double b);

// c1 + c4 j1 + c6 j2 is in the Perplexbric iff both hyperbolic parts
// (c1, c4 + c6) and (c1, c4 - c6) are in the Hyperbric.
bool perplexbric_union_member(double c1, double c4, double c6);

}  // namespace mbk::oracles
