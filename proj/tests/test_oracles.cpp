#include <doctest.h>

#include "mbk/hypercomplex.hpp"
#include "mbk/oracles.hpp"

using namespace mbk;

TEST_CASE("generator table equals the unit table") {
  CHECK(oracles::generator_unit_table() == kUnitTable);
}

TEST_CASE("sampled root counts") {
  CHECK(oracles::sampled_real_root_count({0, -1, 0}) == 3);
  CHECK(oracles::sampled_real_root_count({0, 0, 1}) == 1);
  CHECK(oracles::sampled_real_root_count({0, -3, 2}) == 2);
  CHECK(oracles::sampled_root_kind({0, -3, 2}) == roots::RootKind::three_real_one_double);
}

TEST_CASE("hyperbric and perplexbric oracles") {
  CHECK(oracles::hyperbric_member(0.0, 0.0));
  CHECK(oracles::hyperbric_member(0.38, 0.0));
  CHECK_FALSE(oracles::hyperbric_member(0.2, 0.2));
  CHECK(oracles::perplexbric_union_member(0.1, 0.1, 0.1));
  CHECK_FALSE(oracles::perplexbric_union_member(0.2, 0.1, 0.1));
}
