#pragma once

// Property suites behind `mbk verify`. Each suite draws its samples from a
// mt19937_64 seeded with `seed`, so a report is reproducible byte for byte.

#include <cstdint>
#include <string_view>

#include "mbk/hypercomplex.hpp"
#include "mbk/report.hpp"

namespace mbk::verify {

// Ring axioms, agreement with independent product oracles, idempotent
// homomorphism and norm identities. Every product goes through `table`, so a
// corrupted table yields failing checks with witnesses.
report::Report algebra(std::uint64_t seed, const UnitTable& table = kUnitTable);

report::Report roots(std::uint64_t seed);
report::Report dynamics(std::uint64_t seed);
report::Report slices(std::uint64_t seed);

// "algebra", "roots", "dynamics", "slices" or "all".
report::Report run_suite(std::string_view suite, std::uint64_t seed,
                         const UnitTable& table = kUnitTable);

}  // namespace mbk::verify
