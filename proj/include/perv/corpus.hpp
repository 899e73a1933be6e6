#pragma once

#include <cstdint>

#include "perv/algebra.hpp"

namespace perv {

// Deterministic random unital algebra of dimension <= 6: sparse structure
// constants, symmetrized, then repaired to associativity by zeroing
// conflicting triples. Always builds; multiplicativity varies with the seed.
AlgebraDesc random_algebra_desc(std::uint64_t seed);

} // namespace perv
