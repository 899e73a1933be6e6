#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "perv/checks.hpp"
#include "perv/corpus.hpp"

using namespace perv;

TEST_CASE("every seed builds a valid unital algebra of dimension at most 6") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        AlgebraDesc d = random_algebra_desc(seed);
        FilteredAlgebra a = build_algebra(d); // throws on any structural defect
        CHECK(a.dim() >= 2);
        CHECK(a.dim() <= 6);
        CHECK(a.unit.has_value());
        CHECK(a.total);
        const auto& u = a.basis[static_cast<std::size_t>(*a.unit)];
        CHECK(u.degree == 0);
        CHECK(u.grade == 0);
    }
}

TEST_CASE("same seed, same algebra") {
    for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
        CHECK(random_algebra_desc(seed) == random_algebra_desc(seed));
    }
    CHECK(random_algebra_desc(1) != random_algebra_desc(2));
}

TEST_CASE("the corpus mixes multiplicative and non-multiplicative algebras") {
    int passes = 0, fails = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Verdict v = check_multiplicative(build_algebra(random_algebra_desc(seed))).verdict;
        REQUIRE(v != Verdict::indeterminate); // total by construction
        (v == Verdict::pass ? passes : fails) += 1;
    }
    CHECK(passes >= 10);
    CHECK(fails >= 10);
}
