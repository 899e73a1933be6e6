#pragma once

#include <string>
#include <vector>

#include "perv/checks.hpp"
#include "perv/constructions.hpp"
#include "perv/partition.hpp"

namespace perv {

// One partition sector of the length-n assembly: degrees shift by 2n - 2l(nu)
// and grades by n - l(nu).
struct SectorLabel {
    Partition nu;
    int degree_shift = 0;
    int grade_shift = 0;
};

struct Sector {
    SectorLabel label;
    FilteredAlgebra inner; // sym_nu of the base, built without products
};

// Additive assembly of the partition sectors. Basis ids are canonical strings
// "ν=[2,1]|{x}|{y}". The assembly carries no product of its own for n >= 2;
// cross-sector structure constants are external data (attach_product).
// For n = 1 the space is the base itself.
struct SectorSpace {
    std::string name;
    int n = 1;
    FilteredAlgebra base;
    std::vector<Sector> sectors; // reverse-lexicographic partition order
    FilteredAlgebra assembled;
    std::vector<int> sector_of; // assembled basis index -> sector position
};

SectorSpace douady_space(const FilteredAlgebra& base, int n, long long guard = default_guard);

// User-supplied structure constants for an assembled space.
struct ConstantsDesc {
    std::string name;
    std::string base; // checked against the assembly's base name when nonempty
    int n = 0;
    bool total = false;
    std::vector<ProductEntry> products;

    bool operator==(const ConstantsDesc&) const = default;
};

// Validates the constants (degree additivity, graded commutativity,
// associativity over covered triples, unknown ids) and installs them on the
// assembled algebra. Pairs not covered stay unknown unless `total` is set.
void attach_product(SectorSpace& space, const ConstantsDesc& constants);

// Multiplicativity of the assembled product; uncovered pairs are summarized
// per sector pair in the notes.
CheckReport check_multiplicative(const SectorSpace& space);

// Dimension table indexed by (degree, grade) with per-sector breakdown.
struct PerversityTable {
    std::string space;
    int max_degree = 0;
    int max_grade = 0;
    std::vector<std::vector<long long>> dims; // [degree][grade]
    std::vector<long long> betti;             // row sums
    std::vector<long long> grade_dims;        // column sums
    long long total = 0;

    struct SectorBlock {
        std::string nu;
        int degree_shift = 0;
        int grade_shift = 0;
        long long dim = 0;
        std::vector<std::vector<long long>> dims;
    };
    std::vector<SectorBlock> sectors;
};

PerversityTable perversity_table(const SectorSpace& space);

// Total dimensions of the length-n assemblies for n = 0..N, computed from the
// partition sums and cross-checked against the infinite-product generating
// function of the graded dimensions of the base. A mismatch is a hard
// OracleMismatch error.
std::vector<BigInt> goettsche_series(const FilteredAlgebra& base, int N);

} // namespace perv
