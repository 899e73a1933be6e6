#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perv/rational.hpp"

namespace perv {

// dim X, dim Y and the defect r = dim X - dim Y of an equidimensional
// fibration X -> Y. Grades of any attached algebra live in [0, 2r].
struct FibrationProfile {
    int dim_total = 0;
    int dim_base = 0;
    int defect = 0;
    int fiber_dim = 0;

    static FibrationProfile equidimensional(int dim_total, int dim_base);
};

struct BasisElement {
    std::string id;
    int degree = 0; // cohomological degree
    int grade = 0;  // perverse-decomposition grade

    bool operator==(const BasisElement&) const = default;
};

// Sparse vector over the basis of one algebra: index -> coefficient.
// Zero coefficients are never stored.
using SparseVec = std::map<int, Rational>;

struct ProductEntry {
    std::string left;
    std::string right;
    std::vector<std::pair<std::string, Rational>> value;

    bool operator==(const ProductEntry&) const = default;
};

// Parsed, structurally validated description of an algebra. Produced by the
// .alg parser or assembled programmatically; consumed by build_algebra.
struct AlgebraDesc {
    std::string name;
    int dim_total = 0;
    int dim_base = 0;
    std::vector<BasisElement> basis;
    std::optional<std::string> unit;
    bool total = false; // true: unlisted products are zero; false: unknown
    std::vector<ProductEntry> products;
    std::optional<std::vector<std::pair<std::string, Rational>>> integral;
    std::optional<int> genus; // fiber models only

    bool operator==(const AlgebraDesc&) const = default;
};

// Finite-dimensional graded-commutative algebra with a perverse-decomposition
// grade on every basis vector. Immutable after construction; the basis is
// sorted by id (the canonical total order used everywhere).
//
// `products` holds the known structure constants, both orientations. When
// `total` is set, missing entries mean zero; otherwise they are unknown and
// render downstream checks indeterminate.
struct FilteredAlgebra {
    std::string name;
    FibrationProfile profile;
    std::vector<BasisElement> basis;
    std::map<std::string, int, std::less<>> index;
    std::optional<int> unit;
    bool total = false;
    std::map<std::pair<int, int>, SparseVec> products;
    std::optional<SparseVec> integral;
    std::optional<int> genus;

    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(std::string_view id) const; // UnknownId
    bool product_known(int i, int j) const;
    // nullptr when the pair is unknown; points at a shared empty vector for
    // known-zero pairs of a total algebra.
    const SparseVec* known_product(int i, int j) const;
    bool has_integral() const { return integral.has_value(); }

    // dimension census by cohomological degree (betti[d]) and by (degree, grade)
    std::vector<long long> betti() const;
    std::map<std::pair<int, int>, long long> census() const;
};

struct ClassVector {
    const FilteredAlgebra* owner = nullptr;
    SparseVec terms;

    bool is_zero() const { return terms.empty(); }
};

bool operator==(const ClassVector& a, const ClassVector& b);

FilteredAlgebra build_algebra(const AlgebraDesc& desc);

ClassVector make_vector(const FilteredAlgebra& a,
                        const std::vector<std::pair<std::string, Rational>>& terms);
ClassVector basis_vector(const FilteredAlgebra& a, int index);

void add_scaled(SparseVec& acc, const SparseVec& v, const Rational& c);

ClassVector add(const ClassVector& x, const ClassVector& y);
ClassVector scale(const ClassVector& x, const Rational& c);

// Bilinear extension of the structure constants. MissingProduct if a needed
// pair is unknown, ForeignVector if the owners differ.
ClassVector multiply(const FilteredAlgebra& a, const ClassVector& x, const ClassVector& y);

// Same, but returns nothing instead of throwing when data is missing.
std::optional<SparseVec> try_multiply(const FilteredAlgebra& a, const SparseVec& x,
                                      const SparseVec& y);

// Smallest k with x in P_k = max grade over the support. ZeroVector on 0.
int perversity(const FilteredAlgebra& a, const ClassVector& x);

Rational integrate(const FilteredAlgebra& a, const SparseVec& x); // NoIntegral

std::string format_vector(const FilteredAlgebra& a, const SparseVec& v);

} // namespace perv
