#pragma once

#include <functional>
#include <map>
#include <vector>

#include "perv/algebra.hpp"
#include "perv/partition.hpp"

namespace perv {

// Refuse to enumerate bases larger than this unless overridden.
inline constexpr long long default_guard = 1'000'000;

// Graded tensor product with Koszul signs: degrees, grades and profiles add,
// (x (x) y)(x' (x) y') = (-1)^{deg y * deg x'} (xx') (x) (yy'). Basis ids are
// "(idA,idB)".
FilteredAlgebra kunneth_product(const FilteredAlgebra& a, const FilteredAlgebra& b,
                                long long guard = default_guard);

// n-fold tensor power with flat tuple ids "(x,y,z)" plus the tuple indexing
// needed to address words.
struct TensorPowerData {
    FilteredAlgebra algebra;
    std::vector<std::vector<int>> tuples;    // tensor index -> base indices
    std::map<std::vector<int>, int> tuple_index;
};

TensorPowerData tensor_power_data(const FilteredAlgebra& a, int n,
                                  long long guard = default_guard);

// Super-symmetric power: multisets of basis elements, odd-degree constituents
// with multiplicity at most one. Ids are "{x,y}" with constituents sorted.
// The invariant basis vector carries coefficient 1 on the sorted word of its
// orbit sum; products are computed inside the tensor power and re-expressed
// in the invariant basis.
struct SymPowerData {
    FilteredAlgebra algebra;
    std::vector<std::vector<int>> multisets; // sym index -> sorted base indices
};

SymPowerData sym_power_data(const FilteredAlgebra& a, int n, long long guard,
                            bool with_products);

FilteredAlgebra sym_power(const FilteredAlgebra& a, int n, long long guard = default_guard);

// Tensor product over i of Sym^{a_i}(A) for the multiplicities a_i of nu,
// ascending i, components joined with '|'.
FilteredAlgebra sym_nu(const FilteredAlgebra& a, const Partition& nu,
                       long long guard = default_guard, bool with_products = true);

// Orbit sum of a multiset inside the tensor power, Koszul signs included.
SparseVec sym_embedding(const FilteredAlgebra& base, const std::vector<int>& multiset,
                        const TensorPowerData& t);

// Counting oracle: dimension of the super-symmetric power from the number of
// even and odd basis elements alone, no enumeration.
BigInt super_sym_dim(long long even_count, long long odd_count, int n);
BigInt sym_power_dim(const FilteredAlgebra& a, int n);
BigInt sym_nu_dim(const FilteredAlgebra& a, const Partition& nu);

// Confirms that the grade of every invariant basis vector equals the grade of
// its orbit sum in the tensor power. Returns the number of elements checked.
int verify_sym_descent(const FilteredAlgebra& base, const SymPowerData& s,
                       const TensorPowerData& t);

// Internal building block, exposed for the sector and fiber assemblies:
// n-ary graded tensor product with caller-supplied id formatting.
using IdJoiner = std::function<std::string(const std::vector<std::string>&)>;
FilteredAlgebra tensor_product(const std::vector<const FilteredAlgebra*>& factors,
                               const IdJoiner& join, const std::string& name,
                               long long guard, bool with_products,
                               std::vector<std::vector<int>>* tuples_out = nullptr);

} // namespace perv
