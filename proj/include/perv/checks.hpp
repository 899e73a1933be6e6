#pragma once

#include <string>
#include <vector>

#include "perv/algebra.hpp"

namespace perv {

enum class Verdict { pass, fail, indeterminate };

const char* to_string(Verdict v);

struct Violation {
    std::string left;
    std::string right;
    int bound = 0;    // allowed grade
    int observed = 0; // grade actually seen
};

bool operator==(const Violation& a, const Violation& b);

// Deterministic machine-checkable verdict. `fail` iff violations nonempty;
// `indeterminate` only when product data is missing for a required pair.
struct CheckReport {
    std::string subject;
    Verdict verdict = Verdict::pass;
    std::vector<Violation> violations;
    std::vector<std::pair<std::string, std::string>> uncovered_sample;
    long long uncovered_count = 0;
    std::vector<std::string> notes;
};

inline constexpr int uncovered_sample_limit = 16;

// Grade additivity of the product over all known basis pairs (left <= right
// in the canonical order). Pairs with unknown product make the verdict
// indeterminate and are named (up to the sample limit).
CheckReport check_multiplicative(const FilteredAlgebra& a);

// Dual basis {beta^i} with integral(beta^i * beta_j) = delta_ij, the co-class
// on the left of the pairing. Each beta^i is solved inside the complementary
// degree block. NoIntegral / DegeneratePairing on failure.
std::vector<ClassVector> dual_basis(const FilteredAlgebra& a);

struct DiagonalTerm {
    ClassVector co;     // beta^i
    ClassVector primal; // beta_i
};

// Sum of beta^i (x) beta_i over the canonical basis.
struct DiagonalDecomposition {
    std::vector<DiagonalTerm> terms;
};

DiagonalDecomposition diagonal_decomposition(const FilteredAlgebra& a);

// Poincare-duality conformity of the grading: every dual class sits in a
// single (degree, grade) block and grade(beta_i) + grade(beta^i) = 2r.
// Soft-fails (verdict fail / indeterminate) instead of throwing, except for
// NoIntegral which the caller is expected to gate on.
CheckReport check_duality(const FilteredAlgebra& a);

} // namespace perv
