#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perv/goettsche.hpp"

namespace perv {

// A point of the n-th symmetric product of the base curve, written as a
// multiplicity-weighted multiset of labels. Canonical order: multiplicity
// descending, label ascending.
struct PointSpec {
    struct Term {
        std::string label;
        int multiplicity = 1;
    };
    std::vector<Term> terms;

    int n() const;
    Partition nu() const;
    bool in_diagonal() const { return !terms.empty() && terms.front().multiplicity >= 2; }
    std::string str() const; // "2*x1+1*x2"
};

// Validates (distinct labels, multiplicities >= 1) and canonicalizes.
PointSpec make_point(std::vector<PointSpec::Term> terms);

// A curve-fiber ring with its local grades, plus whatever structure constants
// the user supplies for the length >= 2 assemblies over a fat point.
struct FiberModel {
    FilteredAlgebra fiber_ring;
    std::optional<int> declared_genus;
    std::map<int, ConstantsDesc> hilbert_products; // keyed by multiplicity m >= 2
};

// ProfileMismatch unless the ring has defect 1 with degrees and grades <= 2.
void validate_fiber_model(const FiberModel& model);

struct FiberFactor {
    std::string label;
    int multiplicity = 1;
    SectorSpace space;
};

// The fiber over a point factors over its distinct labels; degrees and grades
// add across factors and the assembled product combines whatever each factor
// knows.
struct FiberSpace {
    PointSpec point;
    std::vector<FiberFactor> factors;
    FilteredAlgebra assembled;
};

FiberSpace local_fiber(const FiberModel& model, const PointSpec& x,
                       long long guard = default_guard);

struct FactorCheck {
    std::string label;
    int multiplicity = 1;
    CheckReport report;
};

// The check factorizes: the fiber is multiplicative iff every factor is.
struct LocalCheck {
    CheckReport overall;
    std::vector<FactorCheck> factors;
};

LocalCheck check_local_multiplicativity(const FiberSpace& fiber);
LocalCheck check_local_multiplicativity(const FiberModel& model, const PointSpec& x,
                                        long long guard = default_guard);

// Elliptic dichotomy: away from the diagonal the local filtration is expected
// multiplicative; on the diagonal it is expected multiplicative exactly for
// genus 1. The computed verdict stays indeterminate until cross-sector
// constants are supplied.
struct DichotomyReport {
    std::string point;
    bool in_diagonal = false;
    int declared_genus = 0;
    std::string expected;  // "multiplicative" | "non-multiplicative"
    Verdict computed = Verdict::indeterminate;
    std::string agreement; // "agrees" | "disagrees" | "indeterminate"
    std::vector<std::string> notes;
    LocalCheck detail;
};

DichotomyReport dichotomy_report(const FiberModel& model, const PointSpec& x,
                                 long long guard = default_guard);

} // namespace perv
