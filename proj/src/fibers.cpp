#include "perv/fibers.hpp"

#include <algorithm>

#include "perv/errors.hpp"

namespace perv {

int PointSpec::n() const {
    int total = 0;
    for (const auto& t : terms)
        total += t.multiplicity;
    return total;
}

Partition PointSpec::nu() const {
    std::vector<int> parts;
    for (const auto& t : terms)
        parts.push_back(t.multiplicity);
    std::sort(parts.rbegin(), parts.rend());
    return Partition{parts};
}

std::string PointSpec::str() const {
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty())
            s += '+';
        s += std::to_string(t.multiplicity) + "*" + t.label;
    }
    return s;
}

PointSpec make_point(std::vector<PointSpec::Term> terms) {
    if (terms.empty())
        throw Error(ErrorKind::SyntaxError, "a point needs at least one term");
    for (const auto& t : terms) {
        if (t.multiplicity < 1)
            throw Error(ErrorKind::ZeroMultiplicity,
                        "label '" + t.label + "' has multiplicity " +
                            std::to_string(t.multiplicity));
        if (t.label.empty())
            throw Error(ErrorKind::SyntaxError, "empty label");
    }
    std::sort(terms.begin(), terms.end(), [](const PointSpec::Term& a, const PointSpec::Term& b) {
        if (a.multiplicity != b.multiplicity)
            return a.multiplicity > b.multiplicity;
        return a.label < b.label;
    });
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (terms[i].label == terms[j].label)
                throw Error(ErrorKind::RepeatedLabel, "label '" + terms[i].label + "' repeats");
    PointSpec p;
    p.terms = std::move(terms);
    return p;
}

void validate_fiber_model(const FiberModel& model) {
    const FilteredAlgebra& f = model.fiber_ring;
    if (f.profile.defect != 1)
        throw Error(ErrorKind::ProfileMismatch,
                    "fiber ring '" + f.name + "' must have defect 1, got " +
                        std::to_string(f.profile.defect));
    for (const auto& b : f.basis) {
        if (b.degree > 2)
            throw Error(ErrorKind::ProfileMismatch,
                        "fiber ring element '" + b.id + "' has degree " +
                            std::to_string(b.degree) + " > 2");
        if (b.grade > 2)
            throw Error(ErrorKind::ProfileMismatch,
                        "fiber ring element '" + b.id + "' has grade " +
                            std::to_string(b.grade) + " > 2");
    }
    for (const auto& [m, c] : model.hilbert_products) {
        (void)c;
        if (m < 2)
            throw Error(ErrorKind::BadInvocation,
                        "assembled constants are keyed by multiplicity >= 2, got " +
                            std::to_string(m));
    }
}

FiberSpace local_fiber(const FiberModel& model, const PointSpec& x, long long guard) {
    validate_fiber_model(model);
    FiberSpace fs;
    fs.point = x;

    BigInt dim(1);
    for (const auto& t : x.terms) {
        BigInt d(0);
        for (const auto& nu : partitions_of(t.multiplicity))
            d += sym_nu_dim(model.fiber_ring, nu);
        dim *= d;
    }
    if (dim > to_bigint(guard))
        throw Error(ErrorKind::GuardExceeded,
                    "fiber would have " + dim.get_str() + " basis elements, guard is " +
                        std::to_string(guard));

    for (const auto& t : x.terms) {
        FiberFactor f;
        f.label = t.label;
        f.multiplicity = t.multiplicity;
        f.space = douady_space(model.fiber_ring, t.multiplicity, guard);
        auto it = model.hilbert_products.find(t.multiplicity);
        if (t.multiplicity >= 2 && it != model.hilbert_products.end())
            attach_product(f.space, it->second);
        fs.factors.push_back(std::move(f));
    }

    std::vector<const FilteredAlgebra*> parts;
    std::vector<std::string> labels;
    for (const auto& f : fs.factors) {
        parts.push_back(&f.space.assembled);
        labels.push_back(f.label);
    }
    IdJoiner join = [labels](const std::vector<std::string>& ids) {
        std::string s;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i)
                s += "⊗";
            s += labels[i] + ":" + ids[i];
        }
        return s;
    };
    fs.assembled =
        tensor_product(parts, join, "fiber(" + model.fiber_ring.name + "," + x.str() + ")",
                       guard, /*with_products=*/true);
    return fs;
}

LocalCheck check_local_multiplicativity(const FiberSpace& fiber) {
    LocalCheck lc;
    lc.overall.subject = "local multiplicativity";
    bool any_fail = false, any_indet = false;
    for (const auto& f : fiber.factors) {
        FactorCheck fc;
        fc.label = f.label;
        fc.multiplicity = f.multiplicity;
        fc.report = check_multiplicative(f.space);
        fc.report.subject = "factor " + std::to_string(f.multiplicity) + "*" + f.label;
        any_fail = any_fail || fc.report.verdict == Verdict::fail;
        any_indet = any_indet || fc.report.verdict == Verdict::indeterminate;
        for (const auto& v : fc.report.violations)
            lc.overall.violations.push_back(
                {f.label + ":" + v.left, f.label + ":" + v.right, v.bound, v.observed});
        lc.overall.uncovered_count += fc.report.uncovered_count;
        if (fc.report.verdict == Verdict::indeterminate)
            lc.overall.notes.push_back("factor " + std::to_string(f.multiplicity) + "*" +
                                       f.label + " has uncovered sectors");
        lc.factors.push_back(std::move(fc));
    }
    lc.overall.verdict =
        any_fail ? Verdict::fail : (any_indet ? Verdict::indeterminate : Verdict::pass);
    return lc;
}

LocalCheck check_local_multiplicativity(const FiberModel& model, const PointSpec& x,
                                        long long guard) {
    return check_local_multiplicativity(local_fiber(model, x, guard));
}

DichotomyReport dichotomy_report(const FiberModel& model, const PointSpec& x, long long guard) {
    validate_fiber_model(model);
    if (!model.declared_genus)
        throw Error(ErrorKind::MissingGenus,
                    "dichotomy needs a declared genus on the fiber model");
    DichotomyReport r;
    r.point = x.str();
    r.in_diagonal = x.in_diagonal();
    r.declared_genus = *model.declared_genus;
    r.expected = (!r.in_diagonal || r.declared_genus == 1) ? "multiplicative"
                                                           : "non-multiplicative";
    r.detail = check_local_multiplicativity(model, x, guard);
    r.computed = r.detail.overall.verdict;
    if (r.computed == Verdict::indeterminate)
        r.agreement = "indeterminate";
    else if ((r.computed == Verdict::pass) == (r.expected == "multiplicative"))
        r.agreement = "agrees";
    else
        r.agreement = "disagrees";

    long long h1 = 0;
    for (const auto& b : model.fiber_ring.basis)
        if (b.degree == 1)
            ++h1;
    if (h1 != 2LL * r.declared_genus)
        r.notes.push_back("declared genus " + std::to_string(r.declared_genus) +
                          " but dim H^1 of the fiber ring is " + std::to_string(h1) +
                          "; the declaration wins");
    if (r.in_diagonal)
        r.notes.push_back("a diagonal point decides them all: multiplicativity there holds "
                          "exactly when the fiber has genus 1");
    else
        r.notes.push_back("points away from the diagonal are always multiplicative");
    r.notes.push_back("definite diagonal verdicts need cross-sector constants; none are "
                      "derived by the engine");
    return r;
}

} // namespace perv
