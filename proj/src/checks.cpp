#include "perv/checks.hpp"

#include <algorithm>

#include "perv/errors.hpp"

namespace perv {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

bool operator==(const Violation& a, const Violation& b) {
    return a.left == b.left && a.right == b.right && a.bound == b.bound &&
           a.observed == b.observed;
}

CheckReport check_multiplicative(const FilteredAlgebra& a) {
    CheckReport r;
    r.subject = "multiplicativity";
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const SparseVec* p = a.known_product(i, j);
            if (!p) {
                ++r.uncovered_count;
                if (static_cast<int>(r.uncovered_sample.size()) < uncovered_sample_limit)
                    r.uncovered_sample.emplace_back(a.basis[static_cast<std::size_t>(i)].id,
                                                    a.basis[static_cast<std::size_t>(j)].id);
                continue;
            }
            if (p->empty())
                continue;
            int observed = 0;
            for (const auto& [k, c] : *p) {
                (void)c;
                observed = std::max(observed, a.basis[static_cast<std::size_t>(k)].grade);
            }
            const int bound = a.basis[static_cast<std::size_t>(i)].grade +
                              a.basis[static_cast<std::size_t>(j)].grade;
            if (observed > bound)
                r.violations.push_back({a.basis[static_cast<std::size_t>(i)].id,
                                        a.basis[static_cast<std::size_t>(j)].id, bound,
                                        observed});
        }
    if (!r.violations.empty())
        r.verdict = Verdict::fail;
    else if (r.uncovered_count > 0)
        r.verdict = Verdict::indeterminate;
    else
        r.verdict = Verdict::pass;
    if (r.uncovered_count > 0)
        r.notes.push_back(std::to_string(r.uncovered_count) +
                          " basis pair(s) without product data");
    return r;
}

namespace {

// indices grouped by degree, ascending degree, indices in canonical order
std::map<int, std::vector<int>> degree_blocks(const FilteredAlgebra& a) {
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < a.dim(); ++i)
        blocks[a.basis[static_cast<std::size_t>(i)].degree].push_back(i);
    return blocks;
}

// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<std::vector<std::vector<Rational>>>
invert(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero())
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational d = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero())
                continue;
            const Rational f = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

std::vector<ClassVector> dual_basis(const FilteredAlgebra& a) {
    if (!a.has_integral())
        throw Error(ErrorKind::NoIntegral, "algebra '" + a.name + "' declares no integral");
    const int top = 2 * a.profile.dim_total;
    std::vector<ClassVector> duals(static_cast<std::size_t>(a.dim()));
    auto blocks = degree_blocks(a);
    for (const auto& [d, block] : blocks) {
        if (d > top - d) {
            // handled from the complementary side, unless that side is empty
            if (blocks.count(top - d) == 0)
                throw Error(ErrorKind::DegeneratePairing,
                            "degree block " + std::to_string(d) +
                                " has no complementary block at degree " +
                                std::to_string(top - d));
            continue;
        }
        auto it = blocks.find(top - d);
        const std::vector<int> empty;
        const std::vector<int>& coblock = (it == blocks.end()) ? empty : it->second;
        if (coblock.size() != block.size())
            throw Error(ErrorKind::DegeneratePairing,
                        "degree blocks " + std::to_string(d) + " and " + std::to_string(top - d) +
                            " have dimensions " + std::to_string(block.size()) + " and " +
                            std::to_string(coblock.size()));
        const std::size_t m = block.size();
        // pairing[r][c] = integral(coblock[r] * block[c])
        std::vector<std::vector<Rational>> pairing(m, std::vector<Rational>(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                SparseVec x{{coblock[r], Rational(1)}};
                SparseVec y{{block[c], Rational(1)}};
                auto prod = try_multiply(a, x, y);
                if (!prod)
                    throw Error(ErrorKind::MissingProduct,
                                "pairing needs product (" +
                                    a.basis[static_cast<std::size_t>(coblock[r])].id + "," +
                                    a.basis[static_cast<std::size_t>(block[c])].id + ")");
                pairing[r][c] = integrate(a, *prod);
            }
        auto inv = invert(pairing);
        if (!inv)
            throw Error(ErrorKind::DegeneratePairing,
                        "pairing between degrees " + std::to_string(d) + " and " +
                            std::to_string(top - d) + " is singular");
        // beta^{block[c]} = sum_r inv[c][r] * coblock[r]
        for (std::size_t c = 0; c < m; ++c) {
            ClassVector v;
            v.owner = &a;
            for (std::size_t r = 0; r < m; ++r)
                if (!(*inv)[c][r].is_zero())
                    v.terms.emplace(coblock[r], (*inv)[c][r]);
            duals[static_cast<std::size_t>(block[c])] = std::move(v);
        }
        if (d != top - d) {
            // the transpose solve for the complementary block
            std::vector<std::vector<Rational>> copairing(m, std::vector<Rational>(m));
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) {
                    SparseVec x{{block[r], Rational(1)}};
                    SparseVec y{{coblock[c], Rational(1)}};
                    auto prod = try_multiply(a, x, y);
                    if (!prod)
                        throw Error(ErrorKind::MissingProduct,
                                    "pairing needs product (" +
                                        a.basis[static_cast<std::size_t>(block[r])].id + "," +
                                        a.basis[static_cast<std::size_t>(coblock[c])].id + ")");
                    copairing[r][c] = integrate(a, *prod);
                }
            auto coinv = invert(copairing);
            if (!coinv)
                throw Error(ErrorKind::DegeneratePairing,
                            "pairing between degrees " + std::to_string(top - d) + " and " +
                                std::to_string(d) + " is singular");
            for (std::size_t c = 0; c < m; ++c) {
                ClassVector v;
                v.owner = &a;
                for (std::size_t r = 0; r < m; ++r)
                    if (!(*coinv)[c][r].is_zero())
                        v.terms.emplace(block[r], (*coinv)[c][r]);
                duals[static_cast<std::size_t>(coblock[c])] = std::move(v);
            }
        }
    }
    return duals;
}

DiagonalDecomposition diagonal_decomposition(const FilteredAlgebra& a) {
    auto duals = dual_basis(a);
    DiagonalDecomposition d;
    for (int i = 0; i < a.dim(); ++i)
        d.terms.push_back({duals[static_cast<std::size_t>(i)], basis_vector(a, i)});
    return d;
}

CheckReport check_duality(const FilteredAlgebra& a) {
    CheckReport r;
    r.subject = "duality";
    const int two_r = 2 * a.profile.defect;
    const int top = 2 * a.profile.dim_total;
    std::vector<ClassVector> duals;
    try {
        duals = dual_basis(a);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NoIntegral)
            throw;
        if (e.kind() == ErrorKind::MissingProduct) {
            r.verdict = Verdict::indeterminate;
            r.notes.push_back(e.what());
            return r;
        }
        // a structural defect of the pairing, recorded per degree block
        auto blocks = degree_blocks(a);
        for (const auto& [d, block] : blocks) {
            if (d > top - d)
                continue;
            auto it = blocks.find(top - d);
            const long long codim = it == blocks.end() ? 0 : static_cast<long long>(it->second.size());
            if (codim != static_cast<long long>(block.size()))
                r.violations.push_back({"degree " + std::to_string(d),
                                        "degree " + std::to_string(top - d),
                                        static_cast<int>(block.size()),
                                        static_cast<int>(codim)});
        }
        if (r.violations.empty())
            // matched dimensions, so the matrix itself is singular
            r.violations.push_back({"pairing", "singular block", 0, 0});
        r.verdict = Verdict::fail;
        r.notes.push_back(e.what());
        return r;
    }
    for (int i = 0; i < a.dim(); ++i) {
        const auto& b = a.basis[static_cast<std::size_t>(i)];
        const auto& dual = duals[static_cast<std::size_t>(i)].terms;
        int lo = -1, hi = -1;
        for (const auto& [k, c] : dual) {
            (void)c;
            const int g = a.basis[static_cast<std::size_t>(k)].grade;
            lo = lo < 0 ? g : std::min(lo, g);
            hi = std::max(hi, g);
        }
        if (lo != hi) {
            r.violations.push_back({b.id, "dual", two_r - b.grade, hi});
            r.notes.push_back("dual of '" + b.id + "' mixes grades " + std::to_string(lo) +
                              ".." + std::to_string(hi));
            continue;
        }
        if (b.grade + hi != two_r)
            r.violations.push_back({b.id, "dual", two_r, b.grade + hi});
    }
    r.verdict = r.violations.empty() ? Verdict::pass : Verdict::fail;
    return r;
}

} // namespace perv
