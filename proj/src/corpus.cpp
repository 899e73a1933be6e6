#include "perv/corpus.hpp"

#include <map>
#include <random>
#include <vector>

namespace perv {

namespace {

using Table = std::map<std::pair<int, int>, SparseVec>;

void add_into(SparseVec& acc, const SparseVec& v, const Rational& c) {
    for (const auto& [k, w] : v) {
        auto [it, fresh] = acc.emplace(k, w * c);
        if (!fresh) {
            it->second += w * c;
            if (it->second.is_zero())
                acc.erase(it);
        }
    }
}

SparseVec table_multiply(const Table& t, const SparseVec& x, const SparseVec& y) {
    SparseVec acc;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            auto it = t.find({i, j});
            if (it != t.end())
                add_into(acc, it->second, ci * cj);
        }
    return acc;
}

} // namespace

AlgebraDesc random_algebra_desc(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int defect = 1 + static_cast<int>(rng() % 2);
    const int max_deg = 2 * defect;
    const int dim = 4 + static_cast<int>(rng() % 3); // 4..6 including the unit

    AlgebraDesc desc;
    desc.name = "rnd" + std::to_string(seed);
    desc.dim_total = defect;
    desc.dim_base = 0;
    desc.total = true;
    desc.unit = "u";
    desc.basis.push_back({"u", 0, 0});
    std::vector<int> degree{0}, grade{0};
    for (int k = 1; k < dim; ++k) {
        // positive degrees keep the degree sums landing on actual targets
        const int d = 1 + static_cast<int>(rng() % max_deg);
        // skew grades toward 0 so that grade-additivity bounds bite
        const int g = rng() % 2 == 0 ? 0 : static_cast<int>(rng() % (2 * defect + 1));
        desc.basis.push_back({"e" + std::to_string(k), d, g});
        degree.push_back(d);
        grade.push_back(g);
    }

    // sparse random products among the non-unit elements, degree-additive,
    // mirrored with the Koszul sign
    Table table;
    for (int i = 1; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            if (i == j && degree[static_cast<std::size_t>(i)] % 2 != 0)
                continue;
            if (rng() % 4 == 0)
                continue;
            const int want =
                degree[static_cast<std::size_t>(i)] + degree[static_cast<std::size_t>(j)];
            std::vector<int> candidates;
            for (int k = 1; k < dim; ++k)
                if (degree[static_cast<std::size_t>(k)] == want)
                    candidates.push_back(k);
            if (candidates.empty())
                continue;
            SparseVec v;
            const int picks = 1 + static_cast<int>(rng() % 2);
            for (int p = 0; p < picks; ++p) {
                const int target = candidates[rng() % candidates.size()];
                static const long coeffs[] = {1, -1, 2, -2};
                add_into(v, SparseVec{{target, Rational(1)}}, Rational(coeffs[rng() % 4]));
            }
            if (v.empty())
                continue;
            table[{i, j}] = v;
            const bool both_odd = degree[static_cast<std::size_t>(i)] % 2 != 0 &&
                                  degree[static_cast<std::size_t>(j)] % 2 != 0;
            if (i != j) {
                SparseVec mirror;
                add_into(mirror, v, Rational(both_odd ? -1 : 1));
                table[{j, i}] = std::move(mirror);
            }
        }

    // repair: zero the two inner products of any non-associative triple until
    // every triple closes; each repair removes entries, so this terminates
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (int i = 1; i < dim && !dirty; ++i)
            for (int j = 1; j < dim && !dirty; ++j)
                for (int k = 1; k < dim && !dirty; ++k) {
                    SparseVec ei{{i, Rational(1)}}, ek{{k, Rational(1)}};
                    auto ij = table.find({i, j});
                    auto jk = table.find({j, k});
                    SparseVec lhs = ij == table.end() ? SparseVec{}
                                                      : table_multiply(table, ij->second, ek);
                    SparseVec rhs = jk == table.end() ? SparseVec{}
                                                      : table_multiply(table, ei, jk->second);
                    if (lhs != rhs) {
                        table.erase({i, j});
                        table.erase({j, i});
                        table.erase({j, k});
                        table.erase({k, j});
                        dirty = true;
                    }
                }
    }

    for (int i = 1; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            auto it = table.find({i, j});
            if (it == table.end() || it->second.empty())
                continue;
            ProductEntry e;
            e.left = desc.basis[static_cast<std::size_t>(i)].id;
            e.right = desc.basis[static_cast<std::size_t>(j)].id;
            for (const auto& [k, c] : it->second)
                e.value.emplace_back(desc.basis[static_cast<std::size_t>(k)].id, c);
            desc.products.push_back(std::move(e));
        }
    return desc;
}

} // namespace perv
