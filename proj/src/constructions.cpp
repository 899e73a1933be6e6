#include "perv/constructions.hpp"

#include <algorithm>

#include "perv/errors.hpp"

namespace perv {

namespace {

void guard_dimension(const BigInt& dim, long long guard) {
    if (dim > to_bigint(guard))
        throw Error(ErrorKind::GuardExceeded,
                    "construction would have " + dim.get_str() +
                        " basis elements, guard is " + std::to_string(guard));
}

FibrationProfile sum_profiles(const std::vector<const FilteredAlgebra*>& factors) {
    FibrationProfile p;
    for (const auto* f : factors) {
        p.dim_total += f->profile.dim_total;
        p.dim_base += f->profile.dim_base;
        p.defect += f->profile.defect;
        p.fiber_dim += f->profile.fiber_dim;
    }
    return p;
}

// sign of sorting the word into weakly increasing order, counting only
// transpositions of two odd-degree entries
int word_sign(const FilteredAlgebra& base, const std::vector<int>& word) {
    int inversions = 0;
    for (std::size_t p = 0; p < word.size(); ++p) {
        if (base.basis[static_cast<std::size_t>(word[p])].degree % 2 == 0)
            continue;
        for (std::size_t q = p + 1; q < word.size(); ++q) {
            if (base.basis[static_cast<std::size_t>(word[q])].degree % 2 == 0)
                continue;
            if (word[p] > word[q])
                ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<std::vector<int>, int>> orbit_words(const FilteredAlgebra& base,
                                                          std::vector<int> sorted) {
    std::vector<std::pair<std::vector<int>, int>> out;
    std::vector<int> w = sorted;
    do {
        out.emplace_back(w, word_sign(base, w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace

FilteredAlgebra tensor_product(const std::vector<const FilteredAlgebra*>& factors,
                               const IdJoiner& join, const std::string& name,
                               long long guard, bool with_products,
                               std::vector<std::vector<int>>* tuples_out) {
    if (factors.empty())
        throw Error(ErrorKind::BadInvocation, "tensor product needs at least one factor");
    const std::size_t m = factors.size();

    BigInt dim(1);
    for (const auto* f : factors)
        dim *= f->dim();
    guard_dimension(dim, guard);

    FilteredAlgebra out;
    out.name = name;
    out.profile = sum_profiles(factors);
    out.total = std::all_of(factors.begin(), factors.end(),
                            [](const FilteredAlgebra* f) { return f->total; });

    // basis: odometer over component indices
    struct Raw {
        std::string id;
        int degree, grade;
        std::vector<int> tuple;
    };
    std::vector<Raw> raw;
    raw.reserve(static_cast<std::size_t>(dim.get_ui()));
    std::vector<int> tuple(m, 0);
    for (;;) {
        Raw r;
        r.tuple = tuple;
        r.degree = 0;
        r.grade = 0;
        std::vector<std::string> ids(m);
        for (std::size_t k = 0; k < m; ++k) {
            const auto& b = factors[k]->basis[static_cast<std::size_t>(tuple[k])];
            ids[k] = b.id;
            r.degree += b.degree;
            r.grade += b.grade;
        }
        r.id = join(ids);
        raw.push_back(std::move(r));
        std::size_t k = m;
        while (k > 0) {
            --k;
            if (++tuple[k] < factors[k]->dim())
                break;
            tuple[k] = 0;
            if (k == 0) {
                k = m + 1; // done marker
                break;
            }
        }
        if (k == m + 1)
            break;
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) { return x.id < y.id; });

    std::map<std::vector<int>, int> tuple_index;
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        const auto& r = raw[static_cast<std::size_t>(i)];
        out.basis.push_back({r.id, r.degree, r.grade});
        if (!out.index.emplace(r.id, i).second)
            throw Error(ErrorKind::DuplicateId, "tensor id '" + r.id + "' is not unique");
        tuple_index.emplace(r.tuple, i);
    }
    if (tuples_out) {
        tuples_out->clear();
        for (const auto& r : raw)
            tuples_out->push_back(r.tuple);
    }

    // unit and integral, when every factor provides one
    if (std::all_of(factors.begin(), factors.end(),
                    [](const FilteredAlgebra* f) { return f->unit.has_value(); })) {
        std::vector<int> u(m);
        for (std::size_t k = 0; k < m; ++k)
            u[k] = *factors[k]->unit;
        out.unit = tuple_index.at(u);
    }
    if (std::all_of(factors.begin(), factors.end(),
                    [](const FilteredAlgebra* f) { return f->has_integral(); })) {
        SparseVec f;
        std::function<void(std::size_t, std::vector<int>&, Rational)> rec =
            [&](std::size_t k, std::vector<int>& t, Rational w) {
                if (k == m) {
                    f.emplace(tuple_index.at(t), w);
                    return;
                }
                for (const auto& [idx, c] : *factors[k]->integral) {
                    t[static_cast<std::size_t>(k)] = idx;
                    rec(k + 1, t, w * c);
                }
            };
        std::vector<int> t(m, 0);
        rec(0, t, Rational(1));
        out.integral = std::move(f);
    }

    if (with_products) {
        // combine the known structure constants of every factor
        std::vector<std::vector<const std::pair<const std::pair<int, int>, SparseVec>*>> entries(m);
        for (std::size_t k = 0; k < m; ++k)
            for (const auto& e : factors[k]->products)
                entries[k].push_back(&e);

        std::vector<std::size_t> pick(m, 0);
        bool any_empty =
            std::any_of(entries.begin(), entries.end(), [](const auto& v) { return v.empty(); });
        if (!any_empty)
            for (;;) {
                std::vector<int> left(m), right(m);
                int sign = 1;
                for (std::size_t k = 0; k < m; ++k) {
                    const auto& e = *entries[k][pick[k]];
                    left[k] = e.first.first;
                    right[k] = e.first.second;
                }
                // Koszul: right component k moves past left components l > k
                for (std::size_t k = 0; k + 1 < m; ++k) {
                    const int dy = factors[k]->basis[static_cast<std::size_t>(right[k])].degree;
                    if (dy % 2 == 0)
                        continue;
                    for (std::size_t l = k + 1; l < m; ++l) {
                        const int dx =
                            factors[l]->basis[static_cast<std::size_t>(left[l])].degree;
                        if (dx % 2 != 0)
                            sign = -sign;
                    }
                }
                // tensor of the component values
                SparseVec value;
                {
                    std::function<void(std::size_t, std::vector<int>&, Rational)> rec =
                        [&](std::size_t k, std::vector<int>& t, Rational w) {
                            if (k == m) {
                                value.emplace(tuple_index.at(t), w);
                                return;
                            }
                            for (const auto& [idx, c] : entries[k][pick[k]]->second) {
                                t[static_cast<std::size_t>(k)] = idx;
                                rec(k + 1, t, w * c);
                            }
                        };
                    std::vector<int> t(m, 0);
                    rec(0, t, sign == 1 ? Rational(1) : Rational(-1));
                }
                if (!(out.total && value.empty()))
                    out.products.emplace(
                        std::make_pair(tuple_index.at(left), tuple_index.at(right)),
                        std::move(value));
                std::size_t k = m;
                bool done = true;
                while (k > 0) {
                    --k;
                    if (++pick[k] < entries[k].size()) {
                        done = false;
                        break;
                    }
                    pick[k] = 0;
                }
                if (done)
                    break;
            }
    }

    return out;
}

FilteredAlgebra kunneth_product(const FilteredAlgebra& a, const FilteredAlgebra& b,
                                long long guard) {
    IdJoiner join = [](const std::vector<std::string>& ids) {
        return "(" + ids[0] + "," + ids[1] + ")";
    };
    return tensor_product({&a, &b}, join, "(" + a.name + "⊗" + b.name + ")", guard, true);
}

TensorPowerData tensor_power_data(const FilteredAlgebra& a, int n, long long guard) {
    if (n < 1)
        throw Error(ErrorKind::BadInvocation, "tensor power needs n >= 1");
    IdJoiner join = [](const std::vector<std::string>& ids) {
        std::string s = "(";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i)
                s += ',';
            s += ids[i];
        }
        s += ')';
        return s;
    };
    TensorPowerData t;
    std::vector<const FilteredAlgebra*> factors(static_cast<std::size_t>(n), &a);
    t.algebra = tensor_product(factors, join, a.name + "^(x)" + std::to_string(n), guard, true,
                               &t.tuples);
    for (int i = 0; i < static_cast<int>(t.tuples.size()); ++i)
        t.tuple_index.emplace(t.tuples[static_cast<std::size_t>(i)], i);
    return t;
}

BigInt super_sym_dim(long long even_count, long long odd_count, int n) {
    BigInt total(0);
    for (int k = 0; k <= n; ++k) {
        if (k > odd_count)
            break;
        BigInt choose_odd;
        mpz_bin_uiui(choose_odd.get_mpz_t(), static_cast<unsigned long>(odd_count),
                     static_cast<unsigned long>(k));
        const int rest = n - k;
        BigInt choose_even;
        if (rest == 0)
            choose_even = 1;
        else if (even_count == 0)
            choose_even = 0;
        else
            mpz_bin_uiui(choose_even.get_mpz_t(),
                         static_cast<unsigned long>(even_count + rest - 1),
                         static_cast<unsigned long>(rest));
        total += choose_odd * choose_even;
    }
    return total;
}

BigInt sym_power_dim(const FilteredAlgebra& a, int n) {
    long long even = 0, odd = 0;
    for (const auto& b : a.basis)
        (b.degree % 2 == 0 ? even : odd) += 1;
    return super_sym_dim(even, odd, n);
}

BigInt sym_nu_dim(const FilteredAlgebra& a, const Partition& nu) {
    BigInt d(1);
    const auto mult = nu.multiplicities();
    for (std::size_t i = 1; i < mult.size(); ++i)
        if (mult[i] > 0)
            d *= sym_power_dim(a, mult[i]);
    return d;
}

SparseVec sym_embedding(const FilteredAlgebra& base, const std::vector<int>& multiset,
                        const TensorPowerData& t) {
    SparseVec v;
    for (const auto& [word, sign] : orbit_words(base, multiset))
        v.emplace(t.tuple_index.at(word), Rational(sign));
    return v;
}

SymPowerData sym_power_data(const FilteredAlgebra& a, int n, long long guard,
                            bool with_products) {
    if (n < 1)
        throw Error(ErrorKind::BadInvocation, "sym power needs n >= 1");
    guard_dimension(sym_power_dim(a, n), guard);

    SymPowerData s;
    FilteredAlgebra& out = s.algebra;
    out.name = "sym^" + std::to_string(n) + "(" + a.name + ")";
    out.total = a.total;
    out.profile.dim_total = n * a.profile.dim_total;
    out.profile.dim_base = n * a.profile.dim_base;
    out.profile.defect = n * a.profile.defect;
    out.profile.fiber_dim = n * a.profile.fiber_dim;

    // multisets, ascending, odd-degree entries distinct
    struct Raw {
        std::string id;
        int degree, grade;
        std::vector<int> tuple;
    };
    std::vector<Raw> raw;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == n) {
            Raw r;
            r.tuple = cur;
            r.degree = 0;
            r.grade = 0;
            std::string id = "{";
            for (std::size_t p = 0; p < cur.size(); ++p) {
                const auto& b = a.basis[static_cast<std::size_t>(cur[p])];
                if (p)
                    id += ',';
                id += b.id;
                r.degree += b.degree;
                r.grade += b.grade;
            }
            id += '}';
            r.id = std::move(id);
            raw.push_back(std::move(r));
            return;
        }
        for (int i = start; i < a.dim(); ++i) {
            cur.push_back(i);
            rec(a.basis[static_cast<std::size_t>(i)].degree % 2 == 0 ? i : i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) { return x.id < y.id; });
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        const auto& r = raw[static_cast<std::size_t>(i)];
        out.basis.push_back({r.id, r.degree, r.grade});
        out.index.emplace(r.id, i);
        s.multisets.push_back(r.tuple);
    }

    if (a.unit) {
        std::vector<int> u(static_cast<std::size_t>(n), *a.unit);
        auto it = std::find(s.multisets.begin(), s.multisets.end(), u);
        if (it != s.multisets.end())
            out.unit = static_cast<int>(it - s.multisets.begin());
    }

    if (a.has_integral()) {
        SparseVec f;
        for (int i = 0; i < static_cast<int>(s.multisets.size()); ++i) {
            Rational w;
            for (const auto& [word, sign] : orbit_words(a, s.multisets[static_cast<std::size_t>(i)])) {
                Rational term(sign);
                bool zero = false;
                for (int k : word) {
                    auto it = a.integral->find(k);
                    if (it == a.integral->end()) {
                        zero = true;
                        break;
                    }
                    term *= it->second;
                }
                if (!zero)
                    w += term;
            }
            if (!w.is_zero())
                f.emplace(i, w);
        }
        out.integral = std::move(f);
    }

    if (with_products) {
        guard_dimension([&] {
            BigInt d(1);
            for (int k = 0; k < n; ++k)
                d *= a.dim();
            return d;
        }(), guard);
        TensorPowerData t = tensor_power_data(a, n, guard);
        std::vector<SparseVec> embedded;
        embedded.reserve(s.multisets.size());
        for (const auto& mset : s.multisets)
            embedded.push_back(sym_embedding(a, mset, t));
        const int dim = out.dim();
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                auto prod = try_multiply(t.algebra, embedded[static_cast<std::size_t>(i)],
                                         embedded[static_cast<std::size_t>(j)]);
                if (!prod)
                    continue; // unknown in a partial base
                SparseVec value;
                for (int k = 0; k < dim; ++k) {
                    auto it = prod->find(
                        t.tuple_index.at(s.multisets[static_cast<std::size_t>(k)]));
                    if (it != prod->end())
                        value.emplace(k, it->second);
                }
                if (!(out.total && value.empty()))
                    out.products.emplace(std::make_pair(i, j), std::move(value));
            }
    }

    return s;
}

FilteredAlgebra sym_power(const FilteredAlgebra& a, int n, long long guard) {
    return sym_power_data(a, n, guard, true).algebra;
}

FilteredAlgebra sym_nu(const FilteredAlgebra& a, const Partition& nu, long long guard,
                       bool with_products) {
    const auto mult = nu.multiplicities();
    std::vector<SymPowerData> parts;
    for (std::size_t i = 1; i < mult.size(); ++i)
        if (mult[i] > 0)
            parts.push_back(sym_power_data(a, mult[i], guard, with_products));
    std::vector<const FilteredAlgebra*> factors;
    for (const auto& p : parts)
        factors.push_back(&p.algebra);
    IdJoiner join = [](const std::vector<std::string>& ids) {
        std::string s;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i)
                s += '|';
            s += ids[i];
        }
        return s;
    };
    return tensor_product(factors, join, "sym_nu(" + a.name + "," + nu.str() + ")", guard,
                          with_products);
}

int verify_sym_descent(const FilteredAlgebra& base, const SymPowerData& s,
                       const TensorPowerData& t) {
    for (int i = 0; i < s.algebra.dim(); ++i) {
        const SparseVec v = sym_embedding(base, s.multisets[static_cast<std::size_t>(i)], t);
        int g = 0;
        for (const auto& [k, c] : v) {
            (void)c;
            g = std::max(g, t.algebra.basis[static_cast<std::size_t>(k)].grade);
        }
        if (g != s.algebra.basis[static_cast<std::size_t>(i)].grade)
            throw Error(ErrorKind::OracleMismatch,
                        "descended grade of '" + s.algebra.basis[static_cast<std::size_t>(i)].id +
                            "' is " + std::to_string(s.algebra.basis[static_cast<std::size_t>(i)].grade) +
                            " but the orbit sum sits in grade " + std::to_string(g));
    }
    return s.algebra.dim();
}

} // namespace perv
