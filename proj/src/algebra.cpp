#include "perv/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "perv/errors.hpp"

namespace perv {

FibrationProfile FibrationProfile::equidimensional(int dim_total, int dim_base) {
    if (dim_total < 0 || dim_base < 0 || dim_total < dim_base)
        throw Error(ErrorKind::ProfileMismatch,
                    "profile needs 0 <= dim_base <= dim_total, got dim_total=" +
                        std::to_string(dim_total) + " dim_base=" + std::to_string(dim_base));
    FibrationProfile p;
    p.dim_total = dim_total;
    p.dim_base = dim_base;
    p.defect = dim_total - dim_base;
    p.fiber_dim = p.defect;
    return p;
}

int FilteredAlgebra::index_of(std::string_view id) const {
    auto it = index.find(id);
    if (it == index.end())
        throw Error(ErrorKind::UnknownId,
                    "no basis element '" + std::string(id) + "' in algebra '" + name + "'");
    return it->second;
}

bool FilteredAlgebra::product_known(int i, int j) const {
    return total || products.count({i, j}) > 0;
}

const SparseVec* FilteredAlgebra::known_product(int i, int j) const {
    static const SparseVec zero;
    auto it = products.find({i, j});
    if (it != products.end())
        return &it->second;
    return total ? &zero : nullptr;
}

std::vector<long long> FilteredAlgebra::betti() const {
    int top = 0;
    for (const auto& b : basis)
        top = std::max(top, b.degree);
    std::vector<long long> out(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& b : basis)
        ++out[static_cast<std::size_t>(b.degree)];
    return out;
}

std::map<std::pair<int, int>, long long> FilteredAlgebra::census() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& b : basis)
        ++out[{b.degree, b.grade}];
    return out;
}

bool operator==(const ClassVector& a, const ClassVector& b) {
    return a.owner == b.owner && a.terms == b.terms;
}

namespace {

void check_owner(const FilteredAlgebra& a, const ClassVector& x, const char* what) {
    if (x.owner != &a)
        throw Error(ErrorKind::ForeignVector,
                    std::string(what) + " vector is not owned by algebra '" + a.name + "'");
}

int koszul_sign(int deg_x, int deg_y) {
    return (deg_x % 2 != 0 && deg_y % 2 != 0) ? -1 : 1;
}

SparseVec desc_value_to_vec(const FilteredAlgebra& a, const ProductEntry& e) {
    SparseVec v;
    for (const auto& [id, c] : e.value) {
        int k = a.index_of(id);
        if (c.is_zero())
            continue;
        auto [it, fresh] = v.emplace(k, c);
        if (!fresh)
            throw Error(ErrorKind::DuplicateId, "value of (" + e.left + "," + e.right +
                                                    ") lists '" + id + "' twice");
    }
    return v;
}

SparseVec negate(const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v)
        out.emplace(k, -c);
    return out;
}

} // namespace

FilteredAlgebra build_algebra(const AlgebraDesc& desc) {
    FilteredAlgebra a;
    a.name = desc.name;
    a.profile = FibrationProfile::equidimensional(desc.dim_total, desc.dim_base);
    a.total = desc.total;
    a.genus = desc.genus;

    a.basis = desc.basis;
    std::sort(a.basis.begin(), a.basis.end(),
              [](const BasisElement& x, const BasisElement& y) { return x.id < y.id; });
    for (int i = 0; i < a.dim(); ++i) {
        const auto& b = a.basis[static_cast<std::size_t>(i)];
        if (b.id.empty())
            throw Error(ErrorKind::SyntaxError, "empty basis id");
        if (!a.index.emplace(b.id, i).second)
            throw Error(ErrorKind::DuplicateId, "basis id '" + b.id + "' declared twice");
        if (b.degree < 0)
            throw Error(ErrorKind::DegreeMismatch, "basis element '" + b.id + "' has negative degree");
        if (b.grade < 0 || b.grade > 2 * a.profile.defect)
            throw Error(ErrorKind::GradeOutOfRange,
                        "basis element '" + b.id + "' has grade " + std::to_string(b.grade) +
                            " outside [0, " + std::to_string(2 * a.profile.defect) + "]");
    }

    if (desc.unit) {
        int u = a.index_of(*desc.unit);
        const auto& b = a.basis[static_cast<std::size_t>(u)];
        if (b.degree != 0 || b.grade != 0)
            throw Error(ErrorKind::UnitViolation,
                        "unit '" + b.id + "' must have degree 0 and grade 0");
        a.unit = u;
    }

    // declared products, checked for degree additivity and grade range
    for (const auto& e : desc.products) {
        int i = a.index_of(e.left);
        int j = a.index_of(e.right);
        SparseVec v = desc_value_to_vec(a, e);
        const int want = a.basis[static_cast<std::size_t>(i)].degree +
                         a.basis[static_cast<std::size_t>(j)].degree;
        for (const auto& [k, c] : v) {
            (void)c;
            if (a.basis[static_cast<std::size_t>(k)].degree != want)
                throw Error(ErrorKind::DegreeMismatch,
                            "product (" + e.left + "," + e.right + ") contains '" +
                                a.basis[static_cast<std::size_t>(k)].id + "' of degree " +
                                std::to_string(a.basis[static_cast<std::size_t>(k)].degree) +
                                ", expected " + std::to_string(want));
        }
        if (!a.products.emplace(std::make_pair(i, j), std::move(v)).second)
            throw Error(ErrorKind::DuplicateId,
                        "product (" + e.left + "," + e.right + ") declared twice");
    }

    // graded commutativity: fill the missing orientation, verify when both given
    {
        std::vector<std::pair<std::pair<int, int>, SparseVec>> fills;
        for (const auto& [key, v] : a.products) {
            auto [i, j] = key;
            const int s = koszul_sign(a.basis[static_cast<std::size_t>(i)].degree,
                                      a.basis[static_cast<std::size_t>(j)].degree);
            SparseVec mirror = s == 1 ? v : negate(v);
            auto it = a.products.find({j, i});
            if (it == a.products.end()) {
                fills.emplace_back(std::make_pair(j, i), std::move(mirror));
            } else if (it->second != mirror) {
                throw Error(ErrorKind::CommutativityViolation,
                            "products (" + a.basis[static_cast<std::size_t>(i)].id + "," +
                                a.basis[static_cast<std::size_t>(j)].id +
                                ") and the reverse orientation are not graded-commutative");
            }
        }
        for (auto& f : fills)
            a.products.emplace(std::move(f.first), std::move(f.second));
    }

    // odd squares vanish in characteristic zero
    for (int i = 0; i < a.dim(); ++i) {
        if (a.basis[static_cast<std::size_t>(i)].degree % 2 == 0)
            continue;
        auto it = a.products.find({i, i});
        if (it == a.products.end())
            a.products.emplace(std::make_pair(i, i), SparseVec{});
        else if (!it->second.empty())
            throw Error(ErrorKind::CommutativityViolation,
                        "odd-degree element '" + a.basis[static_cast<std::size_t>(i)].id +
                            "' has a nonzero square");
    }

    // unit acts as the identity; fill rows/columns that were not spelled out
    if (a.unit) {
        const int u = *a.unit;
        for (int i = 0; i < a.dim(); ++i) {
            SparseVec e{{i, Rational(1)}};
            for (auto key : {std::make_pair(u, i), std::make_pair(i, u)}) {
                auto it = a.products.find(key);
                if (it == a.products.end())
                    a.products.emplace(key, e);
                else if (it->second != e)
                    throw Error(ErrorKind::UnitViolation,
                                "unit product with '" + a.basis[static_cast<std::size_t>(i)].id +
                                    "' is not the identity action");
            }
        }
    }

    // drop explicit zeros when they are redundant
    if (a.total) {
        for (auto it = a.products.begin(); it != a.products.end();) {
            if (it->second.empty())
                it = a.products.erase(it);
            else
                ++it;
        }
    }

    if (desc.integral) {
        SparseVec f;
        const int top = 2 * a.profile.dim_total;
        for (const auto& [id, c] : *desc.integral) {
            int k = a.index_of(id);
            if (a.basis[static_cast<std::size_t>(k)].degree != top)
                throw Error(ErrorKind::DegreeMismatch,
                            "integral entry '" + id + "' has degree " +
                                std::to_string(a.basis[static_cast<std::size_t>(k)].degree) +
                                ", the integral lives on degree " + std::to_string(top));
            if (c.is_zero())
                continue;
            if (!f.emplace(k, c).second)
                throw Error(ErrorKind::DuplicateId, "integral lists '" + id + "' twice");
        }
        a.integral = std::move(f);
    }

    // associativity on all fully determined triples
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const SparseVec* ij = a.known_product(i, j);
            if (!ij)
                continue;
            for (int k = 0; k < a.dim(); ++k) {
                const SparseVec* jk = a.known_product(j, k);
                if (!jk)
                    continue;
                SparseVec xi{{i, Rational(1)}};
                SparseVec xk{{k, Rational(1)}};
                auto lhs = try_multiply(a, *ij, xk);
                auto rhs = try_multiply(a, xi, *jk);
                if (!lhs || !rhs)
                    continue;
                if (*lhs != *rhs)
                    throw Error(ErrorKind::AssociativityViolation,
                                "triple (" + a.basis[static_cast<std::size_t>(i)].id + "," +
                                    a.basis[static_cast<std::size_t>(j)].id + "," +
                                    a.basis[static_cast<std::size_t>(k)].id +
                                    ") is not associative");
            }
        }

    return a;
}

ClassVector make_vector(const FilteredAlgebra& a,
                        const std::vector<std::pair<std::string, Rational>>& terms) {
    ClassVector v;
    v.owner = &a;
    for (const auto& [id, c] : terms) {
        if (c.is_zero())
            continue;
        int k = a.index_of(id);
        auto [it, fresh] = v.terms.emplace(k, c);
        if (!fresh)
            it->second += c;
        if (it->second.is_zero())
            v.terms.erase(it);
    }
    return v;
}

ClassVector basis_vector(const FilteredAlgebra& a, int index) {
    ClassVector v;
    v.owner = &a;
    v.terms.emplace(index, Rational(1));
    return v;
}

void add_scaled(SparseVec& acc, const SparseVec& v, const Rational& c) {
    if (c.is_zero())
        return;
    for (const auto& [k, w] : v) {
        auto [it, fresh] = acc.emplace(k, w * c);
        if (!fresh) {
            it->second += w * c;
            if (it->second.is_zero())
                acc.erase(it);
        }
    }
}

ClassVector add(const ClassVector& x, const ClassVector& y) {
    if (x.owner != y.owner)
        throw Error(ErrorKind::ForeignVector, "adding vectors from different algebras");
    ClassVector out;
    out.owner = x.owner;
    out.terms = x.terms;
    add_scaled(out.terms, y.terms, Rational(1));
    return out;
}

ClassVector scale(const ClassVector& x, const Rational& c) {
    ClassVector out;
    out.owner = x.owner;
    if (!c.is_zero())
        for (const auto& [k, w] : x.terms)
            out.terms.emplace(k, w * c);
    return out;
}

std::optional<SparseVec> try_multiply(const FilteredAlgebra& a, const SparseVec& x,
                                      const SparseVec& y) {
    SparseVec acc;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            const SparseVec* p = a.known_product(i, j);
            if (!p)
                return std::nullopt;
            add_scaled(acc, *p, ci * cj);
        }
    return acc;
}

ClassVector multiply(const FilteredAlgebra& a, const ClassVector& x, const ClassVector& y) {
    check_owner(a, x, "left");
    check_owner(a, y, "right");
    ClassVector out;
    out.owner = &a;
    for (const auto& [i, ci] : x.terms)
        for (const auto& [j, cj] : y.terms) {
            const SparseVec* p = a.known_product(i, j);
            if (!p)
                throw Error(ErrorKind::MissingProduct,
                            "product (" + a.basis[static_cast<std::size_t>(i)].id + "," +
                                a.basis[static_cast<std::size_t>(j)].id +
                                ") is not covered in algebra '" + a.name + "'");
            add_scaled(out.terms, *p, ci * cj);
        }
    return out;
}

int perversity(const FilteredAlgebra& a, const ClassVector& x) {
    check_owner(a, x, "argument");
    if (x.terms.empty())
        throw Error(ErrorKind::ZeroVector, "the zero class lies in every P_k");
    int g = 0;
    for (const auto& [k, c] : x.terms) {
        (void)c;
        g = std::max(g, a.basis[static_cast<std::size_t>(k)].grade);
    }
    return g;
}

Rational integrate(const FilteredAlgebra& a, const SparseVec& x) {
    if (!a.integral)
        throw Error(ErrorKind::NoIntegral, "algebra '" + a.name + "' declares no integral");
    Rational out;
    for (const auto& [k, c] : x) {
        auto it = a.integral->find(k);
        if (it != a.integral->end())
            out += c * it->second;
    }
    return out;
}

std::string format_vector(const FilteredAlgebra& a, const SparseVec& v) {
    if (v.empty())
        return "0";
    std::string s;
    for (const auto& [k, c] : v) {
        if (!s.empty())
            s += " + ";
        const std::string& id = a.basis[static_cast<std::size_t>(k)].id;
        if (c == Rational(1))
            s += id;
        else if (c == Rational(-1))
            s += "-" + id;
        else
            s += c.str() + "*" + id;
    }
    return s;
}

} // namespace perv
