#include "perv/goettsche.hpp"

#include <algorithm>

#include "perv/errors.hpp"

namespace perv {

SectorSpace douady_space(const FilteredAlgebra& base, int n, long long guard) {
    if (n < 1)
        throw Error(ErrorKind::BadInvocation, "assembly needs n >= 1");
    SectorSpace s;
    s.name = "hilb(" + base.name + "," + std::to_string(n) + ")";
    s.n = n;
    s.base = base;

    if (n == 1) {
        Sector sec;
        sec.label = {Partition{{1}}, 0, 0};
        sec.inner = base;
        s.sectors.push_back(std::move(sec));
        s.assembled = base;
        s.sector_of.assign(static_cast<std::size_t>(base.dim()), 0);
        return s;
    }

    if (base.profile.defect != 1)
        throw Error(ErrorKind::ProfileMismatch,
                    "the shifted assembly needs a defect-1 base profile, '" + base.name +
                        "' has defect " + std::to_string(base.profile.defect));

    const auto parts = partitions_of(n);
    BigInt total(0);
    for (const auto& nu : parts)
        total += sym_nu_dim(base, nu);
    if (total > to_bigint(guard))
        throw Error(ErrorKind::GuardExceeded,
                    "assembly would have " + total.get_str() + " basis elements, guard is " +
                        std::to_string(guard));

    FilteredAlgebra& out = s.assembled;
    out.name = s.name;
    out.profile.dim_total = n * base.profile.dim_total;
    out.profile.dim_base = n * base.profile.dim_base;
    out.profile.defect = n * base.profile.defect;
    out.profile.fiber_dim = n * base.profile.fiber_dim;
    out.total = false;

    struct Raw {
        std::string id;
        int degree, grade, sector;
    };
    std::vector<Raw> raw;
    for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
        const Partition& nu = parts[static_cast<std::size_t>(p)];
        Sector sec;
        sec.label.nu = nu;
        sec.label.degree_shift = 2 * n - 2 * nu.length();
        sec.label.grade_shift = n - nu.length();
        sec.inner = sym_nu(base, nu, guard, /*with_products=*/false);
        for (const auto& b : sec.inner.basis) {
            Raw r;
            r.id = "ν=" + nu.str() + "|" + b.id;
            r.degree = b.degree + sec.label.degree_shift;
            r.grade = b.grade + sec.label.grade_shift;
            r.sector = p;
            if (r.grade < n - nu.length() || r.grade > n + nu.length() || r.grade < 0 ||
                r.grade > 2 * n)
                throw Error(ErrorKind::GradeOutOfRange,
                            "assembled grade " + std::to_string(r.grade) + " of '" + r.id +
                                "' leaves the sector window");
            raw.push_back(std::move(r));
        }
        s.sectors.push_back(std::move(sec));
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) { return x.id < y.id; });
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        const auto& r = raw[static_cast<std::size_t>(i)];
        out.basis.push_back({r.id, r.degree, r.grade});
        out.index.emplace(r.id, i);
        s.sector_of.push_back(r.sector);
    }
    return s;
}

void attach_product(SectorSpace& space, const ConstantsDesc& constants) {
    if (space.n < 2)
        throw Error(ErrorKind::BadInvocation,
                    "the length-1 assembly already carries the base product");
    if (constants.n != space.n)
        throw Error(ErrorKind::BadInvocation,
                    "constants target n=" + std::to_string(constants.n) + ", the assembly has n=" +
                        std::to_string(space.n));
    if (!constants.base.empty() && constants.base != space.base.name)
        throw Error(ErrorKind::BadInvocation, "constants are for base '" + constants.base +
                                                  "', the assembly uses '" + space.base.name +
                                                  "'");
    // run the full structural validation by rebuilding over the assembled basis
    AlgebraDesc desc;
    desc.name = space.assembled.name;
    desc.dim_total = space.assembled.profile.dim_total;
    desc.dim_base = space.assembled.profile.dim_base;
    desc.basis = space.assembled.basis;
    desc.total = constants.total;
    desc.products = constants.products;
    FilteredAlgebra built = build_algebra(desc);
    space.assembled.products = std::move(built.products);
    space.assembled.total = built.total;
}

CheckReport check_multiplicative(const SectorSpace& space) {
    CheckReport r = check_multiplicative(space.assembled);
    if (r.uncovered_count > 0 && space.n >= 2) {
        std::map<std::pair<int, int>, long long> by_sector;
        const int n = space.assembled.dim();
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (!space.assembled.product_known(i, j)) {
                    int a = space.sector_of[static_cast<std::size_t>(i)];
                    int b = space.sector_of[static_cast<std::size_t>(j)];
                    if (a > b)
                        std::swap(a, b);
                    ++by_sector[{a, b}];
                }
        for (const auto& [key, count] : by_sector)
            r.notes.push_back(
                "uncovered sector pair ν=" +
                space.sectors[static_cast<std::size_t>(key.first)].label.nu.str() + " × ν=" +
                space.sectors[static_cast<std::size_t>(key.second)].label.nu.str() + ": " +
                std::to_string(count) + " pair(s)");
    }
    return r;
}

PerversityTable perversity_table(const SectorSpace& space) {
    PerversityTable t;
    t.space = space.name;
    for (const auto& b : space.assembled.basis) {
        t.max_degree = std::max(t.max_degree, b.degree);
        t.max_grade = std::max(t.max_grade, b.grade);
    }
    t.dims.assign(static_cast<std::size_t>(t.max_degree) + 1,
                  std::vector<long long>(static_cast<std::size_t>(t.max_grade) + 1, 0));
    for (const auto& b : space.assembled.basis)
        ++t.dims[static_cast<std::size_t>(b.degree)][static_cast<std::size_t>(b.grade)];
    t.betti.assign(static_cast<std::size_t>(t.max_degree) + 1, 0);
    t.grade_dims.assign(static_cast<std::size_t>(t.max_grade) + 1, 0);
    for (int d = 0; d <= t.max_degree; ++d)
        for (int g = 0; g <= t.max_grade; ++g) {
            const long long v = t.dims[static_cast<std::size_t>(d)][static_cast<std::size_t>(g)];
            t.betti[static_cast<std::size_t>(d)] += v;
            t.grade_dims[static_cast<std::size_t>(g)] += v;
            t.total += v;
        }
    for (int p = 0; p < static_cast<int>(space.sectors.size()); ++p) {
        const Sector& sec = space.sectors[static_cast<std::size_t>(p)];
        PerversityTable::SectorBlock blk;
        blk.nu = sec.label.nu.str();
        blk.degree_shift = sec.label.degree_shift;
        blk.grade_shift = sec.label.grade_shift;
        blk.dim = sec.inner.dim();
        blk.dims.assign(static_cast<std::size_t>(t.max_degree) + 1,
                        std::vector<long long>(static_cast<std::size_t>(t.max_grade) + 1, 0));
        t.sectors.push_back(std::move(blk));
    }
    for (int i = 0; i < space.assembled.dim(); ++i) {
        const auto& b = space.assembled.basis[static_cast<std::size_t>(i)];
        auto& blk = t.sectors[static_cast<std::size_t>(space.sector_of[static_cast<std::size_t>(i)])];
        ++blk.dims[static_cast<std::size_t>(b.degree)][static_cast<std::size_t>(b.grade)];
    }
    return t;
}

std::vector<BigInt> goettsche_series(const FilteredAlgebra& base, int N) {
    if (N < 1)
        throw Error(ErrorKind::BadInvocation, "series needs N >= 1");
    long long even = 0, odd = 0;
    for (const auto& b : base.basis)
        (b.degree % 2 == 0 ? even : odd) += 1;

    // partition-sum route
    std::vector<BigInt> by_sectors(static_cast<std::size_t>(N) + 1);
    by_sectors[0] = 1;
    for (int n = 1; n <= N; ++n) {
        BigInt total(0);
        for (const auto& nu : partitions_of(n)) {
            BigInt prod(1);
            const auto mult = nu.multiplicities();
            for (std::size_t i = 1; i < mult.size(); ++i)
                if (mult[i] > 0)
                    prod *= super_sym_dim(even, odd, mult[i]);
            total += prod;
        }
        by_sectors[static_cast<std::size_t>(n)] = total;
    }

    // generating-function route: prod_i (1+q^i)^odd / (1-q^i)^even
    std::vector<BigInt> coeff(static_cast<std::size_t>(N) + 1);
    coeff[0] = 1;
    for (int i = 1; i <= N; ++i) {
        for (long long t = 0; t < odd; ++t)
            for (int m = N; m >= i; --m)
                coeff[static_cast<std::size_t>(m)] += coeff[static_cast<std::size_t>(m - i)];
        for (long long t = 0; t < even; ++t)
            for (int m = i; m <= N; ++m)
                coeff[static_cast<std::size_t>(m)] += coeff[static_cast<std::size_t>(m - i)];
    }

    for (int n = 0; n <= N; ++n)
        if (by_sectors[static_cast<std::size_t>(n)] != coeff[static_cast<std::size_t>(n)])
            throw Error(ErrorKind::OracleMismatch,
                        "sector sum " + by_sectors[static_cast<std::size_t>(n)].get_str() +
                            " and generating function " +
                            coeff[static_cast<std::size_t>(n)].get_str() + " differ at n=" +
                            std::to_string(n));
    return by_sectors;
}

} // namespace perv
