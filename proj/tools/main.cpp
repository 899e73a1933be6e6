#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "perv/corpus.hpp"
#include "perv/errors.hpp"
#include "perv/io.hpp"

namespace {

using nlohmann::json;
using namespace perv;

struct Common {
    std::string format = "text";
    bool lax = false;
    long long guard = default_guard;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_guard = true) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_flag("--lax", c.lax, "tolerate unknown keys in input files");
    if (with_guard)
        cmd->add_option("--guard", c.guard, "refuse constructions above this many basis elements");
}

int exit_code(Verdict v) {
    switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::indeterminate: return 3;
    }
    return 2;
}

int worst(int a, int b) {
    // 1 (fail) dominates 3 (indeterminate) dominates 0
    if (a == 1 || b == 1)
        return 1;
    if (a == 3 || b == 3)
        return 3;
    return a > b ? a : b;
}

void emit(const Common& c, const json& machine, const std::string& text) {
    if (c.format == "machine")
        std::cout << dump_json(machine);
    else
        std::cout << text;
}

PerversityTable algebra_table(const FilteredAlgebra& a) {
    SectorSpace s;
    s.name = a.name;
    s.n = 1;
    s.base = a;
    Sector sec;
    sec.label = {Partition{{1}}, 0, 0};
    sec.inner = a;
    s.sectors.push_back(std::move(sec));
    s.assembled = a;
    s.sector_of.assign(static_cast<std::size_t>(a.dim()), 0);
    return perversity_table(s);
}

int run_check(const std::string& path, const Common& c) {
    FilteredAlgebra a = build_algebra(load_algebra_file(path, c.lax));
    CheckReport mult = check_multiplicative(a);
    int code = exit_code(mult.verdict);

    json j;
    j["algebra"] = a.name;
    j["dim"] = a.dim();
    j["multiplicativity"] = report_json(mult);
    std::string text = "algebra: " + a.name + " (dim " + std::to_string(a.dim()) + ")\n" +
                       report_text(mult);

    if (a.has_integral()) {
        CheckReport dual = check_duality(a);
        code = worst(code, exit_code(dual.verdict));
        j["duality"] = report_json(dual);
        text += report_text(dual);
        if (dual.verdict == Verdict::pass) {
            DiagonalDecomposition dd = diagonal_decomposition(a);
            j["duality_data"] = duality_json(a, dd);
            text += "diagonal:";
            for (std::size_t i = 0; i < dd.terms.size(); ++i) {
                text += i ? " + " : " ";
                text += format_vector(a, dd.terms[i].co.terms) + "⊗" +
                        format_vector(a, dd.terms[i].primal.terms);
            }
            text += "\n";
        }
    } else {
        j["duality"] = "skipped (no integral declared)";
        text += "duality: skipped (no integral declared)\n";
    }
    j["exit"] = code;
    emit(c, j, text);
    return code;
}

int run_table(const std::string& path, const Common& c) {
    FilteredAlgebra a = build_algebra(load_algebra_file(path, c.lax));
    PerversityTable t = algebra_table(a);
    emit(c, table_json(t), table_text(t));
    return 0;
}

int run_sym(const std::string& path, int n, const Common& c) {
    FilteredAlgebra a = build_algebra(load_algebra_file(path, c.lax));
    SymPowerData s = sym_power_data(a, n, c.guard, /*with_products=*/true);
    TensorPowerData t = tensor_power_data(a, n, c.guard);
    const int checked = verify_sym_descent(a, s, t);
    CheckReport mult = check_multiplicative(s.algebra);

    SectorSpace wrap;
    wrap.name = s.algebra.name;
    wrap.n = 1;
    wrap.base = s.algebra;
    Sector sec;
    sec.label = {Partition{{n}}, 0, 0};
    sec.inner = s.algebra;
    wrap.sectors.push_back(std::move(sec));
    wrap.assembled = s.algebra;
    wrap.sector_of.assign(static_cast<std::size_t>(s.algebra.dim()), 0);
    PerversityTable table = perversity_table(wrap);

    json j;
    j["base"] = a.name;
    j["n"] = n;
    j["dim"] = s.algebra.dim();
    j["descent_checked"] = checked;
    j["table"] = table_json(table);
    j["multiplicativity"] = report_json(mult);
    std::string text = table_text(table) + "descent: ok (" + std::to_string(checked) +
                       " elements match the tensor-power grades)\n" + report_text(mult);
    emit(c, j, text);
    return exit_code(mult.verdict);
}

int run_kunneth_files(const std::string& pa, const std::string& pb, const Common& c) {
    FilteredAlgebra a = build_algebra(load_algebra_file(pa, c.lax));
    FilteredAlgebra b = build_algebra(load_algebra_file(pb, c.lax));
    FilteredAlgebra ab = kunneth_product(a, b, c.guard);
    CheckReport ra = check_multiplicative(a);
    CheckReport rb = check_multiplicative(b);
    CheckReport rab = check_multiplicative(ab);
    json j;
    j["factors"] = json::array({a.name, b.name});
    j["dim"] = ab.dim();
    j["betti"] = ab.betti();
    j["factor_verdicts"] = json::array({to_string(ra.verdict), to_string(rb.verdict)});
    j["multiplicativity"] = report_json(rab);
    std::string text = "product: " + ab.name + " (dim " + std::to_string(ab.dim()) + ")\n" +
                       "factor verdicts: " + to_string(ra.verdict) + ", " +
                       to_string(rb.verdict) + "\n" + report_text(rab);
    emit(c, j, text);
    return exit_code(rab.verdict);
}

int run_kunneth_random(int count, const Common& c) {
    int agreements = 0;
    json cases = json::array();
    std::string text;
    int passes = 0, fails = 0;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t sa = c.seed * 1000003ULL + 2ULL * static_cast<std::uint64_t>(i);
        const std::uint64_t sb = sa + 1;
        FilteredAlgebra a = build_algebra(random_algebra_desc(sa));
        FilteredAlgebra b = build_algebra(random_algebra_desc(sb));
        FilteredAlgebra ab = kunneth_product(a, b, c.guard);
        const Verdict va = check_multiplicative(a).verdict;
        const Verdict vb = check_multiplicative(b).verdict;
        const Verdict vab = check_multiplicative(ab).verdict;
        const bool both = va == Verdict::pass && vb == Verdict::pass;
        const bool agree = (vab == Verdict::pass) == both;
        (vab == Verdict::pass ? passes : fails) += 1;
        if (agree)
            ++agreements;
        else {
            json bad;
            bad["case"] = i;
            bad["seed_a"] = sa;
            bad["seed_b"] = sb;
            bad["verdict_a"] = to_string(va);
            bad["verdict_b"] = to_string(vb);
            bad["verdict_product"] = to_string(vab);
            cases.push_back(std::move(bad));
            text += "disagreement at case " + std::to_string(i) + "\n";
        }
    }
    json j;
    j["command"] = "kunneth-random";
    j["count"] = count;
    j["seed"] = c.seed;
    j["agreements"] = agreements;
    j["product_passes"] = passes;
    j["product_fails"] = fails;
    j["disagreements"] = std::move(cases);
    text = "random corpus: " + std::to_string(count) + " pairs, seed " +
           std::to_string(c.seed) + "\nagreements: " + std::to_string(agreements) + "/" +
           std::to_string(count) + " (product verdicts: " + std::to_string(passes) +
           " pass, " + std::to_string(fails) + " fail)\n" + text;
    emit(c, j, text);
    return agreements == count ? 0 : 1;
}

int run_hilb(const std::string& path, int n, const std::vector<std::string>& constants,
             const Common& c) {
    FilteredAlgebra a = build_algebra(load_algebra_file(path, c.lax));
    SectorSpace s = douady_space(a, n, c.guard);
    for (const auto& cp : constants)
        attach_product(s, load_constants_file(cp, c.lax));
    PerversityTable t = perversity_table(s);
    json j;
    j["base"] = a.name;
    j["n"] = n;
    j["total_dim"] = t.total;
    j["betti"] = t.betti;
    j["table"] = table_json(t);
    std::string text = table_text(t);
    int code = 0;
    if (!constants.empty()) {
        CheckReport r = check_multiplicative(s);
        j["multiplicativity"] = report_json(r);
        text += report_text(r);
        code = exit_code(r.verdict);
    }
    emit(c, j, text);
    return code;
}

int run_series(const std::string& path, int N, const Common& c) {
    FilteredAlgebra a = build_algebra(load_algebra_file(path, c.lax));
    std::vector<BigInt> series = goettsche_series(a, N);
    json arr = json::array();
    std::string text = "series:";
    for (const auto& v : series) {
        arr.push_back(v.get_str());
        text += " " + v.get_str();
    }
    text += "\noracle: match\n";
    json j;
    j["base"] = a.name;
    j["N"] = N;
    j["series"] = std::move(arr);
    j["oracle"] = "match";
    emit(c, j, text);
    return 0;
}

FiberModel assemble_model(const std::string& path, const std::vector<std::string>& constants,
                          const Common& c) {
    FiberModel m;
    m.fiber_ring = build_algebra(load_algebra_file(path, c.lax));
    m.declared_genus = m.fiber_ring.genus;
    for (const auto& cp : constants) {
        ConstantsDesc desc = load_constants_file(cp, c.lax);
        if (desc.n < 2)
            throw Error(ErrorKind::BadInvocation,
                        "fiber constants need n >= 2, '" + cp + "' has n=" +
                            std::to_string(desc.n));
        if (!m.hilbert_products.emplace(desc.n, std::move(desc)).second)
            throw Error(ErrorKind::BadInvocation,
                        "two constants files target n=" + std::to_string(desc.n));
    }
    return m;
}

int run_fiber(const std::string& path, const std::string& point, int n_flag,
              const std::vector<std::string>& constants, const Common& c) {
    FiberModel m = assemble_model(path, constants, c);
    PointSpec x = parse_point(point);
    if (n_flag > 0 && n_flag != x.n())
        throw Error(ErrorKind::BadInvocation, "-n " + std::to_string(n_flag) +
                                                  " does not match the point (n=" +
                                                  std::to_string(x.n()) + ")");
    FiberSpace fs = local_fiber(m, x, c.guard);
    LocalCheck lc = check_local_multiplicativity(fs);
    json j;
    j["point"] = x.str();
    j["nu"] = x.nu().str();
    j["n"] = x.n();
    j["in_diagonal"] = x.in_diagonal();
    j["dim"] = fs.assembled.dim();
    j["betti"] = fs.assembled.betti();
    j["check"] = local_check_json(lc);
    std::string text = "fiber over " + x.str() + " (nu=" + x.nu().str() + ", n=" +
                       std::to_string(x.n()) + ", " +
                       (x.in_diagonal() ? "in" : "off") + " diagonal)\n" + "dim: " +
                       std::to_string(fs.assembled.dim()) + "\n";
    for (const auto& f : lc.factors)
        text += report_text(f.report);
    text += report_text(lc.overall);
    emit(c, j, text);
    return exit_code(lc.overall.verdict);
}

int run_dichotomy(const std::string& path, const std::string& point,
                  const std::vector<std::string>& constants, const Common& c) {
    FiberModel m = assemble_model(path, constants, c);
    PointSpec x = parse_point(point);
    DichotomyReport r = dichotomy_report(m, x, c.guard);
    std::string text = "point: " + r.point + (r.in_diagonal ? " (diagonal)" : " (off-diagonal)") +
                       "\ndeclared genus: " + std::to_string(r.declared_genus) +
                       "\nexpected: " + r.expected + "\ncomputed: " + to_string(r.computed) +
                       "\nagreement: " + r.agreement + "\n";
    for (const auto& n : r.notes)
        text += "note: " + n + "\n";
    emit(c, dichotomy_json(r), text);
    if (r.agreement == "agrees")
        return 0;
    if (r.agreement == "disagrees")
        return 1;
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for perverse filtrations on symmetric and Hilbert-type assemblies"};
    app.require_subcommand(1);

    Common c;
    if (const char* env = std::getenv("PERV_GUARD"))
        c.guard = std::atoll(env);

    std::string path, path_b, point;
    std::vector<std::string> constants;
    int n = 0, N = 0, random_count = 0;

    CLI::App* check = app.add_subcommand("check", "validate an algebra and run its checks");
    check->add_option("file", path)->required();
    add_common(check, c, false);

    CLI::App* table = app.add_subcommand("table", "print the (degree, grade) census");
    table->add_option("file", path)->required();
    add_common(table, c, false);

    CLI::App* sym = app.add_subcommand("sym", "super-symmetric power with descent check");
    sym->add_option("file", path)->required();
    sym->add_option("-n", n, "power")->required();
    add_common(sym, c);

    CLI::App* kun = app.add_subcommand("kunneth", "tensor product of two algebras, or a seeded "
                                                  "random corpus with --random");
    kun->add_option("file", path);
    kun->add_option("file_b", path_b);
    kun->add_option("--random", random_count, "run this many seeded random pairs");
    kun->add_option("--seed", c.seed, "corpus seed");
    add_common(kun, c);

    CLI::App* hilb = app.add_subcommand("hilb", "partition-sector assembly of length n");
    hilb->add_option("file", path)->required();
    hilb->add_option("-n", n, "length")->required();
    hilb->add_option("--constants", constants, "attach structure constants");
    add_common(hilb, c);

    CLI::App* fiber = app.add_subcommand("fiber", "local fiber over a point with its checks");
    fiber->add_option("file", path)->required();
    fiber->add_option("--point", point, "point, e.g. \"2*x1+1*x2\"")->required();
    fiber->add_option("-n", n, "expected n (cross-checked)");
    fiber->add_option("--constants", constants, "attach structure constants per multiplicity");
    add_common(fiber, c);

    CLI::App* series = app.add_subcommand("series", "assembly dimensions for n <= N with "
                                                    "generating-function cross-check");
    series->add_option("file", path)->required();
    series->add_option("-N", N, "bound")->required();
    add_common(series, c, false);

    CLI::App* dich = app.add_subcommand("dichotomy", "expected vs computed multiplicativity "
                                                     "over a point");
    dich->add_option("file", path)->required();
    dich->add_option("--point", point)->required();
    dich->add_option("--constants", constants);
    add_common(dich, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // 0 is --help / --version
    }

    try {
        if (check->parsed())
            return run_check(path, c);
        if (table->parsed())
            return run_table(path, c);
        if (sym->parsed())
            return run_sym(path, n, c);
        if (kun->parsed()) {
            if (random_count > 0)
                return run_kunneth_random(random_count, c);
            if (path.empty() || path_b.empty())
                throw perv::Error(perv::ErrorKind::BadInvocation,
                                  "kunneth needs two files or --random <count>");
            return run_kunneth_files(path, path_b, c);
        }
        if (hilb->parsed())
            return run_hilb(path, n, constants, c);
        if (fiber->parsed())
            return run_fiber(path, point, n, constants, c);
        if (series->parsed())
            return run_series(path, N, c);
        if (dich->parsed())
            return run_dichotomy(path, point, constants, c);
    } catch (const perv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
