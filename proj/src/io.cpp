#include "perv/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "perv/errors.hpp"

namespace perv {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                                std::to_string(col) + ": " + e.what());
    }
}

void reject_unknown_keys(const json& obj, const std::vector<std::string>& known,
                         const std::string& where, bool lax) {
    if (lax)
        return;
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw Error(ErrorKind::UnknownKey, "'" + key + "' in " + where);
    }
}

bool is_token(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

std::string token_field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string())
        throw Error(ErrorKind::SyntaxError, where + " needs a string '" + key + "'");
    std::string s = it->get<std::string>();
    if (!is_token(s))
        throw Error(ErrorKind::SyntaxError,
                    "'" + s + "' in " + where + " is not an identifier token");
    return s;
}

int int_field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer())
        throw Error(ErrorKind::SyntaxError, where + " needs an integer '" + key + "'");
    const auto v = it->get<long long>();
    if (v < -1000000000LL || v > 1000000000LL)
        throw Error(ErrorKind::SyntaxError, "'" + std::string(key) + "' in " + where +
                                                " is out of range");
    return static_cast<int>(v);
}

Rational rational_value(const json& v, const std::string& where) {
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) {
        std::ostringstream os;
        os << v;
        return Rational::parse(os.str());
    }
    if (v.is_number_float())
        throw Error(ErrorKind::BadRational,
                    "floating literal in " + where + "; write rationals as \"p/q\" text");
    throw Error(ErrorKind::BadRational, "non-rational value in " + where);
}

std::vector<std::pair<std::string, Rational>> term_list(const json& arr,
                                                        const std::string& where) {
    if (!arr.is_array())
        throw Error(ErrorKind::SyntaxError, where + " must be an array of [id, rational] pairs");
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string())
            throw Error(ErrorKind::SyntaxError,
                        where + " must be an array of [id, rational] pairs");
        Rational c = rational_value(item[1], where);
        if (c.is_zero())
            continue;
        out.emplace_back(item[0].get<std::string>(), c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<ProductEntry> product_entries(const json& arr, bool token_ids, bool lax,
                                          const std::string& where) {
    if (!arr.is_array())
        throw Error(ErrorKind::SyntaxError, where + " must be an array");
    std::vector<ProductEntry> out;
    for (const auto& item : arr) {
        if (!item.is_object())
            throw Error(ErrorKind::SyntaxError, where + " entries must be objects");
        reject_unknown_keys(item, {"left", "right", "value"}, where + " entry", lax);
        ProductEntry e;
        auto get_side = [&](const char* key) {
            auto it = item.find(key);
            if (it == item.end() || !it->is_string())
                throw Error(ErrorKind::SyntaxError, where + " entry needs a string '" +
                                                        std::string(key) + "'");
            std::string s = it->get<std::string>();
            if (token_ids && !is_token(s))
                throw Error(ErrorKind::SyntaxError,
                            "'" + s + "' in " + where + " is not an identifier token");
            return s;
        };
        e.left = get_side("left");
        e.right = get_side("right");
        auto vit = item.find("value");
        if (vit == item.end())
            throw Error(ErrorKind::SyntaxError, where + " entry needs 'value'");
        e.value = term_list(*vit, where + " value of (" + e.left + "," + e.right + ")");
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const ProductEntry& a, const ProductEntry& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    return out;
}

} // namespace

AlgebraDesc parse_algebra(std::string_view text, bool lax) {
    json root = parse_json(text);
    if (!root.is_object())
        throw Error(ErrorKind::SyntaxError, "algebra file must be a JSON object");
    reject_unknown_keys(
        root, {"name", "profile", "basis", "unit", "total", "products", "integral", "genus"},
        "algebra file", lax);

    AlgebraDesc desc;
    desc.name = token_field(root, "name", "algebra file");

    auto pit = root.find("profile");
    if (pit == root.end() || !pit->is_object())
        throw Error(ErrorKind::SyntaxError, "algebra file needs a 'profile' object");
    reject_unknown_keys(*pit, {"dim_total", "dim_base"}, "profile", lax);
    desc.dim_total = int_field(*pit, "dim_total", "profile");
    desc.dim_base = int_field(*pit, "dim_base", "profile");

    auto bit = root.find("basis");
    if (bit == root.end() || !bit->is_array())
        throw Error(ErrorKind::SyntaxError, "algebra file needs a 'basis' array");
    for (const auto& item : *bit) {
        if (!item.is_object())
            throw Error(ErrorKind::SyntaxError, "basis entries must be objects");
        reject_unknown_keys(item, {"id", "deg", "grade"}, "basis entry", lax);
        BasisElement b;
        b.id = token_field(item, "id", "basis entry");
        b.degree = int_field(item, "deg", "basis entry");
        b.grade = int_field(item, "grade", "basis entry");
        desc.basis.push_back(std::move(b));
    }
    std::sort(desc.basis.begin(), desc.basis.end(),
              [](const BasisElement& a, const BasisElement& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < desc.basis.size(); ++i)
        if (desc.basis[i].id == desc.basis[i + 1].id)
            throw Error(ErrorKind::DuplicateId, "basis id '" + desc.basis[i].id + "'");

    if (auto it = root.find("unit"); it != root.end()) {
        if (!it->is_string())
            throw Error(ErrorKind::SyntaxError, "'unit' must be a string id");
        desc.unit = it->get<std::string>();
    }
    if (auto it = root.find("total"); it != root.end()) {
        if (!it->is_boolean())
            throw Error(ErrorKind::SyntaxError, "'total' must be a boolean");
        desc.total = it->get<bool>();
    }
    if (auto it = root.find("genus"); it != root.end()) {
        if (!it->is_number_integer() || it->get<int>() < 0)
            throw Error(ErrorKind::SyntaxError, "'genus' must be a non-negative integer");
        desc.genus = it->get<int>();
    }
    if (auto it = root.find("products"); it != root.end())
        desc.products = product_entries(*it, /*token_ids=*/true, lax, "products");
    if (auto it = root.find("integral"); it != root.end())
        desc.integral = term_list(*it, "integral");
    return desc;
}

ConstantsDesc parse_constants(std::string_view text, bool lax) {
    json root = parse_json(text);
    if (!root.is_object())
        throw Error(ErrorKind::SyntaxError, "constants file must be a JSON object");
    reject_unknown_keys(root, {"name", "base", "n", "total", "products"}, "constants file", lax);
    ConstantsDesc desc;
    if (auto it = root.find("name"); it != root.end()) {
        if (!it->is_string())
            throw Error(ErrorKind::SyntaxError, "'name' must be a string");
        desc.name = it->get<std::string>();
    }
    if (auto it = root.find("base"); it != root.end()) {
        if (!it->is_string())
            throw Error(ErrorKind::SyntaxError, "'base' must be a string");
        desc.base = it->get<std::string>();
    }
    desc.n = int_field(root, "n", "constants file");
    if (desc.n < 1)
        throw Error(ErrorKind::SyntaxError, "'n' must be a positive integer");
    if (auto it = root.find("total"); it != root.end()) {
        if (!it->is_boolean())
            throw Error(ErrorKind::SyntaxError, "'total' must be a boolean");
        desc.total = it->get<bool>();
    }
    auto it = root.find("products");
    if (it == root.end())
        throw Error(ErrorKind::SyntaxError, "constants file needs a 'products' array");
    desc.products = product_entries(*it, /*token_ids=*/false, lax, "products");
    return desc;
}

PointSpec parse_point(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw Error(ErrorKind::SyntaxError, "empty point");
    std::vector<PointSpec::Term> terms;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t plus = s.find('+', pos);
        std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos
                                                                   : plus - pos);
        if (term.empty())
            throw Error(ErrorKind::SyntaxError, "empty term in point '" + s + "'");
        std::size_t star = term.find('*');
        if (star == std::string::npos)
            throw Error(ErrorKind::SyntaxError,
                        "term '" + term + "' is not of the form <int>*<label>");
        const std::string mult = term.substr(0, star);
        const std::string label = term.substr(star + 1);
        if (mult.empty() ||
            !std::all_of(mult.begin(), mult.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw Error(ErrorKind::SyntaxError,
                        "multiplicity '" + mult + "' is not a positive integer");
        if (label.empty() || std::isdigit(static_cast<unsigned char>(label[0])) ||
            !is_token(label))
            throw Error(ErrorKind::SyntaxError,
                        "label '" + label + "' is not an identifier token");
        if (mult.size() > 9)
            throw Error(ErrorKind::SyntaxError, "multiplicity '" + mult + "' is too large");
        long v = std::stol(mult);
        if (v == 0)
            throw Error(ErrorKind::ZeroMultiplicity, "label '" + label + "'");
        terms.push_back({label, static_cast<int>(v)});
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
        if (pos == s.size())
            throw Error(ErrorKind::SyntaxError, "trailing '+' in point '" + s + "'");
    }
    return make_point(std::move(terms));
}

namespace {

json terms_json(const std::vector<std::pair<std::string, Rational>>& terms) {
    json arr = json::array();
    for (const auto& [id, c] : terms)
        arr.push_back(json::array({id, c.str()}));
    return arr;
}

json products_json(const std::vector<ProductEntry>& products) {
    json arr = json::array();
    for (const auto& e : products) {
        json item;
        item["left"] = e.left;
        item["right"] = e.right;
        item["value"] = terms_json(e.value);
        arr.push_back(std::move(item));
    }
    return arr;
}

} // namespace

std::string dump_json(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

std::string serialize_algebra(const AlgebraDesc& desc) {
    json root;
    root["name"] = desc.name;
    root["profile"] = {{"dim_total", desc.dim_total}, {"dim_base", desc.dim_base}};
    json basis = json::array();
    for (const auto& b : desc.basis)
        basis.push_back({{"id", b.id}, {"deg", b.degree}, {"grade", b.grade}});
    root["basis"] = std::move(basis);
    if (desc.unit)
        root["unit"] = *desc.unit;
    root["total"] = desc.total;
    if (desc.genus)
        root["genus"] = *desc.genus;
    root["products"] = products_json(desc.products);
    if (desc.integral)
        root["integral"] = terms_json(*desc.integral);
    return dump_json(root);
}

std::string serialize_constants(const ConstantsDesc& desc) {
    json root;
    if (!desc.name.empty())
        root["name"] = desc.name;
    if (!desc.base.empty())
        root["base"] = desc.base;
    root["n"] = desc.n;
    root["total"] = desc.total;
    root["products"] = products_json(desc.products);
    return dump_json(root);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::BadInvocation, "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

AlgebraDesc load_algebra_file(const std::string& path, bool lax) {
    return parse_algebra(read_file(path), lax);
}

ConstantsDesc load_constants_file(const std::string& path, bool lax) {
    return parse_constants(read_file(path), lax);
}

json report_json(const CheckReport& r) {
    json j;
    j["subject"] = r.subject;
    j["verdict"] = to_string(r.verdict);
    json viols = json::array();
    for (const auto& v : r.violations)
        viols.push_back(
            {{"left", v.left}, {"right", v.right}, {"bound", v.bound}, {"observed", v.observed}});
    j["violations"] = std::move(viols);
    json unc;
    unc["count"] = r.uncovered_count;
    json sample = json::array();
    for (const auto& [l, rgt] : r.uncovered_sample)
        sample.push_back(json::array({l, rgt}));
    unc["sample"] = std::move(sample);
    j["uncovered"] = std::move(unc);
    j["notes"] = r.notes;
    return j;
}

json table_json(const PerversityTable& t) {
    json j;
    j["space"] = t.space;
    j["total_dim"] = t.total;
    j["betti"] = t.betti;
    j["grade_dims"] = t.grade_dims;
    json cells = json::array();
    for (int d = 0; d <= t.max_degree; ++d)
        for (int g = 0; g <= t.max_grade; ++g)
            if (t.dims[static_cast<std::size_t>(d)][static_cast<std::size_t>(g)] != 0)
                cells.push_back(
                    {{"degree", d},
                     {"grade", g},
                     {"dim", t.dims[static_cast<std::size_t>(d)][static_cast<std::size_t>(g)]}});
    j["cells"] = std::move(cells);
    json sectors = json::array();
    for (const auto& blk : t.sectors) {
        json s;
        s["nu"] = blk.nu;
        s["degree_shift"] = blk.degree_shift;
        s["grade_shift"] = blk.grade_shift;
        s["dim"] = blk.dim;
        json bc = json::array();
        for (int d = 0; d <= t.max_degree; ++d)
            for (int g = 0; g <= t.max_grade; ++g)
                if (blk.dims[static_cast<std::size_t>(d)][static_cast<std::size_t>(g)] != 0)
                    bc.push_back({{"degree", d},
                                  {"grade", g},
                                  {"dim", blk.dims[static_cast<std::size_t>(d)]
                                                  [static_cast<std::size_t>(g)]}});
        s["cells"] = std::move(bc);
        sectors.push_back(std::move(s));
    }
    j["sectors"] = std::move(sectors);
    return j;
}

json duality_json(const FilteredAlgebra& a, const DiagonalDecomposition& d) {
    json j;
    json duals = json::array();
    json diag = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        const auto& term = d.terms[static_cast<std::size_t>(i)];
        json dv = json::array();
        for (const auto& [k, c] : term.co.terms)
            dv.push_back(json::array({a.basis[static_cast<std::size_t>(k)].id, c.str()}));
        duals.push_back(
            {{"of", a.basis[static_cast<std::size_t>(i)].id}, {"dual", dv}});
        diag.push_back({{"co", format_vector(a, term.co.terms)},
                        {"primal", a.basis[static_cast<std::size_t>(i)].id}});
    }
    j["dual_basis"] = std::move(duals);
    j["diagonal"] = std::move(diag);
    return j;
}

json local_check_json(const LocalCheck& lc) {
    json j;
    j["overall"] = report_json(lc.overall);
    json factors = json::array();
    for (const auto& f : lc.factors) {
        json fj;
        fj["label"] = f.label;
        fj["multiplicity"] = f.multiplicity;
        fj["report"] = report_json(f.report);
        factors.push_back(std::move(fj));
    }
    j["factors"] = std::move(factors);
    return j;
}

json dichotomy_json(const DichotomyReport& r) {
    json j;
    j["point"] = r.point;
    j["in_diagonal"] = r.in_diagonal;
    j["declared_genus"] = r.declared_genus;
    j["expected"] = r.expected;
    j["computed"] = to_string(r.computed);
    j["agreement"] = r.agreement;
    j["notes"] = r.notes;
    j["detail"] = local_check_json(r.detail);
    return j;
}

std::string report_text(const CheckReport& r) {
    std::ostringstream os;
    os << r.subject << ": " << to_string(r.verdict) << "\n";
    for (const auto& v : r.violations)
        os << "  violation: (" << v.left << "," << v.right << ") allowed grade " << v.bound
           << ", observed " << v.observed << "\n";
    if (r.uncovered_count > 0) {
        os << "  uncovered pairs: " << r.uncovered_count << "\n";
        for (const auto& [l, rgt] : r.uncovered_sample)
            os << "    (" << l << "," << rgt << ")\n";
    }
    for (const auto& n : r.notes)
        os << "  note: " << n << "\n";
    return os.str();
}

std::string table_text(const PerversityTable& t) {
    std::ostringstream os;
    os << "space: " << t.space << " (dim " << t.total << ")\n";
    os << "betti:";
    for (long long b : t.betti)
        os << " " << b;
    os << "\n";
    os << "deg\\grade";
    for (int g = 0; g <= t.max_grade; ++g)
        os << "\t" << g;
    os << "\n";
    for (int d = 0; d <= t.max_degree; ++d) {
        os << d;
        for (int g = 0; g <= t.max_grade; ++g) {
            const long long v = t.dims[static_cast<std::size_t>(d)][static_cast<std::size_t>(g)];
            os << "\t";
            if (v == 0)
                os << ".";
            else
                os << v;
        }
        os << "\n";
    }
    const bool trivial_wrap = t.sectors.size() == 1 && t.sectors[0].degree_shift == 0 &&
                              t.sectors[0].grade_shift == 0;
    if (!trivial_wrap)
        for (const auto& blk : t.sectors)
            os << "sector ν=" << blk.nu << ": dim " << blk.dim << ", degree shift "
               << blk.degree_shift << ", grade shift " << blk.grade_shift << "\n";
    return os.str();
}

} // namespace perv
