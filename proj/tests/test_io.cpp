#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "perv/io.hpp"

using namespace perv;
using namespace perv::testing;

namespace {

const char* torus_text = R"({
  "name": "torus",
  "profile": {"dim_total": 1, "dim_base": 0},
  "basis": [
    {"id": "1", "deg": 0, "grade": 0},
    {"id": "a", "deg": 1, "grade": 1},
    {"id": "b", "deg": 1, "grade": 1},
    {"id": "pt", "deg": 2, "grade": 2}
  ],
  "unit": "1",
  "total": true,
  "genus": 1,
  "products": [
    {"left": "a", "right": "b", "value": [["pt", "1"]]}
  ],
  "integral": [["pt", "1"]]
})";

} // namespace

TEST_CASE("parsing the shipped torus text") {
    AlgebraDesc d = parse_algebra(torus_text);
    CHECK(d.name == "torus");
    CHECK(d.dim_total == 1);
    CHECK(d.dim_base == 0);
    CHECK(d.basis.size() == 4);
    CHECK(d.unit == "1");
    CHECK(d.total);
    CHECK(d.genus == 1);
    CHECK(d.integral.has_value());
    CHECK(d == torus_desc());
    CHECK(build_algebra(d).dim() == 4);
}

TEST_CASE("rationals are exact text, never floats") {
    // a naked float literal
    std::string with_float = torus_text;
    auto pos = with_float.find("\"1\"]]");
    with_float.replace(pos, 5, "0.5]]");
    CHECK(thrown_kind([&] { parse_algebra(with_float); }) == ErrorKind::BadRational);

    // float-shaped text is no better
    std::string t2 = torus_text;
    auto p2 = t2.find("\"value\": [[\"pt\", \"1\"]]");
    REQUIRE(p2 != std::string::npos);
    t2.replace(p2, 22, "\"value\": [[\"pt\", \"0.5\"]]");
    CHECK(thrown_kind([&] { parse_algebra(t2); }) == ErrorKind::BadRational);

    // integers and p/q strings both work
    std::string t3 = torus_text;
    auto p3 = t3.find("[[\"pt\", \"1\"]]");
    t3.replace(p3, 13, "[[\"pt\", 1]]");
    AlgebraDesc d = parse_algebra(t3);
    CHECK(d == torus_desc());
}

TEST_CASE("strict key handling") {
    std::string t = torus_text;
    t.insert(1, "\"speed\": 11,");
    CHECK(thrown_kind([&] { parse_algebra(t); }) == ErrorKind::UnknownKey);
    AlgebraDesc d = parse_algebra(t, /*lax=*/true);
    CHECK(d == torus_desc());
}

TEST_CASE("duplicate ids are rejected at parse time") {
    std::string t = torus_text;
    auto pos = t.find("{\"id\": \"a\", \"deg\": 1, \"grade\": 1},");
    t.insert(pos, "{\"id\": \"pt\", \"deg\": 2, \"grade\": 2},");
    CHECK(thrown_kind([&] { parse_algebra(t); }) == ErrorKind::DuplicateId);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_algebra("{\n  \"name\": \"x\",\n  broken\n}");
        FAIL("expected a SyntaxError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(thrown_kind([] { parse_algebra("[]"); }) == ErrorKind::SyntaxError);
    CHECK(thrown_kind([] { parse_algebra("{\"name\": \"x\"}"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("id tokens are validated") {
    std::string t = torus_text;
    auto pos = t.find("\"id\": \"pt\"");
    t.replace(pos, 10, "\"id\": \"p t\"");
    CHECK(thrown_kind([&] { parse_algebra(t); }) == ErrorKind::SyntaxError);
}

TEST_CASE("round trips") {
    AlgebraDesc d = parse_algebra(torus_text);
    std::string canon = serialize_algebra(d);
    // canonical and idempotent
    CHECK(parse_algebra(canon) == d);
    CHECK(serialize_algebra(parse_algebra(canon)) == canon);
    CHECK(canon.back() == '\n');
    CHECK(canon.find('\r') == std::string::npos);

    // a permuted description canonicalizes to the same bytes
    std::string permuted = R"({
  "basis": [
    {"id": "pt", "deg": 2, "grade": 2},
    {"id": "b", "deg": 1, "grade": 1},
    {"id": "a", "deg": 1, "grade": 1},
    {"id": "1", "deg": 0, "grade": 0}
  ],
  "total": true,
  "genus": 1,
  "name": "torus",
  "unit": "1",
  "products": [
    {"left": "a", "right": "b", "value": [["pt", "1"]]}
  ],
  "integral": [["pt", "1"]],
  "profile": {"dim_base": 0, "dim_total": 1}
})";
    CHECK(serialize_algebra(parse_algebra(permuted)) == canon);
}

TEST_CASE("constants files") {
    const char* text = R"({
  "name": "demo",
  "base": "torus",
  "n": 2,
  "total": true,
  "products": [
    {"left": "ν=[2]|{1}", "right": "ν=[2]|{a}", "value": [["ν=[1,1]|{1,1}", "2/3"]]}
  ]
})";
    ConstantsDesc c = parse_constants(text);
    CHECK(c.base == "torus");
    CHECK(c.n == 2);
    CHECK(c.total);
    REQUIRE(c.products.size() == 1);
    CHECK(c.products[0].value[0].second == Rational(2, 3));
    // round trip
    CHECK(parse_constants(serialize_constants(c)) == c);

    CHECK(thrown_kind([] { parse_constants("{\"products\": []}"); }) ==
          ErrorKind::SyntaxError); // n missing
    CHECK(thrown_kind([] { parse_constants("{\"n\": 0, \"products\": []}"); }) ==
          ErrorKind::SyntaxError);
    CHECK(thrown_kind([] { parse_constants("{\"n\": 2, \"products\": [], \"extra\": 1}"); }) ==
          ErrorKind::UnknownKey);
    CHECK(parse_constants("{\"n\": 2, \"products\": [], \"extra\": 1}", /*lax=*/true).n == 2);
}

TEST_CASE("zero coefficients are dropped on parse") {
    std::string t = torus_text;
    auto pos = t.find("[[\"pt\", \"1\"]]");
    t.replace(pos, 13, "[[\"pt\", \"1\"], [\"1\", \"0\"]]");
    CHECK(thrown_kind([&] { parse_algebra(t); }) == std::nullopt);
    AlgebraDesc d = parse_algebra(t);
    CHECK(d.products[0].value.size() == 1);
}

TEST_CASE("genus must be a non-negative integer") {
    std::string t = torus_text;
    auto pos = t.find("\"genus\": 1");
    t.replace(pos, 10, "\"genus\": -1");
    CHECK(thrown_kind([&] { parse_algebra(t); }) == ErrorKind::SyntaxError);
}

TEST_CASE("mutated inputs throw engine errors, never anything else") {
    std::mt19937_64 rng(99);
    const std::string base = torus_text;
    for (int trial = 0; trial < 300; ++trial) {
        std::string s = base;
        // flip, drop or duplicate a few bytes
        for (int hits = 0; hits < 3; ++hits) {
            const std::size_t pos = rng() % s.size();
            switch (rng() % 3) {
            case 0: s[pos] = static_cast<char>(32 + rng() % 95); break;
            case 1: s.erase(pos, 1); break;
            default: s.insert(pos, 1, s[pos]); break;
            }
        }
        try {
            build_algebra(parse_algebra(s));
        } catch (const Error&) {
            // any engine error is acceptable
        }
    }
}

TEST_CASE("out-of-range integers are rejected") {
    std::string t = torus_text;
    auto pos = t.find("\"dim_total\": 1");
    t.replace(pos, 14, "\"dim_total\": 99999999999999999");
    CHECK(thrown_kind([&] { parse_algebra(t); }) == ErrorKind::SyntaxError);
}

TEST_CASE("report rendering is deterministic") {
    FilteredAlgebra bad = build_algebra(badtoy_desc());
    CheckReport r = check_multiplicative(bad);
    CHECK(report_text(r) == report_text(r));
    CHECK(dump_json(report_json(r)) == dump_json(report_json(r)));
    CHECK(report_text(r).find("(u,u) allowed grade 0, observed 2") != std::string::npos);
}
