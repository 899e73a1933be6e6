#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "perv/partition.hpp"

using namespace perv;

TEST_CASE("enumeration matches the partition-count table") {
    // p(1)..p(30)
    const long long table[] = {1,    2,    3,    5,    7,    11,   15,   22,   30,   42,
                               56,   77,   101,  135,  176,  231,  297,  385,  490,  627,
                               792,  1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565, 5604};
    for (int n = 1; n <= 30; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == table[n - 1]);
}

TEST_CASE("enumeration is duplicate-free, weakly decreasing, sums to n") {
    for (int n = 1; n <= 12; ++n) {
        std::set<std::vector<int>> seen;
        for (const auto& p : partitions_of(n)) {
            CHECK(p.n() == n);
            for (std::size_t i = 0; i + 1 < p.parts.size(); ++i)
                CHECK(p.parts[i] >= p.parts[i + 1]);
            for (int part : p.parts)
                CHECK(part >= 1);
            CHECK(seen.insert(p.parts).second);
        }
    }
}

TEST_CASE("reverse-lexicographic order") {
    auto ps = partitions_of(4);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0].parts == std::vector<int>{4});
    CHECK(ps[1].parts == std::vector<int>{3, 1});
    CHECK(ps[2].parts == std::vector<int>{2, 2});
    CHECK(ps[3].parts == std::vector<int>{2, 1, 1});
    CHECK(ps[4].parts == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("multiplicities") {
    Partition nu{{2, 1}};
    CHECK(nu.n() == 3);
    CHECK(nu.length() == 2);
    auto a = nu.multiplicities();
    CHECK(a[1] == 1);
    CHECK(a[2] == 1);
    CHECK(a[3] == 0);
    // sum i*a_i = n and sum a_i = l, over everything small
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            auto m = p.multiplicities();
            int weighted = 0, count = 0;
            for (std::size_t i = 1; i < m.size(); ++i) {
                weighted += static_cast<int>(i) * m[i];
                count += m[i];
            }
            CHECK(weighted == n);
            CHECK(count == p.length());
        }
}

TEST_CASE("canonical string") {
    CHECK(Partition{{2, 1}}.str() == "[2,1]");
    CHECK(Partition{{1, 1, 1}}.str() == "[1,1,1]");
    CHECK(Partition{{5}}.str() == "[5]");
}
