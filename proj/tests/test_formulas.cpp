#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "satkit/formulas.hpp"
#include "satkit/halfint.hpp"
#include "satkit/pattern.hpp"

using namespace satkit;
using P = MultipartitePattern;

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// the multipartite bound recomputed from scratch over exact integers
std::int64_t bfp_oracle(int n, std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end());
    const std::int64_t sr = sizes.back();
    std::int64_t p = -1;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) p += sizes[i];
    return p * (p - 1) / 2 + p * (n - p) + ceil_div(4 * (sr - 1) * (n - p) - sr * sr, 8);
}

}  // namespace

TEST_CASE("the K33 piecewise values cover every order from six up") {
    for (int n = 6; n <= 100; ++n) {
        SatFormulaAnswer a = known_sat(n, P{3, 3});
        CHECK(a.kind == SatFormulaAnswer::Kind::Exact);
        CHECK(a.value == (n <= 8 ? 2 * n : 3 * n - 9));
    }
    CHECK(known_sat(6, P{3, 3}).validity == "6 <= n <= 8");
    CHECK(known_sat(6, P{3, 3}).source == "exhaustive search");
    CHECK(known_sat(9, P{3, 3}).validity == "n >= 9");
    CHECK(known_sat(9, P{3, 3}).source.find("3n-9") != std::string::npos);
    CHECK(known_sat(10, P{3, 3}).value == 21);
    CHECK(known_sat(100, P{3, 3}).value == 291);
}

TEST_CASE("complete graph values follow the clique formula") {
    for (int r = 2; r <= 6; ++r) {
        std::vector<int> ones(r, 1);
        for (int n = r; n <= 40; ++n) {
            SatFormulaAnswer a = known_sat(n, P(ones));
            CHECK(a.kind == SatFormulaAnswer::Kind::Exact);
            CHECK(a.value == std::int64_t(r - 2) * n - std::int64_t(r - 1) * (r - 2) / 2);
        }
    }
    CHECK(known_sat(7, P{1, 1, 1}).value == 6);
    CHECK(known_sat(7, P{1, 1, 1}).source == "Erdos-Hajnal-Moon");
    CHECK(known_sat(10, P{1, 1, 1, 1}).value == 17);
}

TEST_CASE("the four-cycle and K23 families read off their closed forms") {
    for (int n = 5; n <= 50; ++n) {
        CHECK(known_sat(n, P{2, 2}).value == (3 * n - 5) / 2);
        CHECK(known_sat(n, P{2, 3}).value == 2 * n - 3);
    }
    CHECK(known_sat(5, P{2, 2}).source == "Ollmann; Tuza");
    CHECK(known_sat(5, P{2, 3}).source == "Chen");
    CHECK(known_sat(5, P{2, 3}).value == 7);
}

TEST_CASE("a pattern that cannot embed leaves the complete graph") {
    for (auto [n, sizes] : std::vector<std::pair<int, std::vector<int>>>{
             {5, {3, 3}}, {5, {6}}, {4, {2, 3}}, {2, {1, 1, 1}}}) {
        SatFormulaAnswer a = known_sat(n, P(sizes));
        CHECK(a.kind == SatFormulaAnswer::Kind::Exact);
        CHECK(a.value == std::int64_t(n) * (n - 1) / 2);
        CHECK(a.validity == "n < s_1+...+s_r");
        CHECK(a.source.find("K_n") != std::string::npos);
    }
}

TEST_CASE("outside every catalogued range the answer degrades to bounds") {
    SatFormulaAnswer below = known_sat(4, P{2, 2});
    CHECK(below.kind == SatFormulaAnswer::Kind::Bounds);
    CHECK(below.value == -1);
    CHECK_FALSE(below.lower.has_value());
    REQUIRE(below.upper.has_value());
    CHECK(*below.upper == 4);
    CHECK(*below.upper == bfp_upper(4, P{2, 2}));

    SatFormulaAnswer odd = known_sat(9, P{2, 2, 2});
    CHECK(odd.kind == SatFormulaAnswer::Kind::Bounds);
    CHECK(*odd.upper == bfp_upper(9, P{2, 2, 2}));
    CHECK(*odd.upper == 24);
    CHECK(*known_sat(6, P{1, 2}).upper == 3);
    CHECK(known_sat(6, P{1, 2}).source.find("no certified lower bound") != std::string::npos);
}

TEST_CASE("known_sat rejects hosts and patterns without a saturation number") {
    CHECK_THROWS_AS(known_sat(5, P{3}), std::invalid_argument);
    CHECK_THROWS_AS(known_sat(3, P{1}), std::invalid_argument);
    CHECK_THROWS_AS(known_sat(0, P{3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(known_sat(-4, P{3, 3}), std::invalid_argument);
}

TEST_CASE("the general upper bound matches an exact rational recount") {
    const std::vector<std::vector<int>> patterns{{1, 1},    {2, 2},    {2, 3},
                                                 {3, 3},    {2, 2, 2}, {3, 4},
                                                 {1, 1, 1}, {4, 4},    {1, 2, 3}};
    for (const auto& sizes : patterns) {
        std::vector<int> sorted = sizes;
        std::sort(sorted.begin(), sorted.end());
        int p = -1;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) p += sorted[i];
        for (int n = p + 1; n <= 60; ++n) CHECK(bfp_upper(n, P(sizes)) == bfp_oracle(n, sizes));
    }
    CHECK(bfp_upper(20, P{3, 3}) == 54);
    CHECK(bfp_upper(5, P{1, 1}) == 0);
    CHECK(bfp_upper(10, P{2, 3}) == 17);
    CHECK(bfp_upper(9, P{3, 3}) == 21);
}

TEST_CASE("the general upper bound needs two parts and a big enough host") {
    CHECK_THROWS_AS(bfp_upper(5, P{3}), std::invalid_argument);
    CHECK_THROWS_AS(bfp_upper(2, P{3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(bfp_upper(1, P{2, 2}), std::invalid_argument);
    CHECK(bfp_upper(3, P{3, 3}) == bfp_oracle(3, {3, 3}));  // n=3 > p=2 is fine
}

TEST_CASE("the leading term is a half integer and never a certified bound") {
    SatFormulaAnswer a = bfp_leading(100, P{3, 3});
    CHECK(a.kind == SatFormulaAnswer::Kind::AsymptoticOnly);
    CHECK(a.leading == HalfInt::whole(300));
    CHECK(a.value == -1);
    CHECK_FALSE(a.lower.has_value());
    CHECK_FALSE(a.upper.has_value());
    CHECK(a.validity.find("leading term only") != std::string::npos);
    CHECK(bfp_leading(5, P{1, 1}).leading == HalfInt::whole(0));
    CHECK(bfp_leading(10, P{2, 3}).leading == HalfInt::whole(20));
    // p = 2 and (s_r - 1)/2 = 3/2 makes the n=10 coefficient land on 35
    CHECK(bfp_leading(10, P{3, 4}).leading == HalfInt::whole(35));
    CHECK(bfp_leading(1, P{3, 4}).leading == HalfInt::halves(7));
}

TEST_CASE("every certified exact value sits at or under the general bound") {
    for (int n = 9; n <= 100; ++n)
        CHECK(bfp_upper(n, P{3, 3}) - known_sat(n, P{3, 3}).value == 3);
    for (int n = 6; n <= 8; ++n) CHECK(known_sat(n, P{3, 3}).value <= bfp_upper(n, P{3, 3}));
    for (int n = 5; n <= 60; ++n) {
        CHECK(known_sat(n, P{2, 3}).value == bfp_upper(n, P{2, 3}));  // Chen meets the bound
        CHECK(known_sat(n, P{2, 2}).value <= bfp_upper(n, P{2, 2}));
    }
    for (int n = 3; n <= 60; ++n)
        CHECK(known_sat(n, P{1, 1, 1}).value <= bfp_upper(n, P{1, 1, 1}));
}

TEST_CASE("the table renders csv rows straight from the dispatcher") {
    CHECK(sat_table(P{3, 3}, 6, 15, true) ==
          "n,pattern,kind,value,lower,upper\n"
          "6,\"3,3\",exact,12,,\n"
          "7,\"3,3\",exact,14,,\n"
          "8,\"3,3\",exact,16,,\n"
          "9,\"3,3\",exact,18,,\n"
          "10,\"3,3\",exact,21,,\n"
          "11,\"3,3\",exact,24,,\n"
          "12,\"3,3\",exact,27,,\n"
          "13,\"3,3\",exact,30,,\n"
          "14,\"3,3\",exact,33,,\n"
          "15,\"3,3\",exact,36,,\n");
    // a bounds row leaves value and lower empty
    std::string with_bounds = sat_table(P{2, 2}, 4, 6, true);
    CHECK(with_bounds.find("4,\"2,2\",bounds,,,4\n") != std::string::npos);
    CHECK(with_bounds.find("5,\"2,2\",exact,5,,\n") != std::string::npos);
}

TEST_CASE("the text table keeps the same numbers in aligned form") {
    std::string text = sat_table(P{3, 3}, 6, 9, false);
    CHECK(text ==
          "  n  sat(n, 3,3)\n"
          "  6  12\n"
          "  7  14\n"
          "  8  16\n"
          "  9  18\n");
    std::string single = sat_table(P{3, 3}, 12, 12, true);
    CHECK(single == "n,pattern,kind,value,lower,upper\n12,\"3,3\",exact,27,,\n");
}
