#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hlsg/algebra.hpp"
#include "hlsg/hl.hpp"

using namespace hlsg;
using hlsg::testing::alternative_xi;
using hlsg::testing::example_xi;

TEST_SUITE("hl") {

TEST_CASE("monomial text round-trip") {
    DominantMonomial m = DominantMonomial::parse("Y[3,-7]Y[1,-3] Y[6,-2]Y[8,-6]");
    CHECK(m.str() == "Y[1,-3]Y[3,-7]Y[6,-2]Y[8,-6]");
    CHECK(DominantMonomial::parse(m.str()) == m);
    CHECK_THROWS_AS(DominantMonomial::parse(""), input_error);
    CHECK_THROWS_AS(DominantMonomial::parse("x1"), input_error);
}

TEST_CASE("zigzag conditions") {
    CHECK(check_hl(DominantMonomial::parse("Y[1,-3]Y[3,-7]Y[6,-2]Y[8,-6]")).accepted());
    auto repeated = check_hl(DominantMonomial::parse("Y[2,0]Y[2,4]"));
    REQUIRE(repeated.rejection);
    CHECK(repeated.rejection->condition == 1);
    auto gap = check_hl(DominantMonomial::parse("Y[1,0]Y[2,6]"));
    REQUIRE(gap.rejection);
    CHECK(gap.rejection->condition == 3);
    auto alt = check_hl(DominantMonomial::parse("Y[1,0]Y[2,3]Y[4,7]"));
    REQUIRE(alt.rejection);
    CHECK(alt.rejection->condition == 2);
    auto single = check_hl(DominantMonomial::parse("Y[5,1]"));
    REQUIRE(single.accepted());
    CHECK(single.shape->nodes == std::vector<int>{5});
}

TEST_CASE("interval dictionary on the reference example") {
    const HeightFunction xi = example_xi();
    CHECK(iota_interval_monomial(xi, 1, 7).str() == "Y[1,-3]Y[3,-7]Y[6,-2]Y[8,-6]");
    // fundamental base case: j = i_diamond
    CHECK(iota_interval_monomial(xi, 1, 2).str() == "Y[1,-3]");
    CHECK(iota_interval_monomial(xi, 3, 5).str() == "Y[3,-7]");
    // the alternative height function names the same module via [1, 8]
    CHECK(iota_interval_monomial(alternative_xi(), 1, 8).str() ==
          "Y[1,-3]Y[3,-7]Y[6,-2]Y[8,-6]");
    CHECK_THROWS_AS(omega(xi, 3, 3), input_error);
}

TEST_CASE("reconstruction inverts the dictionary") {
    const DominantMonomial target = DominantMonomial::parse("Y[1,-3]Y[3,-7]Y[6,-2]Y[8,-6]");
    const HLShape shape = *check_hl(target).shape;
    auto [xi, i, j] = reconstruct_height_function(shape, 9);
    CHECK(iota_interval_monomial(xi, i, j) == target);
    // dictionary round-trip over every interval of the reference example
    for (int a = 1; a <= 9; ++a) {
        for (int b = a; b <= 9; ++b) {
            const DominantMonomial m = iota_interval_monomial(example_xi(), a, b);
            const HLCheckResult res = check_hl(m);
            REQUIRE(res.accepted());
            auto [xi2, a2, b2] = reconstruct_height_function(*res.shape, 9);
            CHECK(iota_interval_monomial(xi2, a2, b2) == m);
        }
    }
}

TEST_CASE("random shape round-trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);  // up to 12
        HLShape shape;
        int node = 1 + static_cast<int>(rng() % n);
        int shift = static_cast<int>(rng() % 21) - 10;
        int sign = (rng() % 2) ? 1 : -1;
        while (node <= n) {
            shape.nodes.push_back(node);
            shape.shifts.push_back(shift);
            const int next = node + 1 + static_cast<int>(rng() % 3);
            if (next > n || rng() % 3 == 0) break;
            shift += sign * (next - node + 2);
            sign = -sign;
            node = next;
        }
        auto [xi, i, j] = reconstruct_height_function(shape, n);
        DominantMonomial m;
        for (size_t t = 0; t < shape.nodes.size(); ++t)
            m.factors.emplace_back(shape.nodes[t], shape.shifts[t]);
        CHECK(iota_interval_monomial(xi, i, j) == m);
    }
}

}  // TEST_SUITE
