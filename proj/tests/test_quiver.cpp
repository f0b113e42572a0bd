#include <doctest.h>

#include "helpers.hpp"
#include "hlsg/algebra.hpp"
#include "hlsg/quiver.hpp"

using namespace hlsg;
using hlsg::testing::example_xi;

TEST_SUITE("quiver") {

TEST_CASE("height function invariants") {
    CHECK_THROWS_AS(HeightFunction({0, 2}), input_error);
    CHECK_THROWS_AS(HeightFunction({5}), input_error);
    HeightFunction xi({0, -1, 0, 1});
    CHECK(xi(0) == xi(2));   // extended on the left
    CHECK(xi(5) == xi(3));   // xi(n+1) = xi(n-1)
    CHECK_THROWS_AS(xi(6), input_error);
}

TEST_CASE("reference statistics table") {
    const std::string expected =
        "I\t1\t2\t3\t4\t5\t6\t7\t8\t9\n"
        "xi\t-4\t-5\t-6\t-5\t-4\t-3\t-4\t-5\t-6\n"
        "i_diamond\t2\t2\t5\t5\t5\t8\t8\t8\t9\n"
        "i_bullet\t0\t0\t2\t2\t2\t5\t5\t5\t8\n"
        "i_bar\t2\t1\t4\t5\t3\t7\t8\t6\t9\n";
    CHECK(stats_table(example_xi()) == expected);
    const QuiverStats st = compute_stats(example_xi());
    CHECK(st.sources_sinks == std::set<int>{2, 5, 8, 9});
}

TEST_CASE("reference quiver arrows") {
    const Quiver q = build_quiver(example_xi());
    std::map<Arrow, int> expected;
    auto add = [&](int f, int t) { expected[{f, t}] = 1; };
    // mutable-mutable
    add(2, 1); add(2, 3); add(3, 4); add(4, 5); add(6, 5); add(7, 6); add(8, 7); add(8, 9);
    // mutable -> frozen
    add(1, -2); add(3, -3); add(4, -4); add(5, -5); add(6, -7); add(7, -8); add(9, -9);
    // frozen -> mutable
    add(-1, 1); add(-2, 2); add(-4, 3); add(-5, 4); add(-6, 6); add(-7, 7); add(-8, 8);
    CHECK(q.arrows() == expected);
}

TEST_CASE("mutation is an involution and matches the rank-2 exchange") {
    Quiver q(2, {{{1, 2}, 1}});
    Quiver m = q.mutated(1);
    CHECK(m.has_arrow(2, 1));
    CHECK_FALSE(m.has_arrow(1, 2));
    CHECK(m.mutated(1) == q);
    const Quiver big = build_quiver(example_xi());
    CHECK(big.mutated(4).mutated(4) == big);
    CHECK_THROWS_AS(big.mutated(-3), input_error);
}

TEST_CASE("mutable subquiver and dot export") {
    const Quiver q = build_quiver(example_xi());
    const Quiver sub = q.mutable_subquiver(1, 3);
    CHECK(sub.has_arrow(2, 1));
    CHECK(sub.has_arrow(2, 3));
    CHECK_FALSE(sub.has_arrow(3, 4));
    CHECK_FALSE(sub.has_arrow(-1, 1));
    CHECK(to_dot(q).find("\"2\" -> \"1\"") != std::string::npos);
    CHECK(vertex_name(-7) == "7'");
}

TEST_CASE("statistics are internally consistent on a sweep") {
    for (int n = 2; n <= 6; ++n) {
        for (const HeightFunction& xi : hlsg::testing::all_height_functions(n)) {
            const QuiverStats st = compute_stats(xi);
            CHECK(st.sources_sinks.count(n) == 1);
            for (int i = 1; i <= n; ++i) {
                const int d = st.diamond[i - 1];
                CHECK(d >= i);
                // i_diamond is the first source/sink at or after i
                for (int l = i; l < d; ++l) CHECK_FALSE(st.sources_sinks.count(l));
                if (d < n) CHECK(st.sources_sinks.count(d));
                // k_bar is a permutation value in [1, n]
                CHECK(st.bar[i - 1] >= 1);
                CHECK(st.bar[i - 1] <= n);
            }
            std::set<int> bars(st.bar.begin(), st.bar.end());
            CHECK(static_cast<int>(bars.size()) == n);
        }
    }
}

}  // TEST_SUITE
