#include <doctest.h>

#include "helpers.hpp"
#include "hlsg/qcharacter.hpp"

using namespace hlsg;
using hlsg::testing::a4_xi;
using hlsg::testing::all_height_functions;
using hlsg::testing::example_xi;

namespace {

Int binomial(int n, int k) {
    Int r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
    return r;
}

Monomial as_y_monomial(const DominantMonomial& m) {
    Monomial out;
    for (const auto& [i, r] : m.factors) out = out * Monomial::of(gen_Y(i, r));
    return out;
}

}  // namespace

TEST_SUITE("qcharacter") {

TEST_CASE("fundamental characters") {
    // A_1: Y_{1,a} + Y_{1,a+2}^{-1}
    const QCharacter sl2 = qchar_fundamental(1, 1, 0);
    CHECK(sl2.term_count() == 2);
    CHECK(sl2.coefficient(parse_monomial("Y[1,0]")) == 1);
    CHECK(sl2.coefficient(parse_monomial("Y[1,2]^-1")) == 1);
    // A_4 dimension counts
    CHECK(qchar_fundamental(4, 3, -5).eval_all_one() == 10);
    CHECK(qchar_fundamental(4, 4, -5).eval_all_one() == 5);
    // highest and lowest weights in A_9
    const auto [hi, lo] = highest_lowest(9, qchar_fundamental(9, 3, -5));
    CHECK(to_string(hi) == "Y[3,-5]");
    CHECK(to_string(lo) == "Y[7,5]^-1");
}

TEST_CASE("length-2 Kirillov-Reshetikhin characters") {
    // A_1 KR of length 2: a 3-term sl2-string
    const QCharacter kr = qchar_kr2(1, 1, 0);
    CHECK(kr.term_count() == 3);
    CHECK(kr.coefficient(parse_monomial("Y[1,-1]*Y[1,1]")) == 1);
    CHECK(kr.coefficient(parse_monomial("Y[1,-1]*Y[1,3]^-1")) == 1);
    CHECK(kr.coefficient(parse_monomial("Y[1,1]^-1*Y[1,3]^-1")) == 1);
    // A_4, i = 1: pairs of weakly increasing column fillings
    CHECK(qchar_kr2(4, 1, -6).eval_all_one() == 15);
    const auto [hi, lo] = highest_lowest(9, qchar_kr2(9, 1, -4));
    CHECK(to_string(hi) == "Y[1,-5]*Y[1,-3]");
    (void)lo;
}

TEST_CASE("A-divisibility order") {
    const Monomial a = A_monomial(4, 2, -3);
    CHECK(is_a_nonneg_product(4, a));
    CHECK(is_a_nonneg_product(4, a * A_monomial(4, 3, 0)));
    CHECK(is_a_nonneg_product(4, Monomial::unit()));
    CHECK_FALSE(is_a_nonneg_product(4, a.inverse()));
    CHECK_FALSE(is_a_nonneg_product(4, parse_monomial("Y[1,0]")));
}

TEST_CASE("substitution sends generators to characters") {
    const HeightFunction xi = a4_xi();
    const LaurentPolynomial x2 = LaurentPolynomial::of(gen_x(2));
    CHECK(iota_substitute(x2, xi) == qchar_fundamental(4, 2, xi(3)));
    const LaurentPolynomial xp1 = LaurentPolynomial::of(gen_xp(1));
    CHECK(iota_substitute(xp1, xi) == qchar_kr2(4, 1, xi(1)));
}

TEST_CASE("interval modules via the subtraction recursion") {
    const HeightFunction xi = a4_xi();
    // xi = (-6,-5,-6,-5): vertex 2 is a sink, so [1,3] takes one recursion step
    const QCharacter q = qchar_hl_recursive(xi, 1, 3);
    CHECK(q == qchar_hl(xi, 1, 3));
    const QCharacter prod = qchar_hl(xi, 1, 2) * qchar_hl(xi, 3, 3);
    CHECK(prod.eval_all_one() == 400);
    const QCharacter sub = prod - q;
    CHECK(sub.eval_all_one() == 75);
    for (const auto& [m, c] : sub.terms()) {
        (void)m;
        CHECK(c > 0);
    }
    // the subtracted part is the image of the frozen product x'_1 x_4
    CHECK(sub == qchar_kr2(4, 1, -6) * qchar_fundamental(4, 4, -6));
    CHECK(q.eval_all_one() == 325);
    const auto [hi, lo] = highest_lowest(4, q);
    CHECK(to_string(hi) == "Y[1,-7]*Y[2,-4]*Y[3,-7]");
    (void)lo;
}

TEST_CASE("both q-character routes agree on a sweep") {
    for (int n = 2; n <= 4; ++n) {
        for (const HeightFunction& xi : all_height_functions(n)) {
            for (int i = 1; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    const QCharacter a = qchar_hl(xi, i, j);
                    CHECK(a == qchar_hl_recursive(xi, i, j));
                    const auto [hi, lo] = highest_lowest(n, a);
                    CHECK(hi == as_y_monomial(iota_interval_monomial(xi, i, j)));
                    (void)lo;
                }
            }
        }
    }
}

TEST_CASE("fundamental term counts are binomial") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            CHECK(Int(qchar_fundamental(n, i, -i).term_count()) == binomial(n + 1, i));
}

}  // TEST_SUITE
