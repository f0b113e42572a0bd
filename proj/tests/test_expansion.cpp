#include <doctest.h>

#include "helpers.hpp"
#include "hlsg/expansion.hpp"

using namespace hlsg;
using hlsg::testing::all_height_functions;
using hlsg::testing::example_xi;

TEST_SUITE("expansion") {

TEST_CASE("F-polynomial routes agree on the reference graph") {
    const SnakeGraph g = build_snake(example_xi(), 1, 7);
    const LaurentPolynomial direct = f_polynomial_direct(g);
    CHECK(direct.term_count() == 23);
    CHECK(direct.coefficient(Monomial::unit()) == 1);
    CHECK(direct == f_polynomial_cf(g));
    CHECK(check_dual_recursion(g));
    // reversal and transposition preserve the F-polynomial
    CHECK(f_polynomial_direct(reverse(g)) == direct);
    CHECK(f_polynomial_direct(transpose(g)) == direct);
    CHECK(f_polynomial_cf(reverse(g)) == direct);
}

TEST_CASE("continued-fraction Laurent terms") {
    const SnakeGraph g = build_snake(example_xi(), 1, 7);
    const auto L = cf_laurent_terms(g);
    REQUIRE(L.size() == 3);
    // numerator of [L1, L2, L3] reproduces F up to the parity correction,
    // here C_3^-1 = y2*...*y7 (west anchor, odd number of runs)
    const LaurentPolynomial n3 = L[2] * (L[1] * L[0] + LaurentPolynomial::one()) + L[0];
    CHECK(n3 * LaurentPolynomial::of(parse_monomial("y2*y3*y4*y5*y6*y7")) ==
          f_polynomial_cf(g));
    const SnakeGraph single = make_snake(1, {}, Anchor::South);
    CHECK(f_polynomial_cf(single) ==
          LaurentPolynomial::one() + LaurentPolynomial::of(gen_fy(1)));
}

TEST_CASE("yhat of the reference interval") {
    const YHatAssignment a = yhat(example_xi(), 1, 7);
    CHECK(to_string(a.values.at(1)) == "x'1*x'2^-1");
    CHECK(to_string(a.values.at(2)) == "x'2");
    CHECK(to_string(a.values.at(3)) == "x'3^-1*x'4");
    CHECK(to_string(a.values.at(4)) == "x'4^-1*x'5");
    CHECK(to_string(a.values.at(5)) == "x'5^-1");
    CHECK(to_string(a.values.at(6)) == "x'6*x'7^-1");
    CHECK(to_string(a.values.at(7)) == "x8*x'7*x'8^-1");
}

TEST_CASE("tropical F-value") {
    const SnakeGraph g = build_snake(example_xi(), 1, 7);
    const TropicalElement f = tropical_f(g, yhat(example_xi(), 1, 7));
    CHECK(to_string(f) == "x'3^-1*x'8^-1");
}

TEST_CASE("reference expansion") {
    const LaurentPolynomial ex = expand(example_xi(), 1, 7);
    CHECK(ex.term_count() == 23);
    CHECK(ex.eval_all_one() == 23);
    for (const auto& [m, c] : ex.terms()) {
        (void)m;
        CHECK(c == 1);
    }
    CHECK(ex.coefficient(parse_monomial("x2^-1*x5*x7^-1*x'3*x'8")) == 1);
    CHECK(ex.coefficient(parse_monomial("x1^-1*x3^-1*x6^-1*x8*x'1*x'3*x'6")) == 1);
    CHECK(ex.coefficient(parse_monomial("x1^-1*x2*x5^-1*x8*x'1*x'6")) == 1);
    // single-vertex interval: binomial exchange
    const LaurentPolynomial single = expand(example_xi(), 3, 3);
    CHECK(single.term_count() == 2);
}

TEST_CASE("extremal matching of the reference interval") {
    const PerfectMatching p = extremal_matching(example_xi(), 1, 7);
    std::map<int, int> turns{{1, 1}, {2, 1}, {6, 1}, {7, 1}};
    CHECK(p.turn_height == turns);
    CHECK(to_string(extremal_value(example_xi(), 1, 7)) ==
          "x1^-1*x3^-1*x6^-1*x8*x'1*x'3*x'6");
    const auto [hi, lo] = extremal_weights(example_xi(), 1, 7);
    CHECK(to_string(hi) == "Y[1,-3]*Y[3,-7]*Y[6,-2]*Y[8,-6]");
    CHECK(to_string(lo) == "Y[2,4]^-1*Y[4,8]^-1*Y[7,3]^-1*Y[9,7]^-1");
}

TEST_CASE("sweep: cf route, dual recursion, tropical lemma, extremal uniqueness") {
    for (int n = 2; n <= 5; ++n) {
        for (const HeightFunction& xi : all_height_functions(n)) {
            for (int i = 1; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    const SnakeGraph g = build_snake(xi, i, j);
                    const LaurentPolynomial direct = f_polynomial_direct(g);
                    CHECK(direct == f_polynomial_cf(g));
                    CHECK(check_dual_recursion(g));
                    const YHatAssignment a = yhat(xi, i, j);
                    const TropicalElement trop = tropical_f(g, a);  // asserts y(P+)
                    // the extremal matching value occurs exactly once
                    const Monomial target = extremal_value(xi, i, j);
                    const LaurentPolynomial ex = expand(xi, i, j);
                    CHECK(ex.coefficient(target) == 1);
                    Monomial denom = trop.as_monomial();
                    for (int l = i; l <= j; ++l) denom = denom * Monomial::of(gen_x(l));
                    const PerfectMatching p = extremal_matching(xi, i, j);
                    Monomial h = Monomial::unit();
                    for (const auto& [label, e] : p.turn_height)
                        h = h * a.values.at(label).pow(e);
                    CHECK(weight_monomial(g, p) * h * denom.inverse() == target);
                }
            }
        }
    }
}

}  // TEST_SUITE
