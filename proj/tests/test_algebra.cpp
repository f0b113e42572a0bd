#include <doctest.h>

#include "hlsg/algebra.hpp"

using namespace hlsg;

TEST_SUITE("algebra") {

TEST_CASE("canonical text form") {
    Monomial m = Monomial::of(gen_x(1), 2) * Monomial::of(gen_xp(3), -1);
    LaurentPolynomial p = LaurentPolynomial::of(m, -3) + LaurentPolynomial::one();
    CHECK(to_string(p) == "-3*x1^2*x'3^-1 + 1");
    CHECK(parse_polynomial("-3*x1^2*x'3^-1 + 1") == p);
    CHECK(to_string(LaurentPolynomial::zero()) == "0");
    CHECK(to_string(Monomial::unit()) == "1");
    CHECK(to_string(gen_Y(2, -4)) == "Y[2,-4]");
    CHECK(to_string(gen_fy(7)) == "y7");
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_generator("z1"), input_error);
    CHECK_THROWS_AS(parse_monomial("x1^"), input_error);
    CHECK_THROWS_AS(parse_polynomial(""), input_error);
}

TEST_CASE("ring arithmetic") {
    LaurentPolynomial x = LaurentPolynomial::of(gen_x(1));
    LaurentPolynomial p = (x + LaurentPolynomial::one()) * (x - LaurentPolynomial::one());
    CHECK(to_string(p) == "x1^2 - 1");
    CHECK(p.eval_all_one() == 0);
    CHECK((p - p).is_zero());
    CHECK(LaurentPolynomial::of(Monomial::of(gen_x(1), -1)).total_degree() == -1);
}

TEST_CASE("exact division") {
    LaurentPolynomial x = LaurentPolynomial::of(gen_x(1));
    LaurentPolynomial y = LaurentPolynomial::of(gen_x(2));
    LaurentPolynomial prod = (x + y) * (x * x + y);
    CHECK(poly_div_exact_poly(prod, x + y) == x * x + y);
    CHECK_THROWS_AS(poly_div_exact_poly(x * x + y, x + y), internal_error);
    // Monomial division always succeeds in the Laurent ring.
    CHECK(poly_div_exact(x + y, Monomial::of(gen_x(1))) ==
          LaurentPolynomial::one() + y * LaurentPolynomial::of(Monomial::of(gen_x(1), -1)));
}

TEST_CASE("substitution") {
    LaurentPolynomial p = parse_polynomial("x1^2 + x2");
    std::map<Generator, LaurentPolynomial> repl{
        {gen_x(1), parse_polynomial("x3 + 1")},
        {gen_x(2), LaurentPolynomial::of(gen_xp(2))}};
    CHECK(poly_substitute(p, repl) == parse_polynomial("x3^2 + 2*x3 + x'2 + 1"));
}

TEST_CASE("tropical semifield") {
    TropicalElement a = TropicalElement::from_monomial(parse_monomial("x1^2*x2^-1"));
    TropicalElement b = TropicalElement::from_monomial(parse_monomial("x1*x3"));
    TropicalElement s = tropical_sum({a, b});
    // generator-wise min; absent exponents count as 0
    CHECK(s == TropicalElement::from_monomial(parse_monomial("x1*x2^-1")));
    CHECK(a * a.inverse() == TropicalElement::from_monomial(Monomial::unit()));
    CHECK_THROWS_WITH_AS(tropical_sum({}), "empty tropical sum", input_error);
    CHECK(to_tropical(LaurentPolynomial::of(gen_x(2))) ==
          TropicalElement::from_monomial(parse_monomial("x2")));
    CHECK_THROWS_AS(to_tropical(parse_polynomial("x1 + 1")), input_error);
    CHECK_THROWS_AS(to_tropical(parse_polynomial("2*x1")), input_error);
}

}  // TEST_SUITE
