/*
 * expansion.hpp
 * -------------
 * F-polynomials of labeled snake graphs (direct matching sum and the
 * continued-fraction closed forms, in both minimal-matching orientations),
 * tropical evaluation, the full cluster expansion of x[alpha_{i,j}], and the
 * extremal perfect matching with its highest/lowest l-weight monomials.
 */
#pragma once

#include <map>
#include <utility>

#include "hlsg/hl.hpp"
#include "hlsg/snake.hpp"

namespace hlsg {

struct YHatAssignment {
    // tile label -> Laurent monomial over the frozen generators
    std::map<int, Monomial> values;
};

// Sum of height monomials over all perfect matchings; constant term 1.
LaurentPolynomial f_polynomial_direct(const SnakeGraph& g);

// Continued-fraction form (Rabideau's theorem for anchor SOUTH, its dual for
// anchor WEST); graphs whose first run is 1 are normalized by reverse() and,
// if still needed, transpose(). Equals f_polynomial_direct exactly.
LaurentPolynomial f_polynomial_cf(const SnakeGraph& g);

// The L_i = phi_i * C_i data for a normalized graph (a_1 > 1), exposed for
// tests; index 0 holds L_1.
std::vector<LaurentPolynomial> cf_laurent_terms(const SnakeGraph& g);

// Checks the two-term recursion
//   F(G[a_1..a_n]) = y34 * F(G[a_1..a_{n-1}]) * F(H_n) + y56 * F(G[a_1..a_{n-2}])
// with parity-dependent y34/y56; prefixes and H_n are carved out with
// subgraph() and evaluated by the direct sum.
bool check_dual_recursion(const SnakeGraph& g);

// yhat_l over the frozen set Trop(x'_1..x'_n, x_l for l outside [i,j]).
YHatAssignment yhat(const HeightFunction& xi, int i, int j);

// Tropical F-value; asserts the substituted y(P+) gives the same result.
TropicalElement tropical_f(const SnakeGraph& g, const YHatAssignment& a);

// (1/prod x_l) * sum_P x(P) yhat(P) / F|_P; Laurent polynomial in {x, x'}.
LaurentPolynomial expand(const HeightFunction& xi, int i, int j);

// The unique matching of Lemma "unique extremal matching" built by the
// gluing rules (turn sets per zigzag part).
PerfectMatching extremal_matching(const HeightFunction& xi, int i, int j);

// Closed-form value x(P)y(P)/((prod x) F|_P) of the extremal matching.
Monomial extremal_value(const HeightFunction& xi, int i, int j);

// (highest, lowest) l-weight monomials of the module attached to [i, j]:
// highest from the interval dictionary, lowest as the product of the
// constituent fundamentals' lowest weights Y_{n+1-b, a+n+1}^{-1}.
std::pair<Monomial, Monomial> extremal_weights(const HeightFunction& xi, int i, int j);

}  // namespace hlsg
