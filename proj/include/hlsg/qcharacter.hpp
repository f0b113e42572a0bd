/*
 * qcharacter.hpp
 * --------------
 * q-characters of the initial modules in type A_n (fundamental modules and
 * length-2 Kirillov-Reshetikhin modules), the substitution homomorphism iota
 * from cluster expansions to q-characters, and the subtraction recursion for
 * the modules attached to intervals.
 *
 * A q-character is a LaurentPolynomial over Y-generators with positive
 * multiplicities. The A-variables A_{i,r} = Y_{i,r-1} Y_{i,r+1} Y_{i-1,r}^{-1}
 * Y_{i+1,r}^{-1} follow the standard affinized-simple-root convention; the
 * partial order they induce is decided by an exact linear solver.
 */
#pragma once

#include "hlsg/expansion.hpp"
#include "hlsg/hl.hpp"

namespace hlsg {

using QCharacter = LaurentPolynomial;

Monomial A_monomial(int n, int i, int r);

// True iff `ratio` is a product of A_{i,r}'s with nonnegative exponents.
bool is_a_nonneg_product(int n, const Monomial& ratio);

// The unique maximal and minimal terms in the A-divisibility order; throws
// internal_error if either fails to be unique.
std::pair<Monomial, Monomial> highest_lowest(int n, const QCharacter& q);

// chi_q of the fundamental module L(Y_{i,a}); binomial(n+1, i) terms.
QCharacter qchar_fundamental(int n, int i, int a);

// chi_q of the length-2 KR module L(Y_{i,xi_i - 1} Y_{i,xi_i + 1}).
QCharacter qchar_kr2(int n, int i, int xi_i);

// Substitution along the dictionary x_l -> chi_q(L(Y_{l,xi(l+1)})),
// x'_l -> chi_q(L(Y_{l,xi(l)-1} Y_{l,xi(l)+1})): computes chi(p*D)/chi(D)
// for the common denominator monomial D, dividing exactly.
QCharacter iota_substitute(const LaurentPolynomial& p, const HeightFunction& xi);

// chi_q of the module attached to the interval [i, j]: snake-graph route
// (substitution into expand) and the source/sink subtraction recursion.
QCharacter qchar_hl(const HeightFunction& xi, int i, int j);
QCharacter qchar_hl_recursive(const HeightFunction& xi, int i, int j);

}  // namespace hlsg
