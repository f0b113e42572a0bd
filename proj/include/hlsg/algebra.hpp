/*
 * algebra.hpp
 * -----------
 * Exact multivariate Laurent-polynomial arithmetic over an open-ended set of
 * named generators, plus tropical (min-plus) semifield elements.
 *
 * Generators come in four families:
 *   x<i>      initial cluster variables            (Kind::X)
 *   x'<i>     frozen coefficient variables         (Kind::XPrime)
 *   Y[i,r]    spectral-parameter variables          (Kind::Y)
 *   y<i>      formal coefficients of F-polynomials  (Kind::FormalY)
 *
 * A Monomial maps generators to nonzero integer exponents; a LaurentPolynomial
 * maps monomials to nonzero arbitrary-precision integer coefficients.
 * Example: -3*x1^2*x'3^-1 + 1 is { {{x1,2},{x'3,-1}}: -3, {}: 1 }.
 *
 * All values are immutable in spirit: operations return fresh objects and the
 * canonical form (sorted maps, no zero entries) is maintained everywhere.
 */
#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hlsg {

using Int = boost::multiprecision::cpp_int;

// Raised on malformed user input (CLI exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when an internal cross-check fails (CLI exit code 3).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Kind rank fixes the generator order: X < XPrime < Y < FormalY.
enum class Kind : int { X = 0, XPrime = 1, Y = 2, FormalY = 3 };

struct Generator {
    Kind kind;
    int i;
    int r;  // spectral shift, only meaningful for Kind::Y (0 otherwise)

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator gen_x(int i) { return {Kind::X, i, 0}; }
inline Generator gen_xp(int i) { return {Kind::XPrime, i, 0}; }
inline Generator gen_Y(int i, int r) { return {Kind::Y, i, r}; }
inline Generator gen_fy(int i) { return {Kind::FormalY, i, 0}; }

std::string to_string(const Generator& g);

// ---------------------------------------------------------------------------

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<Generator, int> exps);

    static Monomial unit() { return Monomial{}; }
    static Monomial of(const Generator& g, int e = 1);

    const std::map<Generator, int>& exponents() const { return e_; }
    bool is_unit() const { return e_.empty(); }
    int exponent(const Generator& g) const;

    Monomial& operator*=(const Monomial& o);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    Monomial inverse() const;
    Monomial pow(int k) const;

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

private:
    std::map<Generator, int> e_;  // no zero exponents stored
};

std::string to_string(const Monomial& m);

// ---------------------------------------------------------------------------

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Int constant);
    explicit LaurentPolynomial(std::map<Monomial, Int> terms);

    static LaurentPolynomial zero() { return LaurentPolynomial{}; }
    static LaurentPolynomial one() { return LaurentPolynomial{Int(1)}; }
    static LaurentPolynomial of(const Monomial& m, Int c = Int(1));
    static LaurentPolynomial of(const Generator& g);

    const std::map<Monomial, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    Int coefficient(const Monomial& m) const;
    // Sum of coefficients = evaluation at all generators -> 1.
    Int eval_all_one() const;
    // Total degree (max over terms of the sum of exponents).
    long total_degree() const;
    // True when the polynomial is a single term with coefficient 1.
    bool is_monomial() const;
    const Monomial& as_monomial() const;  // throws unless is_monomial()

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    std::map<Monomial, Int> t_;  // no zero coefficients stored
    void add_term(const Monomial& m, const Int& c);
    friend LaurentPolynomial poly_add(const LaurentPolynomial&, const LaurentPolynomial&);
    friend LaurentPolynomial poly_sub(const LaurentPolynomial&, const LaurentPolynomial&);
    friend LaurentPolynomial poly_mul(const LaurentPolynomial&, const LaurentPolynomial&);
};

LaurentPolynomial poly_add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial poly_sub(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);
// Multiplies every term by m^-1 (monomials are always invertible).
LaurentPolynomial poly_div_exact(const LaurentPolynomial& a, const Monomial& m);

inline LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) { return poly_add(a, b); }
inline LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return poly_sub(a, b); }
inline LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) { return poly_mul(a, b); }

// Exact division by an arbitrary nonzero divisor via leading-term elimination.
// The quotient must exist in the Laurent ring; otherwise internal_error.
LaurentPolynomial poly_div_exact_poly(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Substitutes each generator with a replacement polynomial. Generators with
// negative exponents must map to invertible (single-term, coefficient +/-1 ...
// in practice monomial) values; otherwise internal_error.
LaurentPolynomial poly_substitute(
    const LaurentPolynomial& p,
    const std::map<Generator, LaurentPolynomial>& repl);

std::string to_string(const LaurentPolynomial& p);

// Parsers for the canonical text form; throw input_error on malformed text.
Generator parse_generator(const std::string& s);
Monomial parse_monomial(const std::string& s);
LaurentPolynomial parse_polynomial(const std::string& s);

// ---------------------------------------------------------------------------

class TropicalElement {
public:
    TropicalElement() = default;
    explicit TropicalElement(std::map<Generator, int> exps);
    static TropicalElement from_monomial(const Monomial& m);

    const std::map<Generator, int>& exponents() const { return e_; }
    Monomial as_monomial() const;

    // Semifield multiplication: exponent addition.
    TropicalElement& operator*=(const TropicalElement& o);
    friend TropicalElement operator*(TropicalElement a, const TropicalElement& b) { return a *= b; }
    TropicalElement inverse() const;

    friend bool operator==(const TropicalElement&, const TropicalElement&) = default;

private:
    std::map<Generator, int> e_;  // no zero exponents stored
};

// Generator-wise minimum of exponents; errors on an empty list because the
// tropical semifield has no neutral element for (+).
TropicalElement tropical_sum(const std::vector<TropicalElement>& elems);

// Cast defined only for single-term, coefficient-1 polynomials.
TropicalElement to_tropical(const LaurentPolynomial& p);

std::string to_string(const TropicalElement& t);

}  // namespace hlsg
