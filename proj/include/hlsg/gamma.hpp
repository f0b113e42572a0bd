/*
 * gamma.hpp
 * ---------
 * The (0,1)-sequence sets Gamma_{i,j}, their (-1,0,1) companions
 * Gamma'_{i,j}, the monomials m^eps / f^eps, segment counting, and the
 * empirical multiset comparison against snake-graph matchings.
 *
 * Sequences are indexed by vertex: entry 0 corresponds to eps_i and the last
 * entry to eps_{j+1}.
 */
#pragma once

#include <string>
#include <vector>

#include "hlsg/expansion.hpp"

namespace hlsg {

struct GammaSequence {
    std::vector<int> eps;  // entries in {0,1}
    friend auto operator<=>(const GammaSequence&, const GammaSequence&) = default;
};

struct GammaPrimeSequence {
    std::vector<int> eps_prime;  // entries in {-1,0,1}
    friend auto operator<=>(const GammaPrimeSequence&, const GammaPrimeSequence&) = default;
};

// All sequences of Gamma_{i,j}, lexicographically ordered. For j < i the set
// is the singleton zero sequence.
std::vector<GammaSequence> gamma_set(const HeightFunction& xi, int i, int j);

// |Gamma_{i,j}| by the two-term recursion (memoized); for j < i returns 1.
Int gamma_count(const HeightFunction& xi, int i, int j);

// The companion sequence; throws input_error if eps is not in Gamma_{i,j}.
GammaPrimeSequence gamma_prime(const HeightFunction& xi, int i, int j,
                               const GammaSequence& eps);

// (m^eps, f^eps) with the conventions x_0 = x_{n+1} = 1.
std::pair<Monomial, Monomial> gamma_monomials(const HeightFunction& xi, int i, int j,
                                              const GammaSequence& eps);

// One counted segment of the refined theorem: `count` is the closed-form
// number of admissible sub-sequences and [tile_begin, tile_end) the 0-based
// tile range of the sub-snake-graph whose matchings it equals.
struct SegmentCount {
    std::string kind;  // "prefix", "window", or "tail"
    int m = 0;         // the source/sink vertex for windows, else 0
    long long count = 0;
    int tile_begin = 0;
    int tile_end = 0;
};

std::vector<SegmentCount> segment_counts(const HeightFunction& xi, int i, int j);

// Multiset comparison of {m^eps f^eps} against the expansion terms
// {x(P) yhat(P) / ((prod x) F|_P)}; collects evidence, asserts nothing.
struct BijectionReport {
    std::size_t gamma_count = 0;
    std::size_t matching_count = 0;
    bool multisets_equal = false;
    bool values_distinct = false;  // a value-level bijection is forced
};

BijectionReport empirical_bijection_check(const HeightFunction& xi, int i, int j);

// CSV with header eps,eps_prime,m,f; one row per sequence.
std::string gamma_csv(const HeightFunction& xi, int i, int j);

}  // namespace hlsg
