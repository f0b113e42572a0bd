/*
 * hl.hpp
 * ------
 * Dominant Y-monomials, the combinatorial characterization of HL modules
 * (zigzag node/gap conditions), the omega(i,j) monomial attached to a height
 * function, and reconstruction of a height function from an HL monomial.
 */
#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hlsg/quiver.hpp"

namespace hlsg {

struct DominantMonomial {
    // (i, r) factors with positive multiplicity, kept sorted by (i, r).
    std::vector<std::pair<int, int>> factors;

    static DominantMonomial parse(const std::string& text);  // Y[i,r]Y[i,r]...
    std::string str() const;
    friend bool operator==(const DominantMonomial&, const DominantMonomial&) = default;
};

struct HLShape {
    std::vector<int> nodes;   // i_1 < i_2 < ... < i_k
    std::vector<int> shifts;  // a_1, ..., a_k
    friend bool operator==(const HLShape&, const HLShape&) = default;
};

struct HLRejection {
    int condition;  // violated condition index: 1, 2 or 3
    std::string reason;
};

struct HLCheckResult {
    std::optional<HLShape> shape;        // set iff accepted
    std::optional<HLRejection> rejection;
    bool accepted() const { return shape.has_value(); }
};

// Conditions: (i) strictly increasing distinct nodes (and all exponents 1),
// (ii) alternating shift differences, (iii) |a_j - a_{j-1}| = i_j - i_{j-1} + 2.
HLCheckResult check_hl(const DominantMonomial& m);

// omega(i,j): nodes are i, the interior sign-change points of xi strictly
// between i and j, and j; shifts follow the two-sided +-1 rules.
DominantMonomial omega(const HeightFunction& xi, int i, int j);

// Highest l-weight of x[alpha_{i,j}] under the iota dictionary: the
// fundamental Y_{i, xi(i+1) +- 2} when j = i_diamond, else omega(i, j_bar).
DominantMonomial iota_interval_monomial(const HeightFunction& xi, int i, int j);

// Rebuilds a height function on rank n realizing the shape, together with the
// interval [i, j] whose iota dictionary value reproduces it. The vertices
// (j-1), j, ..., n of the result are sources or sinks; j is the minimal
// admissible choice with j_bar = i_k.
std::tuple<HeightFunction, int, int> reconstruct_height_function(const HLShape& shape, int n);

}  // namespace hlsg
