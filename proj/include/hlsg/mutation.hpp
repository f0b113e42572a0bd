/*
 * mutation.hpp
 * ------------
 * Geometric-type cluster-algebra engine over the initial seed (x-tilde, Q_xi):
 * seed mutation by exact Laurent division, cluster variables of almost
 * positive roots via the interval mutation sequence, and the source/sink
 * exchange recursion.
 */
#pragma once

#include <map>

#include "hlsg/algebra.hpp"
#include "hlsg/quiver.hpp"

namespace hlsg {

struct Seed {
    Quiver quiver;
    // mutable vertex -> cluster variable, expanded in the initial generators
    std::map<int, LaurentPolynomial> cluster;
};

// Initial seed of Q_xi: cluster(k) = x_k; primed vertices carry the frozen
// generators x'_k.
Seed initial_seed(const HeightFunction& xi);

// One mutation at mutable vertex k: x_k^new = (prod_in + prod_out) / x_k by
// exact division ("Laurent violation" if the division is not exact).
Seed mutate_seed(const Seed& s, int k);

// Almost positive root: the interval root alpha_{i,j}, or -alpha_i encoded
// as j < i.
struct AlmostPositiveRoot {
    int i, j;
    static AlmostPositiveRoot negative_simple(int i) { return {i, i - 1}; }
    static AlmostPositiveRoot interval(int i, int j) { return {i, j}; }
};

// x[-alpha_i] = x_i; x[alpha_{i,j}] by mutating i, i+1, ..., j. Checks the
// denominator vector (exponent -1 exactly on x_i..x_j). Memoized.
LaurentPolynomial cluster_variable(const HeightFunction& xi, AlmostPositiveRoot alpha);

struct RecursionReport {
    int a_j = 0, b_j = 0, d_j1 = 0;
    LaurentPolynomial lhs, rhs;
    bool equal = false;
};

// Both sides of the source/sink exchange identity
//   x[a_{i,j}] x[a_{j+1,j+1}] = x[a_{i,j+1}]
//     + x[a_{i,max{i-1,jb-1}}]^{a_j} x'_{max{i,jb}}^{b_j}
//       x[-a_{j+2}]^{d_{j+1}} x'_{j+2}^{1-d_{j+1}}
// with x[a_{i,i-1}] = 1 and x_v = x'_v = 1 for v > n.
RecursionReport verify_recursion(const HeightFunction& xi, int i, int j);

}  // namespace hlsg
