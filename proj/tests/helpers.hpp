// Shared test fixtures: reference height functions and sweep generators.
#pragma once

#include <vector>

#include "hlsg/quiver.hpp"

namespace hlsg::testing {

// The running A_9 example height function.
inline HeightFunction example_xi() {
    return HeightFunction({-4, -5, -6, -5, -4, -3, -4, -5, -6});
}

// The alternative A_9 height function differing only at xi(8).
inline HeightFunction alternative_xi() {
    return HeightFunction({-4, -5, -6, -5, -4, -3, -4, -5, -4});
}

// The A_4 height function of the subtraction example.
inline HeightFunction a4_xi() {
    return HeightFunction({-6, -5, -6, -5});
}

// Every height function of rank n with xi(1) = 0 (2^(n-1) of them).
inline std::vector<HeightFunction> all_height_functions(int n) {
    std::vector<HeightFunction> out;
    for (long mask = 0; mask < (1L << (n - 1)); ++mask) {
        std::vector<int> v{0};
        for (int k = 0; k < n - 1; ++k) v.push_back(v.back() + (((mask >> k) & 1) ? 1 : -1));
        out.push_back(HeightFunction(v));
    }
    return out;
}

}  // namespace hlsg::testing
