/*
 * quiver.hpp
 * ----------
 * Height functions on the type-A diagram, the iced quiver Q_xi they induce,
 * its combinatorial statistics (diamond / bullet / bar, sources and sinks),
 * and generic Fomin-Zelevinsky quiver mutation.
 *
 * Vertex encoding: mutable vertex i is the integer +i (1..n); the frozen
 * vertex i' is -i. Arrows are stored as a multiset (map arrow -> multiplicity)
 * because intermediate mutated quivers can carry parallel arrows even though
 * Q_xi itself is multiplicity-free.
 */
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hlsg {

class HeightFunction {
public:
    // values = (xi(1), ..., xi(n)); consecutive values must differ by 1.
    explicit HeightFunction(std::vector<int> values);

    int n() const { return static_cast<int>(v_.size()); }
    // Defined on the extended range [0, n+1] with xi(0)=xi(2), xi(n+1)=xi(n-1).
    int operator()(int i) const;

    const std::vector<int>& values() const { return v_; }
    friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

private:
    std::vector<int> v_;
};

using Arrow = std::pair<int, int>;  // (from, to) in the signed vertex encoding

class Quiver {
public:
    Quiver(int n, std::map<Arrow, int> arrows);

    int n() const { return n_; }
    static bool is_frozen(int v) { return v < 0; }
    const std::map<Arrow, int>& arrows() const { return a_; }
    int multiplicity(int from, int to) const;
    bool has_arrow(int from, int to) const { return multiplicity(from, to) > 0; }

    // Fomin-Zelevinsky mutation at a mutable vertex k (three steps: add
    // composite arrows through k, reverse arrows at k, cancel 2-cycles).
    // Arrows between two frozen vertices are never created.
    Quiver mutated(int k) const;

    // Full subquiver on the mutable vertices {i..j} (frozen vertices dropped).
    Quiver mutable_subquiver(int i, int j) const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    int n_;
    std::map<Arrow, int> a_;  // multiplicity >= 1 only
};

struct QuiverStats {
    std::vector<int> diamond;        // diamond[i-1] = i_diamond
    std::vector<int> bullet;         // bullet[j-1]  = j_bullet
    std::vector<int> bar;            // bar[k-1]     = k_bar
    std::set<int> sources_sinks;     // mutable vertices that are sources/sinks
};

// Compiles the local arrow template over every consecutive pair of the
// extended height function and drops arrows touching the virtual vertices
// 0, n+1 and (n+1)'; duplicates from overlapping windows are deduplicated.
Quiver build_quiver(const HeightFunction& xi);

QuiverStats compute_stats(const HeightFunction& xi);

std::string vertex_name(int v);
std::string to_dot(const Quiver& q);
std::string stats_table(const HeightFunction& xi);  // Example 2.3 layout

}  // namespace hlsg
