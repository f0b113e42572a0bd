/*
 * snake.hpp
 * ---------
 * Labeled snake graphs built from intervals of mutable vertices, sign
 * functions and their runs (continued fractions), zigzag decomposition, and
 * perfect-matching enumeration with weight and height monomials.
 *
 * Geometry: tile t (0-based position p, vertex label i+p) occupies the unit
 * square with lower-left corner cell(p). Edges are unit segments identified
 * by (x, y, orientation), so interior-edge identification is automatic.
 */
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hlsg/algebra.hpp"
#include "hlsg/quiver.hpp"

namespace hlsg {

enum class Dir { East, North };
enum class Side { N, S, E, W };
enum class Anchor { South, West };  // which outer edge of G_i lies in P_-

struct GridEdge {
    int x, y;
    bool vertical;  // vertical: (x,y)-(x,y+1); horizontal: (x,y)-(x+1,y)
    friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

struct SnakeGraph {
    std::vector<int> tile_labels;           // vertex label per tile position
    std::vector<Dir> directions;            // placement of tiles 2..d
    std::vector<std::pair<int, int>> cells; // lower-left corner per tile
    // edge_labels[e] = vertex label; outer edges _W G, _S G, G^N, G^E absent.
    std::map<GridEdge, int> edge_labels;
    Anchor anchor = Anchor::South;

    int tile_count() const { return static_cast<int>(cells.size()); }
    int label_of_tile(int pos) const { return tile_labels.at(pos); }  // 0-based pos
    GridEdge edge(int pos, Side s) const;
    // Interior edge e_p shared by tiles at positions p-1 and p (1 <= p < d).
    GridEdge interior_edge(int p) const;
    std::vector<GridEdge> all_edges() const;
    std::set<std::pair<int, int>> vertices() const;  // grid corners
};

struct SignFunction {
    std::vector<int> signs;  // +1 / -1 on e_0 .. e_d
    std::vector<int> runs;   // maximal constant-sign block lengths
};

struct PerfectMatching {
    std::set<GridEdge> edges;
    std::map<int, int> turn_height;  // tile label -> height exponent (0/1)
    friend bool operator<(const PerfectMatching& a, const PerfectMatching& b) {
        return a.edges < b.edges;
    }
};

// Snake graph of the interval [i, j] of Q_xi: first step EAST, straight at
// tile l iff vertex (l-1) is a source or sink, labels per the local rules,
// minimal-matching anchor WEST iff the arrow (i+1) -> i exists.
SnakeGraph build_snake(const HeightFunction& xi, int i, int j);

// Freestanding constructor used by tests: directions given explicitly.
SnakeGraph make_snake(int first_label, const std::vector<Dir>& dirs, Anchor anchor,
                      bool with_labels = true);

SignFunction sign_function(const SnakeGraph& g);

// Numerator of a positive continued fraction; numerator({}) = 1.
Int numerator(const std::vector<int>& cf);

// The two boundary-only matchings; minimal first (per the anchor).
std::pair<PerfectMatching, PerfectMatching> boundary_matchings(const SnakeGraph& g);

// Breadth-first closure from P_- under single-tile turns; heights tracked by
// toggling the turned tile. Sorted canonically (by edge set).
std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g);

Monomial weight_monomial(const SnakeGraph& g, const PerfectMatching& p);

// Height monomial from the turn record.
Monomial height_monomial(const SnakeGraph& g, const PerfectMatching& p);
// Independent implementation: tiles enclosed by the cycles of P_- (+) P.
Monomial height_monomial_cycles(const SnakeGraph& g, const PerfectMatching& p);

// Zigzag decomposition H_1..H_n; a part is the (possibly empty) 0-based tile
// position range [begin, end); empty range denotes the single interior edge.
struct ZigzagPart {
    int begin, end;
    bool empty() const { return begin >= end; }
};
std::vector<ZigzagPart> zigzag_decomposition(const SnakeGraph& g);

// Sub-snake-graph on tile positions [begin, end) keeping labels; anchor is
// recomputed so that the minimal matching is the restriction of P_-(g)
// (plus at most one interior edge).
SnakeGraph subgraph(const SnakeGraph& g, int begin, int end);

// 180-degree rotation: G[a_1..a_n] -> G[a_n..a_1]; labels follow the tiles.
SnakeGraph reverse(const SnakeGraph& g);

// Reflection across the line y = x (EAST <-> NORTH); merges a leading
// 1-run into the next run, so together with reverse() it normalizes any
// graph to a continued fraction with a_1 > 1.
SnakeGraph transpose(const SnakeGraph& g);

std::string ascii_render(const SnakeGraph& g, const PerfectMatching* p = nullptr);
std::string tikz_render(const SnakeGraph& g, const PerfectMatching* p = nullptr);

}  // namespace hlsg
