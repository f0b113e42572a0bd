#include "hlsg/snake.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hlsg {

namespace {

std::pair<int, int> step(Dir d) {
    return d == Dir::East ? std::make_pair(1, 0) : std::make_pair(0, 1);
}

// The two endpoints of a grid edge.
std::pair<std::pair<int, int>, std::pair<int, int>> endpoints(const GridEdge& e) {
    if (e.vertical) return {{e.x, e.y}, {e.x, e.y + 1}};
    return {{e.x, e.y}, {e.x + 1, e.y}};
}

void assign_edge_labels(SnakeGraph& g) {
    const int d = g.tile_count();
    for (int p = 0; p + 1 < d; ++p) {
        int lo = g.label_of_tile(p), hi = g.label_of_tile(p + 1);
        if (g.directions[p] == Dir::East) {
            g.edge_labels[g.edge(p, Side::N)] = hi;
            g.edge_labels[g.edge(p + 1, Side::S)] = lo;
        } else {
            g.edge_labels[g.edge(p, Side::E)] = hi;
            g.edge_labels[g.edge(p + 1, Side::W)] = lo;
        }
    }
    // The four outer edges carry no label (a single tile has none at all).
    g.edge_labels.erase(g.edge(0, Side::W));
    g.edge_labels.erase(g.edge(0, Side::S));
    g.edge_labels.erase(g.edge(d - 1, Side::N));
    g.edge_labels.erase(g.edge(d - 1, Side::E));
}

void place_cells(SnakeGraph& g) {
    g.cells.assign(1, {0, 0});
    for (Dir d : g.directions) {
        auto [dx, dy] = step(d);
        auto [x, y] = g.cells.back();
        g.cells.push_back({x + dx, y + dy});
    }
}

}  // namespace

GridEdge SnakeGraph::edge(int pos, Side s) const {
    auto [x, y] = cells.at(pos);
    switch (s) {
        case Side::N: return {x, y + 1, false};
        case Side::S: return {x, y, false};
        case Side::E: return {x + 1, y, true};
        case Side::W: return {x, y, true};
    }
    throw internal_error("unreachable side");
}

GridEdge SnakeGraph::interior_edge(int p) const {
    if (p < 1 || p >= tile_count()) throw input_error("interior edge index out of range");
    return directions[p - 1] == Dir::East ? edge(p - 1, Side::E) : edge(p - 1, Side::N);
}

std::vector<GridEdge> SnakeGraph::all_edges() const {
    std::set<GridEdge> es;
    for (int p = 0; p < tile_count(); ++p)
        for (Side s : {Side::N, Side::S, Side::E, Side::W}) es.insert(edge(p, s));
    return {es.begin(), es.end()};
}

std::set<std::pair<int, int>> SnakeGraph::vertices() const {
    std::set<std::pair<int, int>> vs;
    for (const GridEdge& e : all_edges()) {
        auto [a, b] = endpoints(e);
        vs.insert(a);
        vs.insert(b);
    }
    return vs;
}

SnakeGraph make_snake(int first_label, const std::vector<Dir>& dirs, Anchor anchor,
                      bool with_labels) {
    SnakeGraph g;
    g.directions = dirs;
    g.anchor = anchor;
    place_cells(g);
    g.tile_labels.resize(g.tile_count());
    for (int p = 0; p < g.tile_count(); ++p) g.tile_labels[p] = first_label + p;
    if (with_labels) assign_edge_labels(g);
    return g;
}

SnakeGraph build_snake(const HeightFunction& xi, int i, int j) {
    const int n = xi.n();
    if (!(1 <= i && i <= j && j <= n)) throw input_error("snake interval out of range");
    const QuiverStats st = compute_stats(xi);
    std::vector<Dir> dirs;
    for (int l = i + 1; l <= j; ++l) {
        if (l == i + 1) {
            dirs.push_back(Dir::East);  // first two tiles share a horizontal line
        } else {
            bool straight = st.sources_sinks.count(l - 1) > 0;
            Dir prev = dirs.back();
            dirs.push_back(straight ? prev
                                    : (prev == Dir::East ? Dir::North : Dir::East));
        }
    }
    Anchor anchor = Anchor::South;
    if (j > i && build_quiver(xi).has_arrow(i + 1, i)) anchor = Anchor::West;
    return make_snake(i, dirs, anchor, true);
}

SignFunction sign_function(const SnakeGraph& g) {
    const int d = g.tile_count();
    // sigma_p = common sign of the south and east edges of tile p; the north
    // and west edges carry -sigma_p. Interior-edge matching forces sigma to
    // alternate, starting from f(e_0) = sigma_0 = -1.
    auto sigma = [](int p) { return p % 2 == 0 ? -1 : +1; };
    SignFunction sf;
    sf.signs.push_back(-1);
    for (int p = 1; p < d; ++p)
        sf.signs.push_back(g.directions[p - 1] == Dir::East ? sigma(p - 1) : -sigma(p - 1));
    // e_d is chosen among G^N, G^E so that the final run continues.
    sf.signs.push_back(sf.signs.back());
    int run = 1;
    for (size_t t = 1; t < sf.signs.size(); ++t) {
        if (sf.signs[t] == sf.signs[t - 1]) {
            ++run;
        } else {
            sf.runs.push_back(run);
            run = 1;
        }
    }
    sf.runs.push_back(run);
    return sf;
}

Int numerator(const std::vector<int>& cf) {
    Int prev2 = 1, prev1 = cf.empty() ? 1 : Int(cf[0]);
    if (cf.size() <= 1) return prev1;
    for (size_t t = 1; t < cf.size(); ++t) {
        Int cur = Int(cf[t]) * prev1 + prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

std::pair<PerfectMatching, PerfectMatching> boundary_matchings(const SnakeGraph& g) {
    const int d = g.tile_count();
    std::set<GridEdge> interior;
    for (int p = 1; p < d; ++p) interior.insert(g.interior_edge(p));
    std::map<std::pair<int, int>, std::vector<GridEdge>> adj;
    for (const GridEdge& e : g.all_edges()) {
        if (interior.count(e)) continue;
        auto [a, b] = endpoints(e);
        adj[a].push_back(e);
        adj[b].push_back(e);
    }
    for (const auto& [v, es] : adj)
        if (es.size() != 2) throw internal_error("boundary is not a single cycle");
    // Walk the boundary cycle; the two alternating edge classes are the two
    // boundary-only perfect matchings.
    std::pair<int, int> start = adj.begin()->first;
    std::pair<int, int> cur = start;
    GridEdge cur_edge = adj[start][0];
    PerfectMatching even, odd;
    int parity = 0;
    size_t steps = 0;
    do {
        (parity == 0 ? even : odd).edges.insert(cur_edge);
        auto [a, b] = endpoints(cur_edge);
        cur = (cur == a) ? b : a;
        const auto& around = adj[cur];
        cur_edge = (around[0] == cur_edge) ? around[1] : around[0];
        parity ^= 1;
        if (++steps > adj.size() + 1) throw internal_error("boundary walk did not close");
    } while (cur != start);
    if (even.edges.size() * 2 != adj.size() || parity != 0)
        throw internal_error("boundary cycle has odd length");
    GridEdge anchor_edge =
        g.edge(0, g.anchor == Anchor::South ? Side::S : Side::W);
    PerfectMatching *minimal = nullptr, *maximal = nullptr;
    if (even.edges.count(anchor_edge)) {
        minimal = &even;
        maximal = &odd;
    } else if (odd.edges.count(anchor_edge)) {
        minimal = &odd;
        maximal = &even;
    } else {
        throw internal_error("anchor edge missing from both boundary matchings");
    }
    // P+ is reached from P- by turning every tile once: y(P+) = all tiles
    for (int t = 0; t < d; ++t) maximal->turn_height[g.label_of_tile(t)] = 1;
    return {*minimal, *maximal};
}

std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g) {
    const int d = g.tile_count();
    PerfectMatching start = boundary_matchings(g).first;
    std::map<std::set<GridEdge>, std::map<int, int>> seen;
    seen[start.edges] = {};
    std::deque<PerfectMatching> queue{start};
    std::vector<PerfectMatching> out;
    while (!queue.empty()) {
        PerfectMatching p = queue.front();
        queue.pop_front();
        out.push_back(p);
        for (int t = 0; t < d; ++t) {
            GridEdge en = g.edge(t, Side::N), es = g.edge(t, Side::S);
            GridEdge ee = g.edge(t, Side::E), ew = g.edge(t, Side::W);
            bool horiz = p.edges.count(en) && p.edges.count(es);
            bool vert = p.edges.count(ee) && p.edges.count(ew);
            if (!horiz && !vert) continue;
            PerfectMatching q = p;
            for (const GridEdge& e : {en, es, ee, ew}) {
                if (q.edges.count(e)) q.edges.erase(e);
                else q.edges.insert(e);
            }
            int label = g.label_of_tile(t);
            q.turn_height[label] = 1 - q.turn_height[label];
            if (q.turn_height[label] == 0) q.turn_height.erase(label);
            auto it = seen.find(q.edges);
            if (it == seen.end()) {
                seen[q.edges] = q.turn_height;
                queue.push_back(q);
            } else if (it->second != q.turn_height) {
                throw internal_error("inconsistent turn heights");
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Monomial weight_monomial(const SnakeGraph& g, const PerfectMatching& p) {
    Monomial m = Monomial::unit();
    for (const GridEdge& e : p.edges) {
        auto it = g.edge_labels.find(e);
        if (it != g.edge_labels.end()) m = m * Monomial::of(gen_x(it->second));
    }
    return m;
}

Monomial height_monomial(const SnakeGraph&, const PerfectMatching& p) {
    Monomial m = Monomial::unit();
    for (const auto& [label, h] : p.turn_height)
        if (h != 0) m = m * Monomial::of(gen_fy(label), h);
    return m;
}

Monomial height_monomial_cycles(const SnakeGraph& g, const PerfectMatching& p) {
    const std::set<GridEdge>& minimal = boundary_matchings(g).first.edges;
    std::set<GridEdge> diff;
    for (const GridEdge& e : minimal)
        if (!p.edges.count(e)) diff.insert(e);
    for (const GridEdge& e : p.edges)
        if (!minimal.count(e)) diff.insert(e);
    Monomial m = Monomial::unit();
    for (int t = 0; t < g.tile_count(); ++t) {
        auto [cx, cy] = g.cells[t];
        // Ray cast from the tile center to the left: the tile is enclosed by
        // the cycles of the symmetric difference iff the ray crosses an odd
        // number of its vertical edges.
        int crossings = 0;
        for (const GridEdge& e : diff)
            if (e.vertical && e.y == cy && e.x <= cx) ++crossings;
        if (crossings % 2 == 1) m = m * Monomial::of(gen_fy(g.label_of_tile(t)));
    }
    return m;
}

std::vector<ZigzagPart> zigzag_decomposition(const SnakeGraph& g) {
    const SignFunction sf = sign_function(g);
    std::vector<ZigzagPart> parts;
    int l_prev = 0;  // ell_{i-1}
    for (size_t t = 0; t < sf.runs.size(); ++t) {
        int l_cur = l_prev + sf.runs[t];
        bool last = (t + 1 == sf.runs.size());
        // H_t = (G_{l_{t-1}+1}, ..., G_{l_t - 1}); the last part runs to G_d.
        // 0-based tile positions: [l_prev, l_cur - 1) (last: [l_prev, d)).
        parts.push_back({l_prev, last ? g.tile_count() : l_cur - 1});
        l_prev = l_cur;
    }
    return parts;
}

SnakeGraph subgraph(const SnakeGraph& g, int begin, int end) {
    const int d = g.tile_count();
    if (!(0 <= begin && begin < end && end <= d)) throw input_error("bad subgraph range");
    SnakeGraph h;
    h.directions.assign(g.directions.begin() + begin,
                        g.directions.begin() + (end - 1));
    place_cells(h);
    h.tile_labels.assign(g.tile_labels.begin() + begin, g.tile_labels.begin() + end);
    auto [ox, oy] = g.cells[begin];
    auto shift = [&](const GridEdge& e) { return GridEdge{e.x - ox, e.y - oy, e.vertical}; };
    std::set<GridEdge> child_edges;
    for (const GridEdge& e : h.all_edges()) child_edges.insert(e);
    for (const auto& [e, label] : g.edge_labels) {
        GridEdge s = shift(e);
        if (child_edges.count(s)) h.edge_labels[s] = label;
    }
    for (const GridEdge& e :
         {h.edge(0, Side::W), h.edge(0, Side::S),
          h.edge(end - begin - 1, Side::N), h.edge(end - begin - 1, Side::E)})
        h.edge_labels.erase(e);
    // Inherit the minimal matching: restrict P_-(g), then patch uncovered
    // corner vertices with the interior edges shared with the deleted tiles
    // (each such edge is a boundary edge of the subgraph).
    std::set<GridEdge> inherited;
    for (const GridEdge& e : boundary_matchings(g).first.edges) {
        GridEdge s = shift(e);
        if (child_edges.count(s)) inherited.insert(s);
    }
    std::map<std::pair<int, int>, int> cover;
    for (const auto& v : h.vertices()) cover[v] = 0;
    for (const GridEdge& e : inherited) {
        auto [a, b] = endpoints(e);
        ++cover[a];
        ++cover[b];
    }
    std::vector<GridEdge> patches;
    if (begin > 0) patches.push_back(shift(g.interior_edge(begin)));
    if (end < d) patches.push_back(shift(g.interior_edge(end)));
    for (const GridEdge& e : patches) {
        auto [a, b] = endpoints(e);
        if (cover.at(a) == 0 && cover.at(b) == 0) {
            inherited.insert(e);
            ++cover[a];
            ++cover[b];
        }
    }
    for (const auto& [v, c] : cover)
        if (c != 1) throw internal_error("inherited matching is not perfect");
    // The inherited minimal matching must be one of the two boundary-only
    // matchings of the subgraph; the anchor records which one.
    for (Anchor a : {Anchor::South, Anchor::West}) {
        h.anchor = a;
        if (boundary_matchings(h).first.edges == inherited) return h;
    }
    throw internal_error("inherited matching is not boundary-only");
}

SnakeGraph reverse(const SnakeGraph& g) {
    const int d = g.tile_count();
    SnakeGraph r;
    r.directions.assign(g.directions.rbegin(), g.directions.rend());
    place_cells(r);
    r.tile_labels.assign(g.tile_labels.rbegin(), g.tile_labels.rend());
    // Rotation by 180 degrees about the point that sends the last tile of g
    // to the origin: (a, b) -> (X - a, Y - b).
    const int X = g.cells[d - 1].first + 1, Y = g.cells[d - 1].second + 1;
    auto rotate = [&](const GridEdge& e) {
        if (e.vertical) return GridEdge{X - e.x, Y - e.y - 1, true};
        return GridEdge{X - e.x - 1, Y - e.y, false};
    };
    for (const auto& [e, label] : g.edge_labels) r.edge_labels[rotate(e)] = label;
    // P_-(reverse) is the rotation image of P_-(g); its anchor edge is the
    // image of G^N or G^E.
    const auto& pm = boundary_matchings(g).first.edges;
    if (pm.count(g.edge(d - 1, Side::N))) r.anchor = Anchor::South;
    else if (pm.count(g.edge(d - 1, Side::E))) r.anchor = Anchor::West;
    else throw internal_error("minimal matching misses the last-tile corner");
    return r;
}

SnakeGraph transpose(const SnakeGraph& g) {
    SnakeGraph r;
    r.tile_labels = g.tile_labels;
    for (Dir d : g.directions)
        r.directions.push_back(d == Dir::East ? Dir::North : Dir::East);
    place_cells(r);
    auto reflect = [](const GridEdge& e) { return GridEdge{e.y, e.x, !e.vertical}; };
    for (const auto& [e, label] : g.edge_labels) r.edge_labels[reflect(e)] = label;
    // Reflection swaps the south and west edges of the first tile.
    r.anchor = g.anchor == Anchor::South ? Anchor::West : Anchor::South;
    return r;
}

std::string ascii_render(const SnakeGraph& g, const PerfectMatching* p) {
    int W = 0, H = 0;
    for (auto [x, y] : g.cells) {
        W = std::max(W, x + 1);
        H = std::max(H, y + 1);
    }
    std::vector<std::string> grid(2 * H + 1, std::string(4 * W + 1, ' '));
    auto in_p = [&](const GridEdge& e) { return p && p->edges.count(e); };
    for (int t = 0; t < g.tile_count(); ++t) {
        auto [x, y] = g.cells[t];
        for (Side s : {Side::N, Side::S, Side::E, Side::W}) {
            GridEdge e = g.edge(t, s);
            if (e.vertical) {
                grid[2 * (H - e.y) - 1][4 * e.x] = in_p(e) ? '#' : '|';
            } else {
                int row = 2 * (H - e.y);
                for (int c = 1; c <= 3; ++c) grid[row][4 * e.x + c] = in_p(e) ? '=' : '-';
            }
            grid[2 * (H - e.y - (e.vertical ? 1 : 0))][4 * e.x] = '+';
        }
        for (auto [cx, cy] : {std::pair{x, y}, {x + 1, y}, {x, y + 1}, {x + 1, y + 1}})
            grid[2 * (H - cy)][4 * cx] = '+';
        std::string lab = std::to_string(g.label_of_tile(t));
        int row = 2 * (H - y) - 1, col = 4 * x + 2 - static_cast<int>(lab.size()) / 2;
        for (size_t c = 0; c < lab.size() && col + c < grid[row].size(); ++c)
            grid[row][col + c] = lab[c];
    }
    std::ostringstream os;
    for (const std::string& line : grid) os << line << "\n";
    return os.str();
}

std::string tikz_render(const SnakeGraph& g, const PerfectMatching* p) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    for (int t = 0; t < g.tile_count(); ++t) {
        auto [x, y] = g.cells[t];
        os << "\\draw (" << x << "," << y << ") rectangle (" << x + 1 << "," << y + 1
           << ");\n";
        os << "\\node at (" << x << ".5," << y << ".5) {" << g.label_of_tile(t) << "};\n";
    }
    for (const auto& [e, label] : g.edge_labels) {
        if (e.vertical)
            os << "\\node[left] at (" << e.x << "," << e.y << ".5) {" << label << "};\n";
        else
            os << "\\node[below] at (" << e.x << ".5," << e.y << ") {" << label << "};\n";
    }
    if (p) {
        for (const GridEdge& e : p->edges) {
            os << "\\draw[very thick] (" << e.x << "," << e.y << ") -- ("
               << e.x + (e.vertical ? 0 : 1) << "," << e.y + (e.vertical ? 1 : 0)
               << ");\n";
        }
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace hlsg
