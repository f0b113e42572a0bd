#include "hlsg/expansion.hpp"

#include <algorithm>

namespace hlsg {

namespace {

// Substitutes the assignment into a turn-height record.
Monomial substitute_height(const YHatAssignment& a, const std::map<int, int>& heights) {
    Monomial m = Monomial::unit();
    for (const auto& [label, h] : heights) {
        if (h == 0) continue;
        auto it = a.values.find(label);
        if (it == a.values.end()) throw internal_error("missing yhat for tile label");
        m = m * it->second.pow(h);
    }
    return m;
}

// Reverse/transpose until the first continued-fraction entry exceeds 1,
// i.e. until the second tile (if any) sits east of the first.
SnakeGraph normalized(const SnakeGraph& g) {
    if (g.directions.empty() || g.directions.front() == Dir::East) return g;
    SnakeGraph r = reverse(g);
    if (r.directions.front() == Dir::East) return r;
    return transpose(r);
}

LaurentPolynomial y_of(const SnakeGraph& g, int tile_1based) {
    return LaurentPolynomial::of(gen_fy(g.label_of_tile(tile_1based - 1)));
}

Monomial y_mono(const SnakeGraph& g, int tile_1based) {
    return Monomial::of(gen_fy(g.label_of_tile(tile_1based - 1)));
}

std::vector<int> run_prefix_sums(const std::vector<int>& runs) {
    std::vector<int> l{0};
    for (int a : runs) l.push_back(l.back() + a);
    return l;
}

LaurentPolynomial numerator_poly(const std::vector<LaurentPolynomial>& L) {
    LaurentPolynomial prev2 = LaurentPolynomial::one();
    LaurentPolynomial prev1 = L.empty() ? LaurentPolynomial::one() : L[0];
    for (size_t t = 1; t < L.size(); ++t) {
        LaurentPolynomial cur = L[t] * prev1 + prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

// phi_i and C_i of the continued-fraction formulas; `south` selects
// Rabideau's original orientation (_S G in P_-), otherwise the dual.
struct CFData {
    Monomial C;
    LaurentPolynomial phi;
};

CFData cf_data(const SnakeGraph& g, const std::vector<int>& l, int idx, bool south) {
    const bool odd = (idx % 2 == 1);
    const int lo = l[idx - 1], hi = l[idx];  // ell_{i-1}, ell_i
    CFData out{Monomial::unit(), LaurentPolynomial::zero()};
    // "First" orientation: phi = sum_{k=lo}^{hi-1} prod_{j=lo+1}^{k} y;
    // "second": phi = sum_{k=lo+1}^{hi} prod_{j=k}^{hi-1} y.
    const bool first_form = (south == odd);
    if (first_form) {
        for (int k = lo; k <= hi - 1; ++k) {
            Monomial m = Monomial::unit();
            for (int j = lo + 1; j <= k; ++j) m = m * y_mono(g, j);
            out.phi = out.phi + LaurentPolynomial::of(m);
        }
    } else {
        for (int k = lo + 1; k <= hi; ++k) {
            Monomial m = Monomial::unit();
            for (int j = k; j <= hi - 1; ++j) m = m * y_mono(g, j);
            out.phi = out.phi + LaurentPolynomial::of(m);
        }
    }
    if (south) {
        if (odd) {
            for (int j = 1; j <= lo; ++j) out.C = out.C * y_mono(g, j);
        } else {
            for (int j = 1; j <= hi - 1; ++j) out.C = out.C * y_mono(g, j).inverse();
        }
    } else {
        const int l1 = l[1];
        if (odd) {
            for (int j = l1; j <= hi - 1; ++j) out.C = out.C * y_mono(g, j).inverse();
        } else {
            for (int j = l1; j <= lo; ++j) out.C = out.C * y_mono(g, j);
        }
    }
    return out;
}

}  // namespace

LaurentPolynomial f_polynomial_direct(const SnakeGraph& g) {
    LaurentPolynomial f = LaurentPolynomial::zero();
    for (const PerfectMatching& p : enumerate_matchings(g))
        f = f + LaurentPolynomial::of(height_monomial(g, p));
    return f;
}

std::vector<LaurentPolynomial> cf_laurent_terms(const SnakeGraph& g) {
    const SignFunction sf = sign_function(g);
    if (sf.runs[0] < 2) throw input_error("continued-fraction form requires a_1 > 1");
    const auto l = run_prefix_sums(sf.runs);
    const bool south = (g.anchor == Anchor::South);
    std::vector<LaurentPolynomial> L;
    for (size_t t = 1; t <= sf.runs.size(); ++t) {
        CFData d = cf_data(g, l, static_cast<int>(t), south);
        L.push_back(d.phi * LaurentPolynomial::of(d.C));
    }
    return L;
}

LaurentPolynomial f_polynomial_cf(const SnakeGraph& g0) {
    const SnakeGraph g = normalized(g0);
    const SignFunction sf = sign_function(g);
    const auto l = run_prefix_sums(sf.runs);
    const bool south = (g.anchor == Anchor::South);
    const int n = static_cast<int>(sf.runs.size());
    LaurentPolynomial num = numerator_poly(cf_laurent_terms(g));
    // Parity-dependent C_n^{-1} correction: for the south orientation it
    // applies when n is even, for the dual (west) orientation when n is odd.
    const bool correct = south ? (n % 2 == 0) : (n % 2 == 1);
    if (!correct) return num;
    Monomial cn = cf_data(g, l, n, south).C;
    return num * LaurentPolynomial::of(cn.inverse());
}

bool check_dual_recursion(const SnakeGraph& g0) {
    const SnakeGraph g = normalized(g0);
    const SignFunction sf = sign_function(g);
    const int n = static_cast<int>(sf.runs.size());
    if (n < 2) return true;  // nothing to recurse on
    const auto l = run_prefix_sums(sf.runs);
    const int d = g.tile_count();
    auto part_f = [&](int begin, int end) {
        if (begin >= end) return LaurentPolynomial::one();
        return f_polynomial_direct(subgraph(g, begin, end));
    };
    LaurentPolynomial f_hn = part_f(l[n - 1], d);
    LaurentPolynomial f_pre1 = part_f(0, l[n - 1] - 1);
    LaurentPolynomial f_pre2 =
        (n >= 3) ? part_f(0, l[n - 2] - 1) : LaurentPolynomial::one();
    // y34 carries the sign-changed tile between the two leading summands and
    // y56 the tail tiles; which parity gets which depends on the anchor.
    const bool south = (g.anchor == Anchor::South);
    const bool even = (n % 2 == 0);
    const bool y34_is_tile = south ? !even : even;
    LaurentPolynomial y34 = y34_is_tile ? y_of(g, l[n - 1]) : LaurentPolynomial::one();
    LaurentPolynomial y56 = LaurentPolynomial::one();
    if (!y34_is_tile) {
        Monomial m = Monomial::unit();
        for (int j = std::max(1, l[n - 2]); j <= l[n] - 1; ++j) m = m * y_mono(g, j);
        y56 = LaurentPolynomial::of(m);
    }
    LaurentPolynomial rhs = y34 * f_pre1 * f_hn + y56 * f_pre2;
    return rhs == f_polynomial_direct(g);
}

YHatAssignment yhat(const HeightFunction& xi, int i, int j) {
    const int n = xi.n();
    if (!(1 <= i && i <= j && j <= n)) throw input_error("yhat interval out of range");
    const Quiver q = build_quiver(xi);
    auto frozen = [&](int v) { return v < 0 || v < i || v > j; };
    auto gen_of = [](int v) { return v < 0 ? gen_xp(-v) : gen_x(v); };
    YHatAssignment a;
    for (int l = i; l <= j; ++l) {
        Monomial m = Monomial::unit();
        for (const auto& [ar, mult] : q.arrows()) {
            if (ar.second == l && frozen(ar.first))
                m = m * Monomial::of(gen_of(ar.first), mult);
            if (ar.first == l && frozen(ar.second))
                m = m * Monomial::of(gen_of(ar.second), -mult);
        }
        a.values[l] = m;
    }
    return a;
}

TropicalElement tropical_f(const SnakeGraph& g, const YHatAssignment& a) {
    std::vector<TropicalElement> vals;
    for (const PerfectMatching& p : enumerate_matchings(g))
        vals.push_back(TropicalElement::from_monomial(substitute_height(a, p.turn_height)));
    TropicalElement f = tropical_sum(vals);
    // Tropically, F collapses to 1 (+) y(P+): the constant term clips every
    // positive exponent of the substituted maximal-matching height.
    Monomial top = Monomial::unit();
    for (int t = 0; t < g.tile_count(); ++t) top = top * a.values.at(g.label_of_tile(t));
    const TropicalElement clipped = tropical_sum(
        {TropicalElement{}, TropicalElement::from_monomial(top)});
    if (!(f == clipped))
        throw internal_error("tropical F differs from the maximal-matching height");
    return f;
}

LaurentPolynomial expand(const HeightFunction& xi, int i, int j) {
    const SnakeGraph g = build_snake(xi, i, j);
    const YHatAssignment a = yhat(xi, i, j);
    const Monomial fp_inv = tropical_f(g, a).inverse().as_monomial();
    Monomial denom = Monomial::unit();
    for (int l = i; l <= j; ++l) denom = denom * Monomial::of(gen_x(l), -1);
    LaurentPolynomial out = LaurentPolynomial::zero();
    for (const PerfectMatching& p : enumerate_matchings(g)) {
        Monomial term =
            weight_monomial(g, p) * substitute_height(a, p.turn_height) * fp_inv * denom;
        out = out + LaurentPolynomial::of(term);
    }
    return out;
}

namespace {

// Direction of a mutable vertex relative to its neighbours in Q_xi.
bool has_outgoing_mutable(const Quiver& q, int v) {
    return q.has_arrow(v, v - 1) || q.has_arrow(v, v + 1);
}

}  // namespace

PerfectMatching extremal_matching(const HeightFunction& xi, int i, int j) {
    const SnakeGraph g = build_snake(xi, i, j);
    const Quiver q = build_quiver(xi);
    const QuiverStats st = compute_stats(xi);
    const std::vector<ZigzagPart> parts = zigzag_decomposition(g);
    const int l = static_cast<int>(parts.size());
    const int d = g.tile_count();
    std::set<int> turned;  // 0-based tile positions
    auto turn_range = [&](int b, int e) {
        for (int t = b; t < e; ++t) turned.insert(t);
    };
    const bool ss_i = st.sources_sinks.count(i) > 0;
    for (int t = 1; t <= l; ++t) {
        const ZigzagPart& part = parts[t - 1];
        const int sign_tile = part.end;  // position of the sign-changed tile after H_t
        if (t == 1 && ss_i) {
            if (has_outgoing_mutable(q, i)) {
                turned.insert(0);  // i is a source: only G_i is turned
            } else {
                turn_range(1, part.end);  // i is a sink: H_1 minus G_i
                if (l > 1) turned.insert(sign_tile);
            }
            continue;
        }
        const int v = g.label_of_tile(part.begin);  // i + ell_{t-1}
        if (q.has_arrow(v, -v)) continue;           // v -> v': nothing turned
        if (!q.has_arrow(-v, v))
            throw internal_error("vertex lacks both frozen arrows");
        turn_range(part.begin, part.end);
        if (t != l) turned.insert(sign_tile);
    }
    // Realize the turn set: toggle the region boundary of every maximal run
    // of turned tiles on top of P_-.
    PerfectMatching p = boundary_matchings(g).first;
    std::vector<std::pair<int, int>> runs;
    for (int t = 0; t < d; ++t) {
        if (!turned.count(t)) continue;
        if (!runs.empty() && runs.back().second == t - 1) runs.back().second = t;
        else runs.emplace_back(t, t);
    }
    for (auto [b, e] : runs) {
        std::map<GridEdge, int> owners;
        for (int t = b; t <= e; ++t)
            for (Side s : {Side::N, Side::S, Side::E, Side::W}) ++owners[g.edge(t, s)];
        for (const auto& [edge, cnt] : owners) {
            if (cnt != 1) continue;  // interior to the region
            if (p.edges.count(edge)) p.edges.erase(edge);
            else p.edges.insert(edge);
        }
    }
    std::map<std::pair<int, int>, int> cover;
    for (const GridEdge& e : p.edges) {
        ++cover[{e.x, e.y}];
        ++cover[e.vertical ? std::pair{e.x, e.y + 1} : std::pair{e.x + 1, e.y}];
    }
    const auto vs = g.vertices();
    if (cover.size() != vs.size())
        throw internal_error("extremal gluing is not a perfect matching");
    for (const auto& [v, c] : cover)
        if (c != 1 || !vs.count(v))
            throw internal_error("extremal gluing is not a perfect matching");
    for (int t : turned) p.turn_height[g.label_of_tile(t)] = 1;
    return p;
}

Monomial extremal_value(const HeightFunction& xi, int i, int j) {
    const QuiverStats st = compute_stats(xi);
    const SnakeGraph g = build_snake(xi, i, j);
    const SignFunction sf = sign_function(g);
    const auto l = run_prefix_sums(sf.runs);
    const int n = xi.n();
    Monomial m = Monomial::unit();
    auto add = [&](int v, bool primed, int e) {
        if (v > n) return;  // x_{n+1} = x'_{n+1} = 1
        m = m * Monomial::of(primed ? gen_xp(v) : gen_x(v), e);
    };
    add(i, true, 1);
    add(i, false, -1);
    // the x'_{i+1}/x_{i+1} pair appears only when the first zigzag part has
    // more than one tile, which needs i < j
    if (i < j && st.sources_sinks.count(i)) {
        add(i + 1, true, 1);
        add(i + 1, false, -1);
    }
    for (size_t t = 1; t + 1 < l.size(); ++t) {
        add(i + l[t], true, 1);
        add(i + l[t], false, -1);
    }
    if (st.diamond[j - 1] != j) add(j + 1, false, 1);
    return m;
}

std::pair<Monomial, Monomial> extremal_weights(const HeightFunction& xi, int i, int j) {
    const DominantMonomial top = iota_interval_monomial(xi, i, j);
    const int n = xi.n();
    Monomial highest = Monomial::unit(), lowest = Monomial::unit();
    for (const auto& [b, a] : top.factors) {
        highest = highest * Monomial::of(gen_Y(b, a));
        lowest = lowest * Monomial::of(gen_Y(n + 1 - b, a + n + 1), -1);
    }
    return {highest, lowest};
}

}  // namespace hlsg
