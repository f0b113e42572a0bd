#include "hlsg/hl.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hlsg/algebra.hpp"

namespace hlsg {

DominantMonomial DominantMonomial::parse(const std::string& text) {
    DominantMonomial m;
    size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
        if (text[pos] != 'Y') throw input_error("expected 'Y[' in monomial text");
        size_t close = text.find(']', pos);
        if (close == std::string::npos) throw input_error("unterminated Y factor");
        Generator g = parse_generator(text.substr(pos, close - pos + 1));
        m.factors.emplace_back(g.i, g.r);
        pos = close + 1;
    }
    if (m.factors.empty()) throw input_error("empty Y-monomial");
    std::sort(m.factors.begin(), m.factors.end());
    return m;
}

std::string DominantMonomial::str() const {
    std::ostringstream os;
    for (const auto& [i, r] : factors) os << "Y[" << i << "," << r << "]";
    return os.str();
}

HLCheckResult check_hl(const DominantMonomial& m) {
    HLCheckResult res;
    auto reject = [&](int cond, std::string why) {
        res.rejection = HLRejection{cond, std::move(why)};
        return res;
    };
    const auto& f = m.factors;
    // (i) nodes strictly increasing (factors sorted; equal nodes violate it).
    for (size_t t = 1; t < f.size(); ++t)
        if (f[t].first == f[t - 1].first)
            return reject(1, "repeated node i=" + std::to_string(f[t].first));
    // (iii) gap condition, checked before (ii) reports on differences of 0.
    for (size_t t = 1; t < f.size(); ++t) {
        int gap = std::abs(f[t].second - f[t - 1].second);
        int expect = f[t].first - f[t - 1].first + 2;
        if (gap != expect)
            return reject(3, "|a_" + std::to_string(t + 1) + "-a_" + std::to_string(t) +
                                 "| = " + std::to_string(gap) + " != " + std::to_string(expect));
    }
    // (ii) alternating shift differences.
    for (size_t t = 1; t + 1 < f.size(); ++t) {
        long d1 = f[t].second - f[t - 1].second;
        long d2 = f[t + 1].second - f[t].second;
        if (d1 * d2 >= 0)
            return reject(2, "shifts do not alternate at position " + std::to_string(t + 1));
    }
    HLShape shape;
    for (const auto& [i, a] : f) {
        shape.nodes.push_back(i);
        shape.shifts.push_back(a);
    }
    res.shape = std::move(shape);
    return res;
}

DominantMonomial omega(const HeightFunction& xi, int i, int j) {
    if (!(1 <= i && i < j && j <= xi.n()))
        throw input_error("omega requires 1 <= i < j <= n");
    std::vector<int> nodes{i};
    for (int p = i + 1; p < j; ++p)
        if (xi(p - 1) == xi(p + 1)) nodes.push_back(p);
    nodes.push_back(j);
    DominantMonomial m;
    for (size_t l = 0; l < nodes.size(); ++l) {
        int v = nodes[l];
        int a;
        if (l == 0) {
            // a_1 = xi(i) +- 1 if xi(i+1) = xi(i) -+ 1
            a = (xi(i + 1) == xi(i) - 1) ? xi(i) + 1 : xi(i) - 1;
        } else {
            // a_l = xi(i_l) +- 1 if xi(i_l) = xi(i_l - 1) +- 1
            a = (xi(v) == xi(v - 1) + 1) ? xi(v) + 1 : xi(v) - 1;
        }
        m.factors.emplace_back(v, a);
    }
    return m;
}

DominantMonomial iota_interval_monomial(const HeightFunction& xi, int i, int j) {
    if (!(1 <= i && i <= j && j <= xi.n()))
        throw input_error("interval out of range");
    const QuiverStats st = compute_stats(xi);
    if (j == st.diamond[i - 1]) {
        int a = (xi(i) == xi(i + 1) - 1) ? xi(i + 1) - 2 : xi(i + 1) + 2;
        DominantMonomial m;
        m.factors.emplace_back(i, a);
        return m;
    }
    int jbar = st.bar[j - 1];
    if (jbar <= i)
        throw input_error("iota dictionary undefined: j_bar <= i");
    return omega(xi, i, jbar);
}

std::tuple<HeightFunction, int, int> reconstruct_height_function(const HLShape& shape, int n) {
    const auto& nodes = shape.nodes;
    const auto& a = shape.shifts;
    const int k = static_cast<int>(nodes.size());
    if (k == 0) throw input_error("empty shape");
    if (nodes.back() > n) throw input_error("shape exceeds rank");
    const int i = nodes.front();
    std::vector<int> v(n + 1, 0);  // 1-based working array
    // Case 1 when a_1 < a_2 (and for k = 1 by convention); Case 2 otherwise.
    const bool case1 = (k == 1) || (a[0] < a[1]);
    if (case1) {
        v[i] = a[0] + 1;
        for (int l = 0; l + 1 < k; ++l) {
            // ascending on [i_{2l'+1}, i_{2l'+2}], descending on the next leg
            bool asc = (l % 2 == 0);
            for (int x = nodes[l] + 1; x <= nodes[l + 1]; ++x)
                v[x] = asc ? a[l] + (x - nodes[l]) + 1 : a[l] - (x - nodes[l]) - 1;
        }
    } else {
        v[i] = a[0] - 1;
        for (int l = 0; l + 1 < k; ++l) {
            bool desc = (l % 2 == 0);
            for (int x = nodes[l] + 1; x <= nodes[l + 1]; ++x)
                v[x] = desc ? a[l] - (x - nodes[l]) - 1 : a[l] + (x - nodes[l]) + 1;
        }
    }
    // Left of i: unit slope toward i (descending into i for Case 1,
    // ascending for Case 2).
    for (int x = i - 1; x >= 1; --x) v[x] = case1 ? v[x + 1] + 1 : v[x + 1] - 1;
    // Right of i_k: alternate so that (j-1), j, ..., n are sources or sinks.
    const int ik = nodes.back();
    if (ik < n) {
        if (ik >= 2) {
            v[ik + 1] = v[ik - 1];
        } else {
            // i_k = 1 (so k = 1, i = 1): seed the ascent demanded by Case 1.
            v[2] = v[1] + (case1 ? 1 : -1);
        }
        for (int x = ik + 1; x <= n - 1; ++x) v[x + 1] = v[x - 1];
    }
    HeightFunction xi(std::vector<int>(v.begin() + 1, v.end()));
    // Recover the monomial and find the minimal admissible interval end.
    DominantMonomial target;
    for (int t = 0; t < k; ++t) target.factors.emplace_back(nodes[t], a[t]);
    for (int j = i; j <= n; ++j) {
        try {
            if (iota_interval_monomial(xi, i, j) == target)
                return {xi, i, j};
        } catch (const input_error&) {
            // j_bar out of range for this j; keep scanning.
        }
    }
    throw internal_error("reconstruct_height_function: no admissible interval found");
}

}  // namespace hlsg
