#include "hlsg/qcharacter.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace hlsg {

namespace {

// Y_{b,s+b-1} Y_{b-1,s+b}^{-1} with Y_0 = Y_{n+1} = 1.
Monomial box(int n, int b, int s) {
    Monomial m = Monomial::unit();
    if (b <= n) m = m * Monomial::of(gen_Y(b, s + b - 1));
    if (b - 1 >= 1) m = m * Monomial::of(gen_Y(b - 1, s + b), -1);
    return m;
}

// Column monomial of the strictly increasing entries J at base parameter s.
Monomial column(int n, const std::vector<int>& J, int s) {
    const int i = static_cast<int>(J.size());
    Monomial m = Monomial::unit();
    for (int t = 1; t <= i; ++t) m = m * box(n, J[t - 1], s + i - 2 * t + 1);
    return m;
}

std::vector<std::vector<int>> subsets(int top, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= top - (size - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

QCharacter power(const QCharacter& q, int e) {
    QCharacter out = LaurentPolynomial::one();
    for (int t = 0; t < e; ++t) out = out * q;
    return out;
}

void check_positive(const QCharacter& q) {
    for (const auto& [m, c] : q.terms()) {
        (void)m;
        if (c <= 0) throw internal_error("negative multiplicity in q-character");
    }
}

}  // namespace

Monomial A_monomial(int n, int i, int r) {
    Monomial m = Monomial::of(gen_Y(i, r - 1)) * Monomial::of(gen_Y(i, r + 1));
    if (i - 1 >= 1) m = m * Monomial::of(gen_Y(i - 1, r), -1);
    if (i + 1 <= n) m = m * Monomial::of(gen_Y(i + 1, r), -1);
    return m;
}

bool is_a_nonneg_product(int n, const Monomial& ratio) {
    // Solve ratio = prod A_{i,r}^{c_{i,r}} by marching r upward: the Y_{i,r}
    // exponent equation determines c_{i,r+1} from lower levels.
    std::map<std::pair<int, int>, int> exp;  // (i, r) -> exponent in ratio
    int rmin = 0, rmax = 0;
    bool any = false;
    for (const auto& [g, e] : ratio.exponents()) {
        if (g.kind != Kind::Y) return false;
        exp[{g.i, g.r}] = e;
        rmin = any ? std::min(rmin, g.r) : g.r;
        rmax = any ? std::max(rmax, g.r) : g.r;
        any = true;
    }
    if (!any) return true;  // empty product
    std::map<std::pair<int, int>, int> c;
    auto cget = [&](int i, int r) {
        if (i < 1 || i > n) return 0;
        auto it = c.find({i, r});
        return it == c.end() ? 0 : it->second;
    };
    for (int r = rmin; r <= rmax + 2; ++r) {
        for (int i = 1; i <= n; ++i) {
            auto it = exp.find({i, r});
            const int want = (it == exp.end()) ? 0 : it->second;
            const int v = want - cget(i, r - 1) + cget(i - 1, r) + cget(i + 1, r);
            if (v != 0) c[{i, r + 1}] = v;
        }
    }
    for (const auto& [key, v] : c) {
        if (key.second > rmax + 1 && v != 0) return false;  // no finite solution
        if (v < 0) return false;
    }
    return true;
}

std::pair<Monomial, Monomial> highest_lowest(int n, const QCharacter& q) {
    std::vector<Monomial> terms;
    for (const auto& [m, c] : q.terms()) {
        (void)c;
        terms.push_back(m);
    }
    if (terms.empty()) throw input_error("empty q-character");
    std::vector<Monomial> high, low;
    for (const Monomial& m : terms) {
        bool maximal = true, minimal = true;
        for (const Monomial& o : terms) {
            if (o == m) continue;
            if (is_a_nonneg_product(n, o * m.inverse())) maximal = false;
            if (is_a_nonneg_product(n, m * o.inverse())) minimal = false;
            if (!maximal && !minimal) break;
        }
        if (maximal) high.push_back(m);
        if (minimal) low.push_back(m);
    }
    if (high.size() != 1) throw internal_error("highest l-weight monomial is not unique");
    if (low.size() != 1) throw internal_error("lowest l-weight monomial is not unique");
    return {high.front(), low.front()};
}

QCharacter qchar_fundamental(int n, int i, int a) {
    if (!(1 <= i && i <= n)) throw input_error("node out of range");
    static std::map<std::tuple<int, int, int>, QCharacter> cache;
    if (auto it = cache.find({n, i, a}); it != cache.end()) return it->second;
    QCharacter q = LaurentPolynomial::zero();
    for (const auto& J : subsets(n + 1, i)) q = q + LaurentPolynomial::of(column(n, J, a));
    cache.emplace(std::tuple{n, i, a}, q);
    return q;
}

QCharacter qchar_kr2(int n, int i, int xi_i) {
    if (!(1 <= i && i <= n)) throw input_error("node out of range");
    static std::map<std::tuple<int, int, int>, QCharacter> cache;
    if (auto it = cache.find({n, i, xi_i}); it != cache.end()) return it->second;
    const int a = xi_i - 1;
    QCharacter q = LaurentPolynomial::zero();
    const auto cols = subsets(n + 1, i);
    for (const auto& J1 : cols) {
        for (const auto& J2 : cols) {
            bool le = true;
            for (size_t t = 0; t < J1.size(); ++t)
                if (J1[t] > J2[t]) { le = false; break; }
            if (!le) continue;
            q = q + LaurentPolynomial::of(column(n, J1, a) * column(n, J2, a + 2));
        }
    }
    cache.emplace(std::tuple{n, i, xi_i}, q);
    return q;
}

QCharacter iota_substitute(const LaurentPolynomial& p, const HeightFunction& xi) {
    const int n = xi.n();
    if (p == LaurentPolynomial::zero()) return p;
    auto chi = [&](const Generator& g) {
        if (g.kind == Kind::X) return qchar_fundamental(n, g.i, xi(g.i + 1));
        if (g.kind == Kind::XPrime) return qchar_kr2(n, g.i, xi(g.i));
        throw input_error("iota substitution expects x / x' generators only");
    };
    // Common denominator monomial D so that p * D has nonnegative exponents.
    std::map<Generator, int> lo;
    for (const auto& [mono, coef] : p.terms()) {
        (void)coef;
        for (const auto& [g, e] : mono.exponents()) lo[g] = std::min(lo[g], e);
    }
    Monomial D = Monomial::unit();
    for (const auto& [g, e] : lo)
        if (e < 0) D = D * Monomial::of(g, -e);
    QCharacter num = LaurentPolynomial::zero();
    for (const auto& [mono, coef] : p.terms()) {
        QCharacter t = LaurentPolynomial::of(Monomial::unit(), coef);
        const Monomial shifted = mono * D;
        for (const auto& [g, e] : shifted.exponents()) t = t * power(chi(g), e);
        num = num + t;
    }
    QCharacter den = LaurentPolynomial::one();
    for (const auto& [g, e] : D.exponents()) den = den * power(chi(g), e);
    QCharacter out = poly_div_exact_poly(num, den);
    check_positive(out);
    return out;
}

QCharacter qchar_hl(const HeightFunction& xi, int i, int j) {
    static std::map<std::tuple<std::vector<int>, int, int>, QCharacter> cache;
    const std::tuple<std::vector<int>, int, int> key{xi.values(), i, j};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    QCharacter q = iota_substitute(expand(xi, i, j), xi);
    cache.emplace(key, q);
    return q;
}

QCharacter qchar_hl_recursive(const HeightFunction& xi, int i, int j) {
    const int n = xi.n();
    if (!(1 <= i && i <= j && j <= n)) throw input_error("interval out of range");
    static std::map<std::tuple<std::vector<int>, int, int>, QCharacter> cache;
    const std::tuple<std::vector<int>, int, int> key{xi.values(), i, j};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto memo = [&](QCharacter q) {
        cache.emplace(key, q);
        return q;
    };
    const QuiverStats st = compute_stats(xi);
    if (j == st.diamond[i - 1]) {
        const DominantMonomial m = iota_interval_monomial(xi, i, j);
        return memo(qchar_fundamental(n, m.factors[0].first, m.factors[0].second));
    }
    // The subtraction step needs j-1 to be a source or sink strictly right
    // of i; otherwise fall back to the substitution route.
    if (!(j - 1 > i && st.sources_sinks.count(j - 1)))
        return memo(qchar_hl(xi, i, j));
    const int jj = j - 1;  // the source/sink of the exchange identity
    const int jb = st.bullet[jj - 1];
    const int ib = st.bullet[i - 1];
    auto d = [&](int v) { return (v >= 1 && v <= n && st.diamond[v - 1] == v) ? 1 : 0; };
    const int a_j = 1 - (i == jb ? 1 : 0);
    const int b_j = std::min(1, (1 - (jb == ib ? 1 : 0)) * d(jb - 1) + (jb == i ? 1 : 0));
    const int d_j1 = d(jj + 1);
    QCharacter product = qchar_hl_recursive(xi, i, jj) * qchar_hl_recursive(xi, j, j);
    QCharacter sub = LaurentPolynomial::one();
    const int m = std::max(i - 1, jb - 1);
    if (a_j && m >= i) sub = sub * qchar_hl_recursive(xi, i, m);
    // m = i - 1 names the still-initial variable x_{i-1}, a fundamental
    if (a_j && m == i - 1 && m >= 1) sub = sub * qchar_fundamental(n, m, xi(m + 1));
    if (b_j) sub = sub * qchar_kr2(n, std::max(i, jb), xi(std::max(i, jb)));
    if (d_j1 && jj + 2 <= n) sub = sub * qchar_fundamental(n, jj + 2, xi(jj + 3));
    if (!d_j1 && jj + 2 <= n) sub = sub * qchar_kr2(n, jj + 2, xi(jj + 2));
    QCharacter out = product - sub;
    check_positive(out);
    return memo(out);
}

}  // namespace hlsg
