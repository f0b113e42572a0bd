#include "hlsg/mutation.hpp"

#include <cstdlib>
#include <sstream>

namespace hlsg {

namespace {

LaurentPolynomial frozen_variable(int v) {
    return LaurentPolynomial::of(Monomial::of(gen_xp(-v)));
}

std::string xi_key(const HeightFunction& xi) {
    std::ostringstream os;
    for (int v : xi.values()) os << v << ",";
    return os.str();
}

// Test hook: a non-empty HLSG_FAULT_INJECT environment variable skews the
// oracle so that the CLI's cross-check path can be exercised end to end.
bool fault_injected() {
    const char* f = std::getenv("HLSG_FAULT_INJECT");
    return f != nullptr && *f != '\0';
}

}  // namespace

Seed initial_seed(const HeightFunction& xi) {
    Seed s{build_quiver(xi), {}};
    for (int k = 1; k <= xi.n(); ++k)
        s.cluster[k] = LaurentPolynomial::of(Monomial::of(gen_x(k)));
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    if (!s.cluster.count(k)) throw input_error("mutation at non-mutable vertex");
    auto variable = [&](int v) {
        return Quiver::is_frozen(v) ? frozen_variable(v) : s.cluster.at(v);
    };
    LaurentPolynomial in = LaurentPolynomial::one(), out = LaurentPolynomial::one();
    for (const auto& [ar, mult] : s.quiver.arrows()) {
        for (int t = 0; t < mult; ++t) {
            if (ar.second == k) in = in * variable(ar.first);
            if (ar.first == k) out = out * variable(ar.second);
        }
    }
    Seed next{s.quiver.mutated(k), s.cluster};
    try {
        next.cluster[k] = poly_div_exact_poly(in + out, s.cluster.at(k));
    } catch (const internal_error&) {
        throw internal_error("Laurent violation");
    }
    return next;
}

LaurentPolynomial cluster_variable(const HeightFunction& xi, AlmostPositiveRoot alpha) {
    const int n = xi.n();
    if (alpha.j < alpha.i) {
        if (alpha.i < 1 || alpha.i > n) throw input_error("root index out of range");
        return LaurentPolynomial::of(Monomial::of(gen_x(alpha.i)));
    }
    if (alpha.i < 1 || alpha.j > n) throw input_error("root interval out of range");
    static std::map<std::tuple<std::string, int, int>, LaurentPolynomial> cache;
    const std::string key = xi_key(xi);
    if (auto it = cache.find({key, alpha.i, alpha.j}); it != cache.end())
        return it->second;
    Seed s = initial_seed(xi);
    for (int k = alpha.i; k <= alpha.j; ++k) {
        s = mutate_seed(s, k);
        LaurentPolynomial var = s.cluster.at(k);
        // Denominator vector: the minimal exponent of x_l over all terms is
        // exactly -1 for every l in [alpha.i, k].
        for (int l = alpha.i; l <= k; ++l) {
            int lo = 0;
            for (const auto& [mono, coef] : var.terms()) {
                (void)coef;
                lo = std::min(lo, mono.exponent(gen_x(l)));
            }
            if (lo != -1) throw internal_error("denominator vector mismatch");
        }
        cache.insert({{key, alpha.i, k}, var});
    }
    LaurentPolynomial out = cache.at({key, alpha.i, alpha.j});
    if (fault_injected())
        out = out * LaurentPolynomial::of(Monomial::of(gen_x(alpha.i)));
    return out;
}

RecursionReport verify_recursion(const HeightFunction& xi, int i, int j) {
    const int n = xi.n();
    const QuiverStats st = compute_stats(xi);
    if (!(1 <= i && i < j && j < n)) throw input_error("need i < j < n");
    if (!st.sources_sinks.count(j)) throw input_error("j is not a source or sink");
    auto d = [&](int v) { return (v >= 1 && v <= n && st.diamond[v - 1] == v) ? 1 : 0; };
    auto x_interval = [&](int a, int b) {
        // b = a - 1 names the still-initial variable at vertex a - 1 (the
        // mutation sequence starts at a), and x_0 = 1
        if (b < a) return b >= 1 ? LaurentPolynomial::of(gen_x(b))
                                 : LaurentPolynomial::one();
        return cluster_variable(xi, AlmostPositiveRoot::interval(a, b));
    };
    auto xp = [&](int v, int e) {
        if (v > n || e == 0) return LaurentPolynomial::one();
        return LaurentPolynomial::of(Monomial::of(gen_xp(v), e));
    };
    auto x_plain = [&](int v, int e) {
        if (v > n || e == 0) return LaurentPolynomial::one();
        return LaurentPolynomial::of(Monomial::of(gen_x(v), e));
    };
    const int jb = st.bullet[j - 1];
    const int ib = st.bullet[i - 1];
    RecursionReport rep;
    rep.a_j = 1 - (i == jb ? 1 : 0);
    rep.b_j = std::min(1, (1 - (jb == ib ? 1 : 0)) * d(jb - 1) + (jb == i ? 1 : 0));
    rep.d_j1 = d(j + 1);
    rep.lhs = x_interval(i, j) * x_interval(j + 1, j + 1);
    LaurentPolynomial second = LaurentPolynomial::one();
    if (rep.a_j) second = second * x_interval(i, std::max(i - 1, jb - 1));
    second = second * xp(std::max(i, jb), rep.b_j);
    second = second * x_plain(j + 2, rep.d_j1);
    second = second * xp(j + 2, 1 - rep.d_j1);
    rep.rhs = x_interval(i, j + 1) + second;
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

}  // namespace hlsg
