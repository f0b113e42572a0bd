#include "hlsg/gamma.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hlsg {

namespace {

// Access helpers: sequences are indexed by vertex, entry 0 <-> eps_i.
struct Eps {
    const std::vector<int>& v;
    int i;
    int operator()(int vertex) const { return v.at(vertex - i); }
    // Sum eps_a + ... + eps_b clipped to the index range; empty range is 0.
    int sum(int a, int b) const {
        int s = 0;
        for (int m = std::max(a, i); m <= b; ++m) s += (*this)(m);
        return s;
    }
};

bool satisfies_conditions(const HeightFunction& xi, const QuiverStats& st, int i, int j,
                          const std::vector<int>& raw) {
    (void)xi;
    const Eps eps{raw, i};
    const int idia = st.diamond[i - 1];
    const int jdia = st.diamond[j - 1];
    const int jbul = st.bullet[j - 1];
    if (idia <= j) {
        if (!(eps.sum(i, idia) <= 1 && 1 <= eps.sum(i, idia + 1))) return false;
    }
    for (int m = idia; m < jbul; ++m) {
        if (st.diamond[m - 1] != m) continue;  // m must be a source or sink
        const int next = st.diamond[m];        // (m+1)_diamond
        if (!(eps.sum(m + 1, next) <= 1 && 1 <= eps.sum(m + 1, next + 1))) return false;
    }
    const int tail = eps.sum(std::max(i, jbul + 1), j);
    if (tail > 1) return false;
    const int want = (j == jdia) ? 1 : 1 - tail;
    return eps(j + 1) == want;
}

void check_range(const HeightFunction& xi, int i, int j, bool allow_empty) {
    if (i < 1 || i > xi.n() || j > xi.n() || (!allow_empty && j < i))
        throw input_error("interval out of range");
}

}  // namespace

std::vector<GammaSequence> gamma_set(const HeightFunction& xi, int i, int j) {
    check_range(xi, i, j, /*allow_empty=*/true);
    std::vector<GammaSequence> out;
    if (j < i) {
        out.push_back(GammaSequence{std::vector<int>(std::max(0, j - i + 2), 0)});
        return out;
    }
    const QuiverStats st = compute_stats(xi);
    const int len = j - i + 2;
    if (len - 1 > 24) throw input_error("interval too large for filtration");
    const int jdia = st.diamond[j - 1];
    const int jbul = st.bullet[j - 1];
    for (long mask = 0; mask < (1L << (len - 1)); ++mask) {
        std::vector<int> raw(len, 0);
        for (int t = 0; t < len - 1; ++t)
            raw[t] = (mask >> (len - 2 - t)) & 1;  // eps_i is most significant
        Eps eps{raw, i};
        const int tail = eps.sum(std::max(i, jbul + 1), j);
        raw[len - 1] = (j == jdia) ? 1 : 1 - tail;
        if (raw[len - 1] < 0) continue;
        if (satisfies_conditions(xi, st, i, j, raw)) out.push_back(GammaSequence{raw});
    }
    return out;
}

Int gamma_count(const HeightFunction& xi, int i, int j) {
    check_range(xi, i, j, /*allow_empty=*/true);
    const QuiverStats st = compute_stats(xi);
    std::map<int, Int> memo;
    auto rec = [&](auto&& self, int jj) -> Int {
        if (jj < i) return 1;
        auto it = memo.find(jj);
        if (it != memo.end()) return it->second;
        Int v = self(self, jj - 1) + self(self, st.bullet[jj - 1] - 1);
        memo.emplace(jj, v);
        return v;
    };
    return rec(rec, j);
}

GammaPrimeSequence gamma_prime(const HeightFunction& xi, int i, int j,
                               const GammaSequence& seq) {
    check_range(xi, i, j, /*allow_empty=*/false);
    if (static_cast<int>(seq.eps.size()) != j - i + 2)
        throw input_error("sequence length mismatch");
    const QuiverStats st = compute_stats(xi);
    if (!satisfies_conditions(xi, st, i, j, seq.eps))
        throw input_error("sequence is not in Gamma_{i,j}");
    const Eps eps{seq.eps, i};
    const int ibul = st.bullet[i - 1];
    std::vector<int> prime(j - i + 2, 0);
    for (int m = i; m <= j; ++m) {
        const int mbul = st.bullet[m - 1];
        const int delta = (st.diamond[m - 1] == m) ? 1 : 0;
        // Sum guarding the case split; vacuous (0) when m_bullet < i.
        const int guard =
            (mbul >= 1) ? eps.sum(std::max(i, st.bullet[mbul - 1] + 1), mbul) : 0;
        int value;
        if (ibul == mbul || guard == 1) {
            const int inner = eps.sum(std::max(i, mbul + 1), m);
            value = (inner == 0) ? (delta - 1) * eps(m + 1) - delta
                                 : delta - (eps(m) + eps(m + 1));
        } else if (mbul >= i && guard == 0) {
            value = delta * (1 - eps(m + 1));
        } else {
            throw internal_error("gamma_prime: no case applies");
        }
        prime[m - i] = value;
    }
    const int tail = eps.sum(std::max(i, st.bullet[j - 1] + 1), j);
    prime[j + 1 - i] = (j == st.diamond[j - 1]) ? 1 - tail : tail;
    return GammaPrimeSequence{prime};
}

std::pair<Monomial, Monomial> gamma_monomials(const HeightFunction& xi, int i, int j,
                                              const GammaSequence& seq) {
    const GammaPrimeSequence prime = gamma_prime(xi, i, j, seq);
    const QuiverStats st = compute_stats(xi);
    const int n = xi.n();
    Monomial m = Monomial::unit(), f = Monomial::unit();
    auto mul_x = [&](Monomial& acc, int v, int e) {
        if (v >= 1 && v <= n && e != 0) acc = acc * Monomial::of(gen_x(v), e);
    };
    mul_x(m, i - 1, 1 - seq.eps[0]);
    for (int v = i; v <= j + 1; ++v) mul_x(m, v, prime.eps_prime[v - i]);
    for (int v = i; v <= j; ++v)
        if (seq.eps[v - i]) f = f * Monomial::of(gen_xp(v));
    const int delta = (j == st.diamond[j - 1]) ? 1 : 0;
    if (!delta && seq.eps[j + 1 - i]) f = f * Monomial::of(gen_xp(j + 1));
    return {m, f};
}

std::vector<SegmentCount> segment_counts(const HeightFunction& xi, int i, int j) {
    check_range(xi, i, j, /*allow_empty=*/false);
    const QuiverStats st = compute_stats(xi);
    const int idia = st.diamond[i - 1];
    const int jbul = st.bullet[j - 1];
    std::vector<SegmentCount> out;
    if (idia <= j - 1)
        out.push_back({"prefix", 0, 2LL * (idia - i) + 3, 0, idia - i + 2});
    for (int m = idia; m < jbul; ++m) {
        if (st.diamond[m - 1] != m) continue;
        const int next = st.diamond[m];
        if (next > j - 1) continue;  // sub-snake would leave the graph
        out.push_back({"window", m, 2LL * (next - m) + 1, m - i + 1, next - i + 2});
    }
    const int start = std::max(i, jbul + 1);
    out.push_back({"tail", 0, static_cast<long long>(j - start + 2), start - i, j - i + 1});
    return out;
}

BijectionReport empirical_bijection_check(const HeightFunction& xi, int i, int j) {
    BijectionReport rep;
    std::multiset<Monomial> lhs;
    for (const GammaSequence& eps : gamma_set(xi, i, j)) {
        auto [m, f] = gamma_monomials(xi, i, j, eps);
        lhs.insert(m * f);
    }
    const SnakeGraph g = build_snake(xi, i, j);
    const YHatAssignment a = yhat(xi, i, j);
    const Monomial fp_inv = tropical_f(g, a).inverse().as_monomial();
    Monomial denom = Monomial::unit();
    for (int l = i; l <= j; ++l) denom = denom * Monomial::of(gen_x(l), -1);
    std::multiset<Monomial> rhs;
    for (const PerfectMatching& p : enumerate_matchings(g)) {
        Monomial h = Monomial::unit();
        for (const auto& [label, e] : p.turn_height) h = h * a.values.at(label).pow(e);
        rhs.insert(weight_monomial(g, p) * h * fp_inv * denom);
    }
    rep.gamma_count = lhs.size();
    rep.matching_count = rhs.size();
    rep.multisets_equal = (lhs == rhs);
    std::set<Monomial> distinct(rhs.begin(), rhs.end());
    rep.values_distinct = rep.multisets_equal && distinct.size() == rhs.size();
    return rep;
}

std::string gamma_csv(const HeightFunction& xi, int i, int j) {
    std::ostringstream os;
    os << "eps,eps_prime,m,f\n";
    auto join = [](const std::vector<int>& v) {
        std::ostringstream s;
        s << "(";
        for (size_t t = 0; t < v.size(); ++t) s << (t ? " " : "") << v[t];
        s << ")";
        return s.str();
    };
    for (const GammaSequence& eps : gamma_set(xi, i, j)) {
        const GammaPrimeSequence prime = gamma_prime(xi, i, j, eps);
        auto [m, f] = gamma_monomials(xi, i, j, eps);
        os << join(eps.eps) << "," << join(prime.eps_prime) << ","
           << to_string(m) << "," << to_string(f) << "\n";
    }
    return os.str();
}

}  // namespace hlsg
