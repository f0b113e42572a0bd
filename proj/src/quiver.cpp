#include "hlsg/quiver.hpp"

#include <sstream>

#include "hlsg/algebra.hpp"

namespace hlsg {

HeightFunction::HeightFunction(std::vector<int> values) : v_(std::move(values)) {
    if (v_.size() < 2) throw input_error("height function needs rank >= 2");
    for (size_t i = 0; i + 1 < v_.size(); ++i) {
        int d = v_[i] - v_[i + 1];
        if (d != 1 && d != -1)
            throw input_error("height function: |xi(" + std::to_string(i + 1) + ")-xi(" +
                              std::to_string(i + 2) + ")| != 1");
    }
}

int HeightFunction::operator()(int i) const {
    int nn = n();
    if (i == 0) return v_[1];            // xi(0) = xi(2)
    if (i == nn + 1) return v_[nn - 2];  // xi(n+1) = xi(n-1)
    if (i < 1 || i > nn) throw input_error("height function index out of range");
    return v_[i - 1];
}

Quiver::Quiver(int n, std::map<Arrow, int> arrows) : n_(n), a_(std::move(arrows)) {
    for (auto it = a_.begin(); it != a_.end();) {
        if (it->second <= 0) it = a_.erase(it); else ++it;
    }
}

int Quiver::multiplicity(int from, int to) const {
    auto it = a_.find({from, to});
    return it == a_.end() ? 0 : it->second;
}

Quiver Quiver::mutated(int k) const {
    if (is_frozen(k)) throw input_error("cannot mutate a frozen vertex");
    std::map<Arrow, int> out = a_;
    // (1) For every path u -> k -> v add an arrow u -> v, unless both
    //     endpoints are frozen.
    for (const auto& [in, min] : a_) {
        if (in.second != k) continue;
        for (const auto& [outar, mout] : a_) {
            if (outar.first != k) continue;
            int u = in.first, v = outar.second;
            if (is_frozen(u) && is_frozen(v)) continue;
            out[{u, v}] += min * mout;
        }
    }
    // (2) Reverse all arrows incident with k.
    std::map<Arrow, int> rev;
    for (const auto& [ar, m] : out) {
        if (ar.first == k || ar.second == k)
            rev[{ar.second, ar.first}] += m;
        else
            rev[ar] += m;
    }
    // (3) Cancel two-cycles.
    std::map<Arrow, int> fin;
    for (const auto& [ar, m] : rev) {
        if (ar.first >= ar.second) continue;  // handle each unordered pair once
        auto it = rev.find({ar.second, ar.first});
        int back = it == rev.end() ? 0 : it->second;
        int net = m - back;
        if (net > 0) fin[ar] = net;
        else if (net < 0) fin[{ar.second, ar.first}] = -net;
    }
    for (const auto& [ar, m] : rev) {  // arrows whose reverse never occurred
        if (ar.first < ar.second) continue;
        if (!rev.count({ar.second, ar.first})) fin[ar] = m;
    }
    return Quiver(n_, std::move(fin));
}

Quiver Quiver::mutable_subquiver(int i, int j) const {
    std::map<Arrow, int> out;
    for (const auto& [ar, m] : a_) {
        if (is_frozen(ar.first) || is_frozen(ar.second)) continue;
        if (ar.first < i || ar.first > j || ar.second < i || ar.second > j) continue;
        out[ar] = m;
    }
    return Quiver(n_, std::move(out));
}

QuiverStats compute_stats(const HeightFunction& xi) {
    const int n = xi.n();
    QuiverStats s;
    s.diamond.resize(n);
    s.bullet.resize(n);
    s.bar.resize(n);
    // Sources/sinks: i = n, or xi(i) = xi(i+2) on the extended range; vertex 1
    // qualifies iff xi(1) = xi(3) (the un-extended comparison).
    for (int i = 1; i <= n; ++i) {
        bool ss = false;
        if (i == n) ss = true;
        else ss = (xi(i) == xi(i + 2));  // for i=1 this is the xi(1)=xi(3) rule
        if (ss) s.sources_sinks.insert(i);
    }
    // i_diamond: minimal l in [i, n-1] with xi(l) = xi(l+2) (extended), else n.
    for (int i = 1; i <= n; ++i) {
        int d = n;
        for (int l = i; l <= n - 1; ++l) {
            if (xi(l) == xi(l + 2)) { d = l; break; }
        }
        s.diamond[i - 1] = d;
    }
    const int one_diamond = s.diamond[0];
    for (int j = 1; j <= n; ++j) {
        if (j <= one_diamond) {
            s.bullet[j - 1] = 0;
        } else {
            int b = 0;
            for (int v : s.sources_sinks)
                if (v < j) b = std::max(b, v);
            s.bullet[j - 1] = b;
        }
    }
    for (int k = 1; k <= n; ++k) {
        bool at_diamond = (k == s.diamond[k - 1]);
        s.bar[k - 1] = at_diamond ? s.bullet[k - 1] + 1 : k + 1;
    }
    return s;
}

Quiver build_quiver(const HeightFunction& xi) {
    const int n = xi.n();
    const QuiverStats st = compute_stats(xi);
    std::set<Arrow> arrows;
    auto valid = [n](int v) {
        int a = v < 0 ? -v : v;
        return a >= 1 && a <= n;
    };
    auto add = [&](int from, int to) {
        if (valid(from) && valid(to)) arrows.insert({from, to});
    };
    // Template per consecutive pair (i, i+1) of the extended height function;
    // the virtual pair (n, n+1) contributes the frozen arrows at vertex n.
    for (int i = 1; i <= n; ++i) {
        int delta = (i <= n && st.diamond[i - 1] == i) ? 1 : 0;
        if (xi(i) == xi(i + 1) + 1) {
            add(i, i - 1);
            if (delta == 1) add(i, i + 1);
            else add(i, -(i + 1));
            if (delta == 0) add(i + 1, i);
            add(-i, i);
        } else {
            add(i - 1, i);
            if (delta == 1) add(i + 1, i);
            else add(-(i + 1), i);
            if (delta == 0) add(i, i + 1);
            add(i, -i);
        }
    }
    std::map<Arrow, int> out;
    for (const Arrow& a : arrows) out[a] = 1;
    return Quiver(n, std::move(out));
}

std::string vertex_name(int v) {
    return v < 0 ? std::to_string(-v) + "'" : std::to_string(v);
}

std::string to_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph Q {\n  rankdir=LR;\n";
    for (int i = 1; i <= q.n(); ++i) {
        os << "  \"" << i << "\";\n";
        os << "  \"" << i << "'\" [shape=box];\n";
    }
    for (const auto& [ar, m] : q.arrows())
        for (int k = 0; k < m; ++k)
            os << "  \"" << vertex_name(ar.first) << "\" -> \"" << vertex_name(ar.second)
               << "\";\n";
    os << "}\n";
    return os.str();
}

std::string stats_table(const HeightFunction& xi) {
    const QuiverStats st = compute_stats(xi);
    const int n = xi.n();
    std::ostringstream os;
    auto row = [&](const std::string& name, auto value) {
        os << name;
        for (int i = 1; i <= n; ++i) os << "\t" << value(i);
        os << "\n";
    };
    row("I", [](int i) { return i; });
    row("xi", [&](int i) { return xi(i); });
    row("i_diamond", [&](int i) { return st.diamond[i - 1]; });
    row("i_bullet", [&](int i) { return st.bullet[i - 1]; });
    row("i_bar", [&](int i) { return st.bar[i - 1]; });
    return os.str();
}

}  // namespace hlsg
