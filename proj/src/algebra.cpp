#include "hlsg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hlsg {

// --------------------------------------------------------------- Generator

std::string to_string(const Generator& g) {
    std::ostringstream os;
    switch (g.kind) {
        case Kind::X: os << "x" << g.i; break;
        case Kind::XPrime: os << "x'" << g.i; break;
        case Kind::Y: os << "Y[" << g.i << "," << g.r << "]"; break;
        case Kind::FormalY: os << "y" << g.i; break;
    }
    return os.str();
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::map<Generator, int> exps) : e_(std::move(exps)) {
    for (auto it = e_.begin(); it != e_.end();) {
        if (it->second == 0) it = e_.erase(it); else ++it;
    }
}

Monomial Monomial::of(const Generator& g, int e) {
    Monomial m;
    if (e != 0) m.e_[g] = e;
    return m;
}

int Monomial::exponent(const Generator& g) const {
    auto it = e_.find(g);
    return it == e_.end() ? 0 : it->second;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    for (const auto& [g, e] : o.e_) {
        int& cur = e_[g];
        cur += e;
        if (cur == 0) e_.erase(g);
    }
    return *this;
}

Monomial Monomial::inverse() const {
    Monomial m;
    for (const auto& [g, e] : e_) m.e_[g] = -e;
    return m;
}

Monomial Monomial::pow(int k) const {
    Monomial m;
    if (k != 0)
        for (const auto& [g, e] : e_) m.e_[g] = e * k;
    return m;
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : m.exponents()) {
        if (!first) os << "*";
        first = false;
        os << to_string(g);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

// ------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(Int constant) {
    if (constant != 0) t_[Monomial::unit()] = std::move(constant);
}

LaurentPolynomial::LaurentPolynomial(std::map<Monomial, Int> terms) : t_(std::move(terms)) {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second == 0) it = t_.erase(it); else ++it;
    }
}

LaurentPolynomial LaurentPolynomial::of(const Monomial& m, Int c) {
    LaurentPolynomial p;
    if (c != 0) p.t_[m] = std::move(c);
    return p;
}

LaurentPolynomial LaurentPolynomial::of(const Generator& g) {
    return of(Monomial::of(g));
}

Int LaurentPolynomial::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Int(0) : it->second;
}

Int LaurentPolynomial::eval_all_one() const {
    Int s = 0;
    for (const auto& [m, c] : t_) s += c;
    return s;
}

long LaurentPolynomial::total_degree() const {
    long best = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
        long d = 0;
        for (const auto& [g, e] : m.exponents()) d += e;
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

bool LaurentPolynomial::is_monomial() const {
    return t_.size() == 1 && t_.begin()->second == 1;
}

const Monomial& LaurentPolynomial::as_monomial() const {
    if (!is_monomial())
        throw internal_error("as_monomial: polynomial is not a coefficient-1 monomial");
    return t_.begin()->first;
}

void LaurentPolynomial::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    Int& cur = t_[m];
    cur += c;
    if (cur == 0) t_.erase(m);
}

LaurentPolynomial poly_add(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
}

LaurentPolynomial poly_sub(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, -c);
    return r;
}

LaurentPolynomial poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

LaurentPolynomial poly_div_exact(const LaurentPolynomial& a, const Monomial& m) {
    const Monomial inv = m.inverse();
    std::map<Monomial, Int> out;
    for (const auto& [ma, ca] : a.terms()) out.emplace(ma * inv, ca);
    return LaurentPolynomial(std::move(out));
}

namespace {

// Lexicographic order on exponent vectors (absent generator = exponent 0).
// Unlike the canonical map order this is translation-invariant, so
// lead(q*b) = lead(q) * lead(b) and term-by-term elimination terminates
// exactly when the quotient exists.
bool lex_less(const Monomial& a, const Monomial& b) {
    auto ia = a.exponents().begin(), ea = a.exponents().end();
    auto ib = b.exponents().begin(), eb = b.exponents().end();
    while (ia != ea || ib != eb) {
        // stored exponents are never zero, so the first generator present in
        // only one side (or differing) decides
        if (ia == ea) return ib->second > 0;
        if (ib == eb) return ia->second < 0;
        if (ia->first < ib->first) return ia->second < 0;
        if (ib->first < ia->first) return ib->second > 0;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

const std::pair<const Monomial, Int>& leading_term(const LaurentPolynomial& p) {
    const auto& t = p.terms();
    auto best = t.begin();
    for (auto it = std::next(t.begin()); it != t.end(); ++it)
        if (lex_less(best->first, it->first)) best = it;
    return *best;
}

}  // namespace

LaurentPolynomial poly_div_exact_poly(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw internal_error("poly_div_exact_poly: division by zero");
    const auto& bl = leading_term(b);
    const Monomial bl_inv = bl.first.inverse();
    // Keep the remainder sorted by the division order so the leading term is
    // always rbegin(); each step strips it, so the step count equals the
    // quotient size when the division is exact.
    std::map<Monomial, Int, bool (*)(const Monomial&, const Monomial&)> rem(lex_less);
    for (const auto& [m, c] : a.terms()) rem.emplace(m, c);
    std::map<Monomial, Int> quot;
    size_t guard = a.term_count() * b.term_count() + a.term_count() + 16;
    while (!rem.empty()) {
        if (guard-- == 0) throw internal_error("poly_div_exact_poly: non-exact division");
        const auto& rl = *rem.rbegin();
        if (rl.second % bl.second != 0)
            throw internal_error("poly_div_exact_poly: non-exact division (coefficient)");
        const Monomial qm = rl.first * bl_inv;
        const Int qc = rl.second / bl.second;
        quot.emplace(qm, qc);
        for (const auto& [mb, cb] : b.terms()) {
            const Monomial m = qm * mb;
            auto it = rem.find(m);
            if (it == rem.end()) {
                rem.emplace(m, -qc * cb);
            } else {
                it->second -= qc * cb;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return LaurentPolynomial(std::move(quot));
}

LaurentPolynomial poly_substitute(const LaurentPolynomial& p,
                                  const std::map<Generator, LaurentPolynomial>& repl) {
    LaurentPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        LaurentPolynomial term(c);
        for (const auto& [g, e] : m.exponents()) {
            auto it = repl.find(g);
            LaurentPolynomial v =
                it != repl.end() ? it->second : LaurentPolynomial::of(g);
            if (e >= 0) {
                for (int k = 0; k < e; ++k) term = poly_mul(term, v);
            } else {
                if (!v.is_monomial())
                    throw internal_error(
                        "poly_substitute: negative exponent of a non-invertible value");
                term = poly_mul(term, LaurentPolynomial::of(v.as_monomial().pow(e)));
            }
        }
        out = poly_add(out, term);
    }
    return out;
}

std::string to_string(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending monomial order, so the constant term (if any) prints last
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        const Int abs = neg ? Int(-c) : c;
        if (m.is_unit()) {
            os << abs;
        } else if (abs == 1) {
            os << to_string(m);
        } else {
            os << abs << "*" << to_string(m);
        }
    }
    return os.str();
}

// ----------------------------------------------------------------- parsing

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long parse_int(const std::string& s) {
    if (s.empty()) throw input_error("expected integer");
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw input_error("malformed integer '" + s + "'");
    }
    if (pos != s.size()) throw input_error("malformed integer '" + s + "'");
    return v;
}

}  // namespace

Generator parse_generator(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw input_error("empty generator");
    if (s[0] == 'Y') {
        if (s.size() < 5 || s[1] != '[' || s.back() != ']')
            throw input_error("malformed Y generator '" + s + "'");
        std::string body = s.substr(2, s.size() - 3);
        size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw input_error("malformed Y generator '" + s + "'");
        int i = static_cast<int>(parse_int(body.substr(0, comma)));
        int r = static_cast<int>(parse_int(body.substr(comma + 1)));
        return gen_Y(i, r);
    }
    if (s[0] == 'x' && s.size() >= 2 && s[1] == '\'')
        return gen_xp(static_cast<int>(parse_int(s.substr(2))));
    if (s[0] == 'x') return gen_x(static_cast<int>(parse_int(s.substr(1))));
    if (s[0] == 'y') return gen_fy(static_cast<int>(parse_int(s.substr(1))));
    throw input_error("unknown generator '" + s + "'");
}

Monomial parse_monomial(const std::string& raw) {
    std::string s = strip(raw);
    if (s == "1") return Monomial::unit();
    std::map<Generator, int> exps;
    std::stringstream ss(s);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        factor = strip(factor);
        if (factor.empty()) throw input_error("empty factor in monomial '" + s + "'");
        size_t caret = factor.rfind('^');
        int e = 1;
        std::string name = factor;
        if (caret != std::string::npos && factor.find(']', caret) == std::string::npos) {
            name = strip(factor.substr(0, caret));
            e = static_cast<int>(parse_int(strip(factor.substr(caret + 1))));
        }
        Generator g = parse_generator(name);
        exps[g] += e;
    }
    return Monomial(std::move(exps));
}

LaurentPolynomial parse_polynomial(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw input_error("empty polynomial");
    if (s == "0") return LaurentPolynomial::zero();
    LaurentPolynomial out;
    std::stringstream ss(s);
    std::string term;
    while (std::getline(ss, term, '+')) {
        term = strip(term);
        if (term.empty()) throw input_error("empty term in '" + s + "'");
        Int coeff = 1;
        if (term[0] == '-') {
            coeff = -1;
            term = strip(term.substr(1));
        }
        // Optional leading integer coefficient before the first '*'.
        size_t star = term.find('*');
        std::string head = star == std::string::npos ? term : term.substr(0, star);
        bool head_is_number = !head.empty() &&
            std::all_of(head.begin(), head.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        Monomial m;
        if (head_is_number) {
            coeff *= Int(head);
            if (star != std::string::npos) m = parse_monomial(term.substr(star + 1));
        } else {
            m = parse_monomial(term);
        }
        out = poly_add(out, LaurentPolynomial::of(m, coeff));
    }
    return out;
}

// --------------------------------------------------------- TropicalElement

TropicalElement::TropicalElement(std::map<Generator, int> exps) : e_(std::move(exps)) {
    for (auto it = e_.begin(); it != e_.end();) {
        if (it->second == 0) it = e_.erase(it); else ++it;
    }
}

TropicalElement TropicalElement::from_monomial(const Monomial& m) {
    return TropicalElement(m.exponents());
}

Monomial TropicalElement::as_monomial() const { return Monomial(e_); }

TropicalElement& TropicalElement::operator*=(const TropicalElement& o) {
    for (const auto& [g, e] : o.e_) {
        int& cur = e_[g];
        cur += e;
        if (cur == 0) e_.erase(g);
    }
    return *this;
}

TropicalElement TropicalElement::inverse() const {
    std::map<Generator, int> out;
    for (const auto& [g, e] : e_) out[g] = -e;
    return TropicalElement(std::move(out));
}

TropicalElement tropical_sum(const std::vector<TropicalElement>& elems) {
    if (elems.empty()) throw input_error("empty tropical sum");
    // Collect the union of generators; absent exponents count as 0.
    std::map<Generator, int> mins;
    for (const auto& [g, e] : elems.front().exponents()) mins[g] = e;
    for (size_t k = 1; k < elems.size(); ++k) {
        const auto& cur = elems[k].exponents();
        for (auto& [g, e] : mins) {
            auto it = cur.find(g);
            int v = it == cur.end() ? 0 : it->second;
            e = std::min(e, v);
        }
        for (const auto& [g, e] : cur)
            if (!mins.count(g)) mins[g] = std::min(0, e);
    }
    return TropicalElement(std::move(mins));
}

TropicalElement to_tropical(const LaurentPolynomial& p) {
    if (!p.is_monomial())
        throw input_error("to_tropical: only single-term coefficient-1 polynomials cast");
    return TropicalElement::from_monomial(p.as_monomial());
}

std::string to_string(const TropicalElement& t) {
    return to_string(t.as_monomial());
}

}  // namespace hlsg
