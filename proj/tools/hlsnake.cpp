/*
 * hlsnake.cpp
 * -----------
 * Command-line front end: quivers and their statistics, labeled snake graphs,
 * cluster expansions with oracle cross-checks, Gamma tables, q-characters,
 * and verification sweeps.
 *
 * Exit codes: 0 success, 2 malformed input, 3 failed internal cross-check.
 */
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlsg/gamma.hpp"
#include "hlsg/mutation.hpp"
#include "hlsg/qcharacter.hpp"

using nlohmann::json;
using namespace hlsg;

namespace {

HeightFunction parse_xi(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw input_error("malformed height value: '" + item + "'");
        }
    }
    if (values.empty()) throw input_error("empty height function");
    return HeightFunction(values);
}

std::pair<int, int> parse_interval(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw input_error("interval must be i:j");
    try {
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw input_error("malformed interval: '" + text + "'");
    }
}

std::vector<std::string> arrow_names(const Quiver& q) {
    std::vector<std::string> out;
    for (const auto& [ar, mult] : q.arrows())
        for (int t = 0; t < mult; ++t)
            out.push_back(vertex_name(ar.first) + " -> " + vertex_name(ar.second));
    return out;
}

int run_quiver(const HeightFunction& xi, const std::string& format) {
    const Quiver q = build_quiver(xi);
    if (format == "dot") {
        std::cout << to_dot(q);
    } else if (format == "json") {
        json out;
        const QuiverStats st = compute_stats(xi);
        out["xi"] = xi.values();
        out["diamond"] = st.diamond;
        out["bullet"] = st.bullet;
        out["bar"] = st.bar;
        out["sources_sinks"] = std::vector<int>(st.sources_sinks.begin(),
                                                st.sources_sinks.end());
        out["arrows"] = arrow_names(q);
        std::cout << out.dump(2) << "\n";
    } else if (format == "text") {
        std::cout << stats_table(xi);
        std::cout << "arrows:\n";
        for (const std::string& a : arrow_names(q)) std::cout << "  " << a << "\n";
    } else {
        throw input_error("unsupported format for quiver: " + format);
    }
    return 0;
}

int run_snake(const HeightFunction& xi, int i, int j, const std::string& format) {
    const SnakeGraph g = build_snake(xi, i, j);
    const SignFunction sf = sign_function(g);
    if (format == "tikz") {
        std::cout << tikz_render(g);
    } else if (format == "json") {
        json out;
        out["tiles"] = g.tile_labels;
        std::vector<std::string> dirs;
        for (Dir d : g.directions) dirs.push_back(d == Dir::East ? "E" : "N");
        out["directions"] = dirs;
        out["anchor"] = (g.anchor == Anchor::South) ? "S" : "W";
        out["runs"] = sf.runs;
        out["signs"] = sf.signs;
        out["numerator"] = numerator(sf.runs).str();
        out["matchings"] = enumerate_matchings(g).size();
        std::cout << out.dump(2) << "\n";
    } else if (format == "text") {
        std::cout << ascii_render(g);
        std::cout << "runs:";
        for (int a : sf.runs) std::cout << " " << a;
        std::cout << "\nnumerator: " << numerator(sf.runs)
                  << "\nmatchings: " << enumerate_matchings(g).size() << "\n";
    } else {
        throw input_error("unsupported format for snake: " + format);
    }
    return 0;
}

int run_expand(const HeightFunction& xi, int i, int j, const std::string& format,
               bool oracle) {
    const SnakeGraph g = build_snake(xi, i, j);
    const LaurentPolynomial ex = expand(xi, i, j);
    if (oracle) {
        const LaurentPolynomial cv =
            cluster_variable(xi, AlmostPositiveRoot::interval(i, j));
        if (!(ex == cv)) throw internal_error("oracle disagreement on expand");
    }
    const YHatAssignment a = yhat(xi, i, j);
    const TropicalElement trop = tropical_f(g, a);
    const auto [hi, lo] = extremal_weights(xi, i, j);
    if (format == "csv") {
        std::cout << "weight,height\n";
        for (const PerfectMatching& p : enumerate_matchings(g))
            std::cout << to_string(weight_monomial(g, p)) << ","
                      << to_string(height_monomial(g, p)) << "\n";
        return 0;
    }
    const SignFunction sf = sign_function(g);
    if (format == "json") {
        json out;
        out["terms"] = ex.term_count();
        std::vector<std::string> terms;
        for (const auto& [m, c] : ex.terms()) {
            (void)c;
            terms.push_back(to_string(m));
        }
        out["expansion"] = terms;
        out["tropical_F"] = to_string(trop);
        out["runs"] = sf.runs;
        out["numerator"] = numerator(sf.runs).str();
        out["extremal_value"] = to_string(extremal_value(xi, i, j));
        out["highest_weight"] = to_string(hi);
        out["lowest_weight"] = to_string(lo);
        out["gamma_count"] = gamma_set(xi, i, j).size();
        out["oracle_checked"] = oracle;
        std::cout << out.dump(2) << "\n";
    } else if (format == "text") {
        std::cout << ascii_render(g);
        std::cout << "x[alpha_" << i << "," << j << "] = " << to_string(ex) << "\n";
        std::cout << "terms: " << ex.term_count() << "\n";
        std::cout << "F|_P: " << to_string(trop) << "\n";
        std::cout << "extremal value: " << to_string(extremal_value(xi, i, j)) << "\n";
        std::cout << "highest: " << to_string(hi) << "\nlowest: " << to_string(lo) << "\n";
        std::cout << "gamma sequences: " << gamma_set(xi, i, j).size() << "\n";
        if (oracle) std::cout << "oracle: agree\n";
    } else {
        throw input_error("unsupported format for expand: " + format);
    }
    return 0;
}

int run_gamma(const HeightFunction& xi, int i, int j, const std::string& format) {
    if (format == "csv") {
        std::cout << gamma_csv(xi, i, j);
        return 0;
    }
    const auto set = gamma_set(xi, i, j);
    const BijectionReport rep = empirical_bijection_check(xi, i, j);
    if (format == "json") {
        json out;
        out["count"] = set.size();
        out["recursion_count"] = gamma_count(xi, i, j).str();
        json rows = json::array();
        for (const GammaSequence& eps : set) {
            const GammaPrimeSequence prime = gamma_prime(xi, i, j, eps);
            auto [m, f] = gamma_monomials(xi, i, j, eps);
            rows.push_back({{"eps", eps.eps},
                            {"eps_prime", prime.eps_prime},
                            {"m", to_string(m)},
                            {"f", to_string(f)}});
        }
        out["rows"] = rows;
        json segs = json::array();
        for (const SegmentCount& s : segment_counts(xi, i, j))
            segs.push_back({{"kind", s.kind}, {"m", s.m}, {"count", s.count},
                            {"tile_begin", s.tile_begin}, {"tile_end", s.tile_end}});
        out["segments"] = segs;
        out["bijection"] = {{"gamma", rep.gamma_count},
                            {"matchings", rep.matching_count},
                            {"multisets_equal", rep.multisets_equal},
                            {"values_distinct", rep.values_distinct}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "text") {
        std::cout << "gamma sequences: " << set.size() << "\n";
        std::cout << gamma_csv(xi, i, j);
        std::cout << "multisets " << (rep.multisets_equal ? "equal" : "UNEQUAL") << " ("
                  << rep.gamma_count << " vs " << rep.matching_count << ")\n";
    } else {
        throw input_error("unsupported format for gamma: " + format);
    }
    return 0;
}

void print_qchar(const QCharacter& q, int n, const std::string& format) {
    const auto [hi, lo] = highest_lowest(n, q);
    if (format == "json") {
        json out;
        out["terms"] = q.term_count();
        out["dimension"] = q.eval_all_one().str();
        json rows = json::array();
        for (const auto& [m, c] : q.terms())
            rows.push_back({{"monomial", to_string(m)}, {"multiplicity", c.str()}});
        out["qchar"] = rows;
        out["highest"] = to_string(hi);
        out["lowest"] = to_string(lo);
        std::cout << out.dump(2) << "\n";
    } else if (format == "text") {
        std::cout << "terms: " << q.term_count()
                  << "\ndimension: " << q.eval_all_one() << "\n";
        for (const auto& [m, c] : q.terms())
            std::cout << "  " << to_string(m) << " : " << c << "\n";
        std::cout << "highest: " << to_string(hi) << "\nlowest: " << to_string(lo) << "\n";
    } else {
        throw input_error("unsupported format for qchar: " + format);
    }
}

int run_qchar_interval(const HeightFunction& xi, int i, int j, const std::string& format) {
    const QCharacter q = qchar_hl(xi, i, j);
    // Decomposition counts when the subtraction step applies at the top level.
    const QuiverStats st = compute_stats(xi);
    if (j - 1 > i && st.sources_sinks.count(j - 1) && j != st.diamond[i - 1] &&
        format == "text") {
        const QCharacter left = qchar_hl_recursive(xi, i, j - 1) * qchar_hl_recursive(xi, j, j);
        const QCharacter rec = qchar_hl_recursive(xi, i, j);
        std::cout << "product terms: " << left.eval_all_one() << "\n";
        std::cout << "subtracted terms: " << (left - rec).eval_all_one() << "\n";
    }
    print_qchar(q, xi.n(), format);
    return 0;
}

int run_qchar_monomial(const std::string& text, int n, const std::string& format) {
    if (n <= 0) throw input_error("--monomial requires --n");
    const DominantMonomial m = DominantMonomial::parse(text);
    const HLCheckResult check = check_hl(m);
    if (check.rejection) {
        throw input_error("not an HL monomial (condition " +
                          std::to_string(check.rejection->condition) +
                          "): " + check.rejection->reason);
    }
    auto [xi, i, j] = reconstruct_height_function(*check.shape, n);
    return run_qchar_interval(xi, i, j, format);
}

void verify_one(const HeightFunction& xi) {
    const int n = xi.n();
    const QuiverStats st = compute_stats(xi);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const LaurentPolynomial ex = expand(xi, i, j);
            const LaurentPolynomial cv =
                cluster_variable(xi, AlmostPositiveRoot::interval(i, j));
            if (!(ex == cv)) throw internal_error("oracle disagreement on expand");
        }
    }
    for (int j = 2; j < n; ++j) {
        if (!st.sources_sinks.count(j)) continue;
        for (int i = 1; i < j; ++i) {
            if (!verify_recursion(xi, i, j).equal)
                throw internal_error("exchange recursion failed");
        }
    }
}

int run_verify(const std::optional<std::string>& xi_text, int n, int seed) {
    int checked = 0;
    if (xi_text) {
        verify_one(parse_xi(*xi_text));
        ++checked;
    } else {
        if (n <= 0) throw input_error("verify needs --xi or --n with --seed");
        std::mt19937 rng(static_cast<unsigned>(seed));
        for (int t = 0; t < 20; ++t) {
            std::vector<int> v{0};
            for (int k = 1; k < n; ++k)
                v.push_back(v.back() + (rng() % 2 ? 1 : -1));
            verify_one(HeightFunction(v));
            ++checked;
        }
    }
    std::cout << "verified " << checked << " height function(s): all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laurent expansions and q-characters from labeled snake graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand name

    std::string xi_text, interval_text, monomial_text, format = "text";
    int n = 0, seed = 1;
    bool oracle = false;
    app.add_option("--xi", xi_text, "height function values, comma separated");
    app.add_option("--interval", interval_text, "interval i:j of mutable vertices");
    app.add_option("--monomial", monomial_text, "dominant monomial Y[i,r]...");
    app.add_option("--format", format, "output format: json|text|csv|dot|tikz");
    app.add_option("--n", n, "rank (for --monomial and randomized sweeps)");
    app.add_option("--seed", seed, "seed for randomized sweeps");
    app.add_flag("--oracle", oracle, "cross-check against the mutation oracle");

    auto* quiver = app.add_subcommand("quiver", "quiver and statistics of a height function");
    auto* snake = app.add_subcommand("snake", "labeled snake graph of an interval");
    auto* expand_cmd = app.add_subcommand("expand", "cluster expansion of an interval");
    auto* gamma = app.add_subcommand("gamma", "Gamma sequence tables of an interval");
    auto* qchar = app.add_subcommand("qchar", "q-character of an HL module");
    auto* verify = app.add_subcommand("verify", "recursion and oracle sweeps");

    CLI11_PARSE(app, argc, argv);

    try {
        auto need_xi = [&]() {
            if (xi_text.empty()) throw input_error("--xi is required");
            return parse_xi(xi_text);
        };
        auto need_interval = [&]() {
            if (interval_text.empty()) throw input_error("--interval is required");
            return parse_interval(interval_text);
        };
        if (quiver->parsed()) return run_quiver(need_xi(), format);
        if (snake->parsed()) {
            auto [i, j] = need_interval();
            return run_snake(need_xi(), i, j, format);
        }
        if (expand_cmd->parsed()) {
            auto [i, j] = need_interval();
            return run_expand(need_xi(), i, j, format, oracle);
        }
        if (gamma->parsed()) {
            auto [i, j] = need_interval();
            return run_gamma(need_xi(), i, j, format);
        }
        if (qchar->parsed()) {
            if (!monomial_text.empty()) return run_qchar_monomial(monomial_text, n, format);
            auto [i, j] = need_interval();
            return run_qchar_interval(need_xi(), i, j, format);
        }
        if (verify->parsed()) {
            std::optional<std::string> xt;
            if (!xi_text.empty()) xt = xi_text;
            return run_verify(xt, n, seed);
        }
        throw input_error("unknown command");
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
