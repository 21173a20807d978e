// Command-line front end: per-graph analytics, corpus verification runs,
// extremal searches and report emission. Exit codes: 0 success, 1 usage or
// input errors, 2 when a verification check fails (a mathematical finding).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "domavg/critical.hpp"
#include "domavg/domination.hpp"
#include "domavg/extremal.hpp"
#include "domavg/generators.hpp"
#include "domavg/graph6.hpp"
#include "domavg/parallel.hpp"
#include "domavg/poly.hpp"
#include "domavg/reports.hpp"

using namespace domavg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

struct CommonOpts {
    std::string graph6_inline;
    std::string edge_list_inline;
    std::string input_path;
    bool input_is_edge_list = false;
    std::string format = "text";
    int workers = 0; // 0: resolve via DOMAVG_WORKERS, default 1
    int oracle_cap = kDefaultOracleCap;
    int fast_cap = kDefaultFastCap;
    bool strict = false;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input) {
        cmd->add_option("--graph6", opts.graph6_inline, "inline graph6 string");
        cmd->add_option("--edge-list", opts.edge_list_inline,
                        "inline edge list \"n m u v ...\"");
        cmd->add_option("--input", opts.input_path, "input file, or - for standard input");
        cmd->add_flag("--edges", opts.input_is_edge_list,
                      "treat --input as one edge-list graph instead of graph6 lines");
    }
    cmd->add_option("--format", opts.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--workers", opts.workers, "worker thread count (default DOMAVG_WORKERS or 1)");
    cmd->add_option("--oracle-cap", opts.oracle_cap, "max order for brute-force enumeration");
    cmd->add_option("--fast-cap", opts.fast_cap, "max order for the fast tally");
    cmd->add_flag("--strict", opts.strict, "abort on the first malformed input line");
}

struct InputGraph {
    std::size_t line = 0;
    std::string text;
    std::optional<Graph> graph;
    std::string error;
};

std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<InputGraph> load_graphs(const CommonOpts& opts) {
    std::vector<InputGraph> out;
    const auto parse_line = [&](std::size_t line, const std::string& text) {
        InputGraph item;
        item.line = line;
        item.text = text;
        try {
            item.graph = parse_graph6(text);
        } catch (const ParseError& e) {
            item.error = e.what();
        }
        out.push_back(std::move(item));
    };

    if (!opts.graph6_inline.empty()) parse_line(0, opts.graph6_inline);
    if (!opts.edge_list_inline.empty()) {
        InputGraph item;
        item.text = opts.edge_list_inline;
        try {
            item.graph = parse_edge_list_text(opts.edge_list_inline);
        } catch (const std::exception& e) {
            item.error = e.what();
        }
        out.push_back(std::move(item));
    }
    if (!opts.input_path.empty()) {
        std::ifstream file;
        const bool use_stdin = opts.input_path == "-";
        if (!use_stdin) {
            file.open(opts.input_path);
            if (!file) throw std::runtime_error("cannot open input file " + opts.input_path);
        }
        std::istream& in = use_stdin ? std::cin : file;
        if (opts.input_is_edge_list) {
            InputGraph item;
            item.line = 1;
            try {
                item.graph = parse_edge_list_text(read_all(in));
            } catch (const std::exception& e) {
                item.error = e.what();
            }
            out.push_back(std::move(item));
        } else {
            for (const Graph6Line& l : read_graph6_lines(in)) parse_line(l.line_number, l.text);
        }
    }
    return out;
}

// Shared batch loop: parses, applies fn to every well-formed graph, reports
// malformed lines (fatally under --strict) and prints a stream summary.
int run_batch(const CommonOpts& opts, const std::function<void(const Graph&)>& fn) {
    const std::vector<InputGraph> items = load_graphs(opts);
    std::size_t ok = 0, bad = 0;
    for (const InputGraph& item : items) {
        if (!item.graph) {
            ++bad;
            std::cerr << "error: line " << item.line << ": " << item.error << "\n";
            if (opts.strict) return kExitError;
            continue;
        }
        fn(*item.graph);
        ++ok;
    }
    if (items.empty()) std::cerr << "warning: empty input stream\n";
    std::cerr << "summary: graphs=" << ok << " errors=" << bad << "\n";
    return kExitOk;
}

double approx(const Rational& r) {
    return static_cast<double>(rational_num(r)) / static_cast<double>(rational_den(r));
}

std::string rational_text(const Rational& r) {
    std::ostringstream out;
    out << rational_num(r) << "/" << rational_den(r) << " (approx " << approx(r) << ")";
    return out.str();
}

VertexSet parse_vertex_csv(const std::string& text, const Graph& g) {
    VertexSet s;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        const int v = std::stoi(token);
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("vertex " + token + " out of range");
        s.add(v);
    }
    return s;
}

int cmd_avd(const CommonOpts& opts) {
    if (opts.format == "csv")
        std::cout << "graph6,n,gamma,Gamma,GammaPrime,avd_num,avd_den\n";
    return run_batch(opts, [&](const Graph& g) {
        const DominationTally tally = tally_fast(g, opts.fast_cap, opts.workers);
        if (opts.format == "json") {
            std::cout << tally_json(g, tally).dump() << "\n";
            return;
        }
        if (g.order() == 0) {
            std::cerr << "warning: average order undefined for the order-0 graph\n";
            return;
        }
        const AvdSummary s = average_order(tally);
        if (opts.format == "csv") {
            std::cout << encode_graph6(g) << "," << s.n << "," << tally.gamma() << ","
                      << s.gamma_total << "," << s.gamma_weighted << ","
                      << rational_num(s.average) << "," << rational_den(s.average) << "\n";
        } else {
            std::cout << encode_graph6(g) << ": n=" << s.n << " gamma=" << tally.gamma()
                      << " Gamma=" << s.gamma_total << " Gamma'=" << s.gamma_weighted
                      << " avd=" << rational_text(s.average) << "\n";
        }
    });
}

int cmd_tally(const CommonOpts& opts, bool analyze_poly, bool use_oracle) {
    if (opts.format == "csv")
        std::cout << (analyze_poly
                          ? "graph6,n,gamma,coeffs,mode,unimodal,real_rooted,darroch\n"
                          : "graph6,n,gamma,Gamma,GammaPrime,coeffs\n");
    return run_batch(opts, [&](const Graph& g) {
        const DominationTally tally = use_oracle ? tally_bruteforce(g, opts.oracle_cap, opts.workers)
                                                 : tally_fast(g, opts.fast_cap, opts.workers);
        json record = tally_json(g, tally);
        std::optional<PolyReport> poly;
        if (analyze_poly) {
            poly = analyze(g, opts.fast_cap, opts.workers);
            const json pj = poly_json(g, *poly);
            record["mode"] = pj["mode"];
            record["unimodal"] = pj["unimodal"];
            record["real_rooted"] = pj["real_rooted"];
            record["darroch"] = pj["darroch"];
        }
        if (opts.format == "json") {
            std::cout << record.dump() << "\n";
            return;
        }
        std::ostringstream coeffs;
        for (int k = 0; k <= tally.n; ++k)
            coeffs << (k ? ";" : "") << tally.d[static_cast<std::size_t>(k)];
        if (opts.format == "csv") {
            if (analyze_poly) {
                std::ostringstream mode;
                for (std::size_t i = 0; i < poly->mode_indices.size(); ++i)
                    mode << (i ? ";" : "") << poly->mode_indices[i];
                std::cout << encode_graph6(g) << "," << tally.n << "," << tally.gamma() << ","
                          << coeffs.str() << "," << mode.str() << "," << poly->unimodal << ","
                          << poly->real_rooted << ","
                          << (poly->darroch_consistent ? (*poly->darroch_consistent ? "1" : "0")
                                                       : "")
                          << "\n";
            } else {
                std::cout << encode_graph6(g) << "," << tally.n << "," << tally.gamma() << ","
                          << tally.total() << "," << tally.weighted_total() << "," << coeffs.str()
                          << "\n";
            }
        } else {
            std::cout << encode_graph6(g) << ": d=[" << coeffs.str() << "] gamma=" << tally.gamma()
                      << " Gamma=" << tally.total() << " Gamma'=" << tally.weighted_total();
            if (analyze_poly)
                std::cout << (poly->unimodal ? " unimodal" : " NOT-unimodal")
                          << (poly->real_rooted ? " real-rooted" : " not-real-rooted");
            std::cout << "\n";
        }
    });
}

int cmd_profile(const CommonOpts& opts, const std::string& set_csv) {
    const std::vector<InputGraph> items = load_graphs(opts);
    if (items.size() != 1 || !items[0].graph) {
        std::cerr << "error: profile expects exactly one well-formed graph\n";
        return kExitError;
    }
    const Graph& g = *items[0].graph;
    if (!set_csv.empty()) {
        const VertexSet s = parse_vertex_csv(set_csv, g);
        const SetProfile p = profile(g, s);
        if (opts.format == "json") {
            json out = profile_json(p);
            out["graph6"] = encode_graph6(g);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "S=" << p.s.to_string() << " a=" << p.a.to_string()
                      << " a1=" << p.a1.to_string() << " a2=" << p.a2.to_string()
                      << " N1=" << p.n1.to_string() << " N2=" << p.n2.to_string() << "\n";
        }
        return kExitOk;
    }
    const CriticalAggregates agg =
        aggregates(g, g.vertices(), std::nullopt, opts.oracle_cap, opts.workers);
    if (opts.format == "json") {
        const json out{
            {"graph6", encode_graph6(g)},
            {"family_size", to_decimal(agg.family_size)},
            {"sum_a", to_decimal(agg.sum_a)},
            {"sum_a1", to_decimal(agg.sum_a1)},
            {"sum_a2", to_decimal(agg.sum_a2)},
            {"sum_N", to_decimal(agg.sum_n)},
            {"sum_N1", to_decimal(agg.sum_n1)},
            {"sum_N2", to_decimal(agg.sum_n2)},
        };
        std::cout << out.dump() << "\n";
    } else {
        std::cout << encode_graph6(g) << ": dominating sets=" << agg.family_size
                  << " sum|a|=" << agg.sum_a << " sum|a1|=" << agg.sum_a1
                  << " sum|a2|=" << agg.sum_a2 << " sum|N1|=" << agg.sum_n1
                  << " sum|N2|=" << agg.sum_n2 << "\n";
    }
    return kExitOk;
}

struct VerifyState {
    bool any_finding = false;
    std::size_t checks = 0;

    void emit(const CommonOpts& opts, const Graph& g, const CheckReport& r) {
        ++checks;
        if (!r.holds) any_finding = true;
        if (opts.format == "json") {
            std::cout << check_json(g, r).dump() << "\n";
        } else if (!r.holds || opts.format == "text") {
            std::cout << (r.holds ? "PASS " : "FAIL ") << r.check << " " << encode_graph6(g)
                      << " lhs=" << r.lhs << " rhs=" << r.rhs;
            if (!r.note.empty()) std::cout << " (" << r.note << ")";
            std::cout << "\n";
        }
    }
};

void verify_graph(const CommonOpts& opts, const Graph& g, const std::string& lemma,
                  VerifyState& state) {
    const bool all = lemma == "all";
    if (all || lemma == "sum")
        for (const CheckReport& r :
             verify_critical_sum_identities(g, opts.oracle_cap, opts.workers))
            state.emit(opts, g, r);
    if (all || lemma == "a1n1") state.emit(opts, g, verify_a1_le_n1(g, opts.oracle_cap));
    if (all || lemma == "deg2")
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) < 2) continue;
            state.emit(opts, g, verify_deg2_inequality(g, v, opts.oracle_cap, opts.workers));
        }
    if (all || lemma == "kstem" || lemma == "restricted") {
        for (const StemFamilyIndex& fam : stem_families(g, opts.oracle_cap)) {
            if (all || lemma == "restricted")
                state.emit(opts, g,
                           verify_restricted_a1(g, fam.family.stems_in_i, opts.oracle_cap,
                                                opts.workers));
            if (all || lemma == "kstem")
                for (int s : fam.family.stems_in_i)
                    state.emit(opts, g,
                               verify_kstem_inequality(g, fam.family.stems_in_i, s,
                                                       opts.oracle_cap, opts.workers));
        }
    }
    if (all || lemma == "obs3")
        state.emit(opts, g, verify_equivalence_avd_bound(g, opts.oracle_cap, opts.workers));
    if (all || lemma == "bound") {
        const BoundReport r = check_bound(g, opts.workers);
        ++state.checks;
        const bool holds =
            r.verdict != BoundVerdict::violated && r.equality_matches_star_like;
        if (!holds) state.any_finding = true;
        if (opts.format == "json")
            std::cout << bound_json(g, r).dump() << "\n";
        else
            std::cout << (holds ? "PASS " : "FAIL ") << "bound " << encode_graph6(g) << " "
                      << to_string(r.verdict) << "\n";
    }
    if (all || lemma == "darroch") {
        const PolyReport r = analyze(g, opts.fast_cap, opts.workers);
        CheckReport c;
        c.check = "darroch_mode";
        if (!r.real_rooted) {
            c.applicable = false;
            c.note = "polynomial not real-rooted";
        } else {
            c.holds = *r.darroch_consistent;
            c.lhs = r.mode_indices.back();
        }
        state.emit(opts, g, c);
    }
}

int cmd_verify(const CommonOpts& opts, const std::string& lemma, int order_upto) {
    VerifyState state;
    if (order_upto > 0) {
        for (int n = 1; n <= order_upto; ++n) {
            if (lemma != "theorem")
                for (const Graph& g : generate_all_nonisomorphic(n))
                    verify_graph(opts, g, lemma, state);
            if (lemma == "theorem" && n >= 2) {
                const TheoremReport r = verify_main_theorem(n, opts.workers);
                ++state.checks;
                const bool holds = r.bound_holds_all && r.equality_set_is_star_like;
                if (!holds) state.any_finding = true;
                if (opts.format == "json")
                    std::cout << theorem_json(r).dump() << "\n";
                else
                    std::cout << (holds ? "PASS " : "FAIL ") << "main_theorem n=" << n
                              << " examined=" << r.examined
                              << " equality_cases=" << r.equality_graph6.size() << "\n";
            }
        }
    } else {
        const std::vector<InputGraph> items = load_graphs(opts);
        if (items.empty()) {
            std::cerr << "error: verify needs --order-upto or input graphs\n";
            return kExitError;
        }
        for (const InputGraph& item : items) {
            if (!item.graph) {
                std::cerr << "error: line " << item.line << ": " << item.error << "\n";
                if (opts.strict) return kExitError;
                continue;
            }
            verify_graph(opts, *item.graph, lemma, state);
        }
    }
    std::cerr << "summary: checks=" << state.checks
              << (state.any_finding ? " FINDINGS PRESENT" : " all hold") << "\n";
    return state.any_finding ? kExitFinding : kExitOk;
}

int cmd_search(const CommonOpts& opts, SearchConstraint constraint) {
    std::vector<Graph> stream;
    if (!opts.graph6_inline.empty() || !opts.input_path.empty() ||
        !opts.edge_list_inline.empty()) {
        for (const InputGraph& item : load_graphs(opts)) {
            if (!item.graph) {
                std::cerr << "error: line " << item.line << ": " << item.error << "\n";
                if (opts.strict) return kExitError;
                continue;
            }
            stream.push_back(*item.graph);
        }
    } else {
        stream = generate_all_nonisomorphic(constraint.n);
    }
    const ExtremalResult result = search(stream, constraint, opts.workers);
    if (opts.format == "json") {
        std::cout << search_json(constraint, result).dump() << "\n";
    } else {
        std::cout << "constraint: " << constraint.describe() << "\n";
        std::cout << "examined: " << result.examined << "\n";
        std::cout << "best avd: " << rational_text(result.best_avd) << "\n";
        for (const std::string& g6 : result.argmax) std::cout << "argmax: " << g6 << "\n";
    }
    return kExitOk;
}

int cmd_survey(const CommonOpts& opts, int n) {
    std::vector<Graph> stream;
    if (!opts.graph6_inline.empty() || !opts.input_path.empty()) {
        for (const InputGraph& item : load_graphs(opts)) {
            if (!item.graph) {
                std::cerr << "error: line " << item.line << ": " << item.error << "\n";
                if (opts.strict) return kExitError;
                continue;
            }
            stream.push_back(*item.graph);
        }
    } else {
        for (const Graph& g : generate_all_nonisomorphic(n))
            if (g.isolated_vertices().empty()) stream.push_back(g);
    }
    const ModeSurveyReport report = max_mode_survey(stream, n, opts.workers);
    if (opts.format == "json") {
        std::cout << survey_json(report).dump() << "\n";
        return kExitOk;
    }
    // CSV is the native survey format: one row per graph plus a summary row.
    std::cout << "graph6,largest_mode,mode_indices,star_like\n";
    for (const ModeSurveyRow& row : report.rows) {
        std::ostringstream mode;
        for (std::size_t i = 0; i < row.mode_indices.size(); ++i)
            mode << (i ? ";" : "") << row.mode_indices[i];
        std::cout << row.graph6 << "," << row.largest_mode << "," << mode.str() << ","
                  << (row.star_like ? 1 : 0) << "\n";
    }
    std::cout << "summary," << report.max_mode_index << ",attaining=" << report.attaining.size()
              << "," << (report.star_like_attains ? 1 : 0) << "\n";
    return kExitOk;
}

int cmd_generate(const CommonOpts& opts, const std::string& kind, int n, bool all,
                 const SearchConstraint& filter, bool use_filter) {
    if (all) {
        for (const Graph& g : generate_all_nonisomorphic(n)) {
            if (use_filter && !filter.admits(g)) continue;
            std::cout << encode_graph6(g) << "\n";
        }
        return kExitOk;
    }
    Graph g = [&] {
        if (kind == "path") return path_graph(n);
        if (kind == "cycle") return cycle_graph(n);
        if (kind == "complete") return complete_graph(n);
        if (kind == "star") return star_graph(n);
        if (kind == "empty") return empty_graph(n);
        throw std::invalid_argument("unknown kind " + kind);
    }();
    std::cout << encode_graph6(g) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dominating-set tallies, average orders and bound verification"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* avd_cmd = app.add_subcommand("avd", "average dominating-set order of each input graph");
    add_common_options(avd_cmd, opts);

    auto* tally_cmd = app.add_subcommand("tally", "per-cardinality dominating-set counts");
    add_common_options(tally_cmd, opts);
    bool tally_analyze = false, tally_oracle = false;
    tally_cmd->add_flag("--analyze", tally_analyze, "include mode/unimodality/real-rootedness");
    tally_cmd->add_flag("--oracle", tally_oracle, "use the brute-force oracle path");

    auto* profile_cmd = app.add_subcommand("profile", "critical-vertex profile of one graph");
    add_common_options(profile_cmd, opts);
    std::string profile_set;
    profile_cmd->add_option("--set", profile_set,
                            "comma-separated dominating set, e.g. 0,2; omit for aggregates");

    auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
    add_common_options(verify_cmd, opts);
    std::string lemma = "all";
    int order_upto = 0;
    verify_cmd->add_option("--lemma", lemma,
                           "sum, a1n1, deg2, kstem, restricted, obs3, bound, darroch, theorem or all")
        ->check(CLI::IsMember({"sum", "a1n1", "deg2", "kstem", "restricted", "obs3", "bound",
                               "darroch", "theorem", "all"}));
    verify_cmd->add_option("--order-upto", order_upto,
                           "verify every class of order up to this bound (<= 7)");

    auto* search_cmd = app.add_subcommand("search", "extremal search over a graph stream");
    add_common_options(search_cmd, opts);
    SearchConstraint constraint;
    search_cmd->add_option("--n", constraint.n, "graph order")->required();
    search_cmd->add_option("--min-degree", constraint.min_degree, "minimum degree filter");
    search_cmd->add_flag("--connected", constraint.connected, "restrict to connected graphs");
    search_cmd->add_flag("--no-isolated", constraint.no_isolated, "exclude isolated vertices");

    auto* survey_cmd = app.add_subcommand("survey", "largest domination-polynomial mode survey");
    add_common_options(survey_cmd, opts);
    int survey_n = 0;
    survey_cmd->add_option("--n", survey_n, "graph order")->required();

    auto* generate_cmd = app.add_subcommand("generate", "emit graphs as graph6 lines");
    add_common_options(generate_cmd, opts, false);
    std::string kind;
    int gen_n = 0;
    bool gen_all = false;
    SearchConstraint gen_filter;
    generate_cmd->add_option("--kind", kind, "path, cycle, complete, star or empty");
    generate_cmd->add_option("--n", gen_n, "graph order")->required();
    generate_cmd->add_flag("--all", gen_all, "all non-isomorphic graphs of the order (n <= 7)");
    generate_cmd->add_option("--min-degree", gen_filter.min_degree, "filter: minimum degree");
    bool gen_connected = false, gen_no_isolated = false;
    generate_cmd->add_flag("--connected", gen_connected, "filter: connected only");
    generate_cmd->add_flag("--no-isolated", gen_no_isolated, "filter: no isolated vertices");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(avd_cmd)) return cmd_avd(opts);
        if (app.got_subcommand(tally_cmd)) return cmd_tally(opts, tally_analyze, tally_oracle);
        if (app.got_subcommand(profile_cmd)) return cmd_profile(opts, profile_set);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(opts, lemma, order_upto);
        if (app.got_subcommand(search_cmd)) return cmd_search(opts, constraint);
        if (app.got_subcommand(survey_cmd)) return cmd_survey(opts, survey_n);
        if (app.got_subcommand(generate_cmd)) {
            gen_filter.n = gen_n;
            gen_filter.connected = gen_connected;
            gen_filter.no_isolated = gen_no_isolated;
            const bool use_filter =
                gen_filter.min_degree > 0 || gen_connected || gen_no_isolated;
            return cmd_generate(opts, kind, gen_n, gen_all, gen_filter, use_filter);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
