// Command-line front end: compute parameters, verify placements, emit records.
//
// Exit codes: 0 success, 1 infeasible / undefined / timeout / failed
// verification, 2 usage or input error, 3 self-check or cross-check mismatch.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "robustpd/robustpd.hpp"

using namespace robustpd;
using nlohmann::json;

namespace {

struct Options {
    std::string family;
    std::string input;
    std::string format = "json";
    std::string set;
    int k = 0;
    int j = 0;
    int to = 0;
    int exact_to = 2;
    bool witness_only = false;
    bool cross_check = false;
    bool long_running = false;
    bool no_self_check = false;
    unsigned jobs = 1;
    double timeout = 0;
};

/// Raised when the tool's own answer fails re-verification.
struct MismatchError : Error {
    using Error::Error;
};

struct Loaded {
    Graph graph;
    std::optional<FamilySpec> spec;
    std::string description;
};

Loaded load_graph(const Options& o) {
    if (!o.family.empty() && !o.input.empty()) throw ParameterError("input", "use either --family or --input");
    if (!o.family.empty()) {
        auto spec = parse_family(o.family);
        return {build(spec), spec, o.family};
    }
    if (o.input.empty()) throw ParameterError("family", "one of --family or --input is required");
    std::ifstream in(o.input);
    if (!in) throw ParameterError("input", "cannot read " + o.input);
    std::stringstream text;
    text << in.rdbuf();
    return {parse_edge_list(text.str()), std::nullopt, "file:" + o.input};
}

SearchControl control_of(const Options& o) {
    if (o.timeout > 0) return SearchControl::with_timeout(o.timeout, o.jobs);
    SearchControl c;
    c.jobs = o.jobs;
    return c;
}

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Vertex resolve_vertex(const Graph& g, const std::string& token) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.label(v) == token) return v;
    try {
        std::size_t used = 0;
        auto v = std::stoul(token, &used);
        if (used == token.size() && v < g.order()) return static_cast<Vertex>(v);
    } catch (const std::exception&) {
    }
    throw ParameterError("set", "unknown vertex '" + token + "'");
}

/// "(2,4),(3,2)", "0:2,3:1", "c:2" or "x1,y1": labels or indices, optional ":multiplicity".
PmuMultiset parse_set(const Graph& g, const std::string& text) {
    if (text.empty()) throw ParameterError("set", "--set is required");
    PmuMultiset s;
    for (const auto& item : split_top_level(text)) {
        auto colon = item.rfind(':');
        std::string vertex = item;
        int m = 1;
        if (colon != std::string::npos && item.find(')', colon) == std::string::npos) {
            vertex = item.substr(0, colon);
            try {
                m = std::stoi(item.substr(colon + 1));
            } catch (const std::exception&) {
                throw ParameterError("set", "bad multiplicity in '" + item + "'");
            }
            if (m < 1) throw ParameterError("set", "multiplicity must be positive in '" + item + "'");
        }
        s.add(resolve_vertex(g, vertex), m);
    }
    return s;
}

std::string labelled(const Graph& g, const PmuMultiset& s) {
    std::string out = "{";
    for (const auto& [v, m] : s.counts()) {
        if (out.size() > 1) out += ", ";
        out += g.label(v) + (m > 1 ? ":" + std::to_string(m) : "");
    }
    return out + "}";
}

template <typename F>
auto timed(std::int64_t& ms, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto r = f();
    ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ResultRecord make_record(const Loaded& l, const std::string& op) {
    ResultRecord r;
    r.graph = l.description;
    r.operation = op;
    return r;
}

void self_check(const Options& o, bool ok, const std::string& what) {
    if (o.no_self_check || ok) return;
    throw MismatchError("self-check failed: " + what);
}

// ---------------------------------------------------------------------------
// Closed forms

struct FormulaAnswer {
    int value;
    PmuMultiset witness;
    std::string name;
};

PmuMultiset swap_sides(const PmuMultiset& s, int first_side, int second_side) {
    // s numbers the side of size first_side first; the graph numbers it second
    PmuMultiset out;
    for (auto [v, m] : s.counts()) {
        int iv = static_cast<int>(v);
        out.add(static_cast<Vertex>(iv < first_side ? second_side + iv : iv - first_side), m);
    }
    return out;
}

std::optional<FormulaAnswer> formula_for(const Loaded& l, int k) {
    const auto& g = l.graph;
    if (l.spec && l.spec->kind == FamilyKind::complete_bipartite) {
        int a = l.spec->params[0];
        int b = l.spec->params[1];
        int lo = std::min(a, b);
        int hi = std::max(a, b);
        if (lo >= 3) {
            int value = 0;
            std::string name;
            if (lo == hi) {
                value = gpk_knn(lo, k);
                name = "K_{n,n} closed form";
            } else if (lo == 3 && hi == 4) {
                value = gpk_k34(k);
                name = "K_{3,4} closed form";
            } else {
                value = pk_sequence(lo, hi, k).values.back();
                name = "K_{a,b} jump recursion";
            }
            auto w = bipartite_witness(lo, hi, k, value);
            if (!w) throw std::logic_error("no evenly distributed witness at the formula value");
            return FormulaAnswer{value, a <= b ? *w : swap_sides(*w, lo, hi), name};
        }
    }
    if (l.spec && l.spec->kind == FamilyKind::complete_multipartite && l.spec->params.size() >= 2 &&
        std::all_of(l.spec->params.begin(), l.spec->params.end(), [](int p) { return p == 3; })) {
        int m = static_cast<int>(l.spec->params.size());
        int value = gpk_k333m(m, k);
        auto witness = k == 0 ? PmuMultiset{{0, 1}, {3, 1}} : sjbound_witness(g.vertices().to_vector(), 2, k);
        return FormulaAnswer{value, witness, "K_{3,...,3} full-overlap formula"};
    }
    if (g.is_connected() && is_block_graph(g)) {
        auto r = gpk_block(g, k);
        return FormulaAnswer{r.value, r.witness, "block graph (k+1)*gamma_p"};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subcommands

std::vector<ResultRecord> cmd_gamma(const Options& o) {
    auto l = load_graph(o);
    auto r = make_record(l, "gamma");
    auto res = timed(r.elapsed_ms, [&] { return gamma_p(l.graph, control_of(o)); });
    self_check(o, is_pds(l.graph, res.witness), "gamma witness is not a power dominating set");
    r.value = res.value;
    r.set_witness(res.witness);
    return {r};
}

std::vector<ResultRecord> cmd_robust(const Options& o, int& exit_code) {
    auto l = load_graph(o);
    auto r = make_record(l, "robust");
    r.k = o.k;
    auto control = control_of(o);
    if (auto f = formula_for(l, o.k)) {
        r.elapsed_ms = 0;
        r.value = f->value;
        r.set_witness(f->witness);
        r.prover = Prover::formula;
        r.details["formula"] = f->name;
        self_check(o, f->witness.total() == f->value && is_k_rpds(l.graph, f->witness, o.k).ok,
                   "formula witness is not robust");
        if (o.cross_check) {
            auto s = timed(r.elapsed_ms, [&] { return min_k_rpds(l.graph, o.k, {true, std::nullopt, {}, control}); });
            r.details["search_value"] = s.value;
            if (s.value != f->value)
                throw MismatchError("cross-check: formula gives " + std::to_string(f->value) + ", search gives " +
                                    std::to_string(s.value));
        }
        return {r};
    }
    BoundContext ctx;
    try {
        ctx.gamma = gamma_p(l.graph, control).value;
        r.set_bounds(bounds(l.graph, o.k, ctx));
        RobustSearchOptions opts{true, std::nullopt, ctx, control};
        auto res = timed(r.elapsed_ms, [&] { return min_k_rpds(l.graph, o.k, opts); });
        self_check(o, res.witness.total() == res.value && is_k_rpds(l.graph, res.witness, o.k).ok,
                   "search witness is not robust");
        r.value = res.value;
        r.set_witness(res.witness);
    } catch (const SearchTimeout& e) {
        r.lower.push_back({e.proven_lower(), "search"});
        r.details["timeout"] = true;
        r.details["proven_lower"] = e.proven_lower();
        std::cerr << "timeout: " << e.what() << "\n";
        exit_code = 1;
    }
    return {r};
}

std::vector<ResultRecord> cmd_ft(const Options& o) {
    auto l = load_graph(o);
    auto r = make_record(l, "ft");
    r.k = o.k;
    auto res = timed(r.elapsed_ms, [&] { return min_fault_tolerant(l.graph, o.k, control_of(o)); });
    bool ok = !detail::for_each_combination(res.witness.to_vector(), static_cast<std::size_t>(o.k),
                                            [&](const VertexSet& f) { return !is_pds(l.graph, res.witness - f); });
    self_check(o, ok, "fault-tolerant witness fails a removal");
    r.value = res.value;
    r.set_witness(res.witness);
    return {r};
}

std::vector<ResultRecord> cmd_check(const Options& o, int& exit_code) {
    auto l = load_graph(o);
    auto r = make_record(l, "check");
    r.k = o.k;
    r.prover = Prover::certificate;
    auto s = parse_set(l.graph, o.set);
    auto res = timed(r.elapsed_ms, [&] { return is_k_rpds(l.graph, s, o.k); });
    r.value = s.total();
    r.set_witness(s);
    r.details["robust"] = res.ok;
    if (res.counterexample) {
        json f = json::array();
        for (auto [v, m] : res.counterexample->counts()) f.push_back({v, m});
        r.details["counterexample"] = f;
    }
    if (!res.reason.empty()) r.details["reason"] = res.reason;
    if (!res.ok) exit_code = 1;
    return {r};
}

std::vector<ResultRecord> cmd_bigpds(const Options& o, int& exit_code) {
    auto l = load_graph(o);
    auto r = make_record(l, "bigpds");
    r.details["j"] = o.j;
    if (o.witness_only) {
        r.prover = Prover::certificate;
        auto s = parse_set(l.graph, o.set).support();
        bool ok = timed(r.elapsed_ms, [&] { return verify_overlap_set(l.graph, s, o.j); });
        r.value = static_cast<int>(s.size());
        r.set_witness(s);
        r.details["verified"] = ok;
        if (!ok) {
            detail::for_each_combination(s.to_vector(), static_cast<std::size_t>(o.j), [&](const VertexSet& a) {
                if (is_pds(l.graph, a)) return false;
                r.details["failing_subset"] = a.to_vector();
                return true;
            });
            exit_code = 1;
        }
        return {r};
    }
    auto c = timed(r.elapsed_ms, [&] { return bigpds_j(l.graph, o.j, control_of(o)); });
    self_check(o, verify_overlap_set(l.graph, c.set, o.j), "overlap set fails verification");
    r.value = c.size;
    r.set_witness(c.set);
    r.details["verified"] = c.verified;
    r.details["maximal"] = c.maximal;
    return {r};
}

std::vector<ResultRecord> cmd_bounds(const Options& o, CLI::App& sub) {
    auto l = load_graph(o);
    auto control = control_of(o);
    std::map<int, int> overlap;
    if (sub.count("--j")) overlap[o.j] = bigpds_j(l.graph, o.j, control).size;
    if (!sub.count("--to")) {
        auto r = make_record(l, "bounds");
        r.k = o.k;
        BoundContext ctx;
        ctx.overlap = overlap;
        auto report = timed(r.elapsed_ms, [&] { return bounds(l.graph, o.k, ctx, control); });
        r.set_bounds(report);
        if (report.best_lower == report.best_upper) r.value = report.best_lower;
        r.details["best_lower"] = report.best_lower;
        r.details["best_upper"] = report.best_upper;
        return {r};
    }
    TableOptions opts;
    opts.max_k = o.to;
    opts.exact_up_to = o.long_running ? std::max(o.exact_to, 3) : o.exact_to;
    opts.overlap = overlap;
    opts.control = control;
    std::int64_t ms = 0;
    auto rows = timed(ms, [&] { return reproduce_table(l.graph, opts); });
    std::vector<ResultRecord> out;
    for (const auto& row : rows) {
        auto r = make_record(l, "bounds");
        r.k = row.k;
        r.elapsed_ms = ms;
        r.prover = row.computed ? Prover::search : Prover::formula;
        if (row.value.exact()) r.value = row.value.lo;
        r.details = {{"lo", row.value.lo}, {"hi", row.value.hi}, {"computed", row.computed},
                     {"base_bound", row.base_bound}, {"cell", value_cell(row.value)}};
        r.details["overlap_bound"] = row.overlap_bound ? json(*row.overlap_bound) : json(nullptr);
        out.push_back(r);
    }
    return out;
}

std::vector<ResultRecord> cmd_sequence(const Options& o) {
    auto l = load_graph(o);
    if (!l.spec || l.spec->kind != FamilyKind::complete_bipartite)
        throw ParameterError("family", "sequence needs a kab:a,b family");
    int a = std::min(l.spec->params[0], l.spec->params[1]);
    int b = std::max(l.spec->params[0], l.spec->params[1]);
    auto seq = pk_sequence(a, b, o.to);
    std::vector<ResultRecord> out;
    for (int k = 0; k <= o.to; ++k) {
        auto r = make_record(l, "sequence");
        r.k = k;
        r.prover = Prover::formula;
        r.value = seq.values[static_cast<std::size_t>(k)];
        if (k < o.to) r.details["jump_next"] = static_cast<bool>(seq.jump_flags[static_cast<std::size_t>(k)]);
        out.push_back(r);
    }
    return out;
}

std::vector<ResultRecord> cmd_formula(const Options& o) {
    auto l = load_graph(o);
    auto r = make_record(l, "formula");
    r.k = o.k;
    r.prover = Prover::formula;
    auto f = formula_for(l, o.k);
    if (!f) throw UndefinedParameterError("no closed form applies to " + l.description);
    self_check(o, is_k_rpds(l.graph, f->witness, o.k).ok, "formula witness is not robust");
    r.value = f->value;
    r.set_witness(f->witness);
    r.details["formula"] = f->name;
    return {r};
}

json tree_json(const RefinedCutTree& t) {
    json blocks = json::array();
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        const auto& node = t.blocks[b];
        blocks.push_back({{"id", t.node_name(t.block_node(b))},
                          {"members", node.members.to_vector()},
                          {"cut_members", node.cut_members},
                          {"non_cut_count", node.non_cut_members.size()},
                          {"class", to_string(node.cls)}});
    }
    json edges = json::array();
    for (auto [b, c] : t.edges) edges.push_back({t.node_name(t.block_node(b)), t.node_name(c)});
    return {{"cut_vertices", t.cut_vertices}, {"blocks", blocks}, {"edges", edges}};
}

std::vector<ResultRecord> cmd_cuttree(const Options& o) {
    auto l = load_graph(o);
    auto t = refined_cut_tree(l.graph);
    if (o.format == "dot") {
        std::cout << render_dot(t, l.graph);
        return {};
    }
    if (o.format == "text") {
        std::cout << render_text(t, l.graph);
        return {};
    }
    auto r = make_record(l, "cuttree");
    r.prover = Prover::search;
    auto g = timed(r.elapsed_ms, [&] { return gamma_p_block(l.graph); });
    r.value = g.value;
    r.set_witness(g.witness);
    r.details["tree"] = tree_json(t);
    if (!o.set.empty()) {
        auto obs = cut_tree_observe(t, parse_set(l.graph, o.set).support());
        json seen = json::array();
        for (std::size_t node = 0; node < obs.observed.size(); ++node)
            if (obs.observed[node]) seen.push_back(t.node_name(node));
        r.details["observation"] = {{"full", obs.is_full}, {"observed", seen}};
    }
    return {r};
}

std::vector<ResultRecord> cmd_gen(const Options& o) {
    auto l = load_graph(o);
    if (o.format == "text") {
        std::cout << render_edge_list(l.graph);
        return {};
    }
    auto r = make_record(l, "gen");
    r.prover = Prover::formula;
    r.value = static_cast<int>(l.graph.order());
    r.details = {{"n", l.graph.order()}, {"edges", l.graph.edges()}, {"labels", l.graph.labels()}};
    return {r};
}

// ---------------------------------------------------------------------------
// Output

void emit(const Options& o, const std::vector<ResultRecord>& records, const Graph* g) {
    if (records.empty()) return;
    if (o.format == "csv") {
        std::cout << csv_header() << '\n';
        for (const auto& r : records) std::cout << to_csv_row(r) << '\n';
    } else if (o.format == "text") {
        if (records.front().operation == "sequence") {
            for (std::size_t i = 0; i < records.size(); ++i) std::cout << (i ? "," : "") << *records[i].value;
            std::cout << '\n';
        } else if (records.front().operation == "bounds" && records.size() > 1) {
            std::cout << "k\trobust\toverlap bound\t(k+1)*gamma_p\n";
            for (const auto& r : records)
                std::cout << *r.k << '\t' << r.details["cell"].get<std::string>() << '\t'
                          << (r.details["overlap_bound"].is_null() ? std::string("N/A")
                                                                   : std::to_string(r.details["overlap_bound"].get<int>()))
                          << '\t' << r.details["base_bound"] << '\n';
        } else {
            for (const auto& r : records) {
                std::cout << r.operation << (r.k ? " k=" + std::to_string(*r.k) : "") << ": "
                          << (r.value ? std::to_string(*r.value) : "unknown");
                if (!r.witness.empty() && g) std::cout << " " << labelled(*g, r.witness_multiset());
                std::cout << '\n';
            }
        }
    } else {
        json out = json::array();
        for (const auto& r : records) out.push_back(r);
        std::cout << out.dump(2) << '\n';
    }
    for (const auto& r : records) {
        std::cerr << r.graph << " " << r.operation << (r.k ? " k=" + std::to_string(*r.k) : "") << " -> "
                  << (r.value ? std::to_string(*r.value) : "?") << " [" << to_string(r.prover) << ", "
                  << r.elapsed_ms << " ms]";
        if (r.details.contains("verified")) std::cerr << " verified=" << r.details["verified"];
        if (r.details.contains("robust")) std::cerr << " robust=" << r.details["robust"];
        std::cerr << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact power domination, PMU-defect-robust placements and their bounds."};
    app.require_subcommand(1);
    Options o;

    auto add_graph = [&](CLI::App* s) {
        s->add_option("--family", o.family, "family: grid:RxC, kab:A,B, kparts:P,..., star:N, path:N, cycle:N, complete:N");
        s->add_option("--input", o.input, "edge-list file (first line 'n m', then 'u v' lines)");
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text", "dot"}));
    };
    auto add_search = [&](CLI::App* s) {
        s->add_option("--jobs", o.jobs, "worker threads (results do not depend on it)")->check(CLI::Range(1U, 256U));
        s->add_option("--timeout", o.timeout, "give up after this many seconds (exit 1)")->check(CLI::NonNegativeNumber);
        s->add_flag("--no-self-check", o.no_self_check, "skip re-verifying emitted witnesses");
    };
    auto add_k = [&](CLI::App* s, bool required) {
        auto opt = s->add_option("--k", o.k, "number of PMU failures to survive")->check(CLI::NonNegativeNumber);
        if (required) opt->required();
    };

    auto* gamma = app.add_subcommand("gamma", "power domination number and a minimum set");
    auto* robust = app.add_subcommand("robust", "minimum PMU placement surviving k failures");
    auto* ft = app.add_subcommand("ft", "minimum fault-tolerant vertex set (one PMU per vertex)");
    auto* check = app.add_subcommand("check", "verify a PMU placement against k failures");
    auto* big = app.add_subcommand("bigpds", "largest set whose j-subsets all power dominate");
    auto* bnd = app.add_subcommand("bounds", "lower and upper bounds, or a table with --to");
    auto* seq = app.add_subcommand("sequence", "robust numbers p_0..p_K of K_{a,b}");
    auto* form = app.add_subcommand("formula", "closed-form robust number when one applies");
    auto* cut = app.add_subcommand("cuttree", "refined cut tree of a block graph");
    auto* gen = app.add_subcommand("gen", "print a family as an edge list (--format text) or record");

    for (auto* s : {gamma, robust, ft, check, big, bnd, seq, form, cut, gen}) add_graph(s);
    for (auto* s : {gamma, robust, ft, big, bnd}) add_search(s);
    for (auto* s : {check, form}) s->add_flag("--no-self-check", o.no_self_check, "skip re-verifying emitted witnesses");
    add_k(robust, true);
    add_k(ft, true);
    add_k(check, true);
    add_k(form, true);
    add_k(bnd, false);
    robust->add_flag("--cross-check", o.cross_check, "also run the exact search when a formula applies");
    robust->add_flag("--long-running", o.long_running, "accepted for symmetry; searches are never skipped here");
    check->add_option("--set", o.set, "placement, e.g. \"0:2,3:1\" or \"(2,4),(3,2)\"")->required();
    big->add_option("--j", o.j, "subset size j")->required()->check(CLI::PositiveNumber);
    big->add_flag("--witness-only", o.witness_only, "verify --set instead of searching");
    big->add_option("--set", o.set, "candidate set for --witness-only");
    bnd->add_option("--j", o.j, "also compute the overlap parameter at this j")->check(CLI::PositiveNumber);
    bnd->add_option("--to", o.to, "tabulate k = 0..TO")->check(CLI::NonNegativeNumber);
    bnd->add_option("--exact-to", o.exact_to, "solve rows k <= this exactly in the table (default 2)");
    bnd->add_flag("--long-running", o.long_running, "solve table rows up to k = 3 exactly");
    seq->add_option("--to", o.to, "last k")->required()->check(CLI::NonNegativeNumber);
    cut->add_option("--set", o.set, "cut vertices to observe from");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    int exit_code = 0;
    try {
        std::vector<ResultRecord> records;
        if (gamma->parsed()) records = cmd_gamma(o);
        else if (robust->parsed()) records = cmd_robust(o, exit_code);
        else if (ft->parsed()) records = cmd_ft(o);
        else if (check->parsed()) records = cmd_check(o, exit_code);
        else if (big->parsed()) {
            if (o.witness_only && o.set.empty()) throw ParameterError("set", "--witness-only needs --set");
            records = cmd_bigpds(o, exit_code);
        } else if (bnd->parsed()) records = cmd_bounds(o, *bnd);
        else if (seq->parsed()) records = cmd_sequence(o);
        else if (form->parsed()) records = cmd_formula(o);
        else if (cut->parsed()) records = cmd_cuttree(o);
        else if (gen->parsed()) records = cmd_gen(o);
        std::optional<Graph> g;
        if (!records.empty() && o.format == "text") g = load_graph(o).graph;
        emit(o, records, g ? &*g : nullptr);
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const SearchTimeout& e) {
        std::cerr << "timeout: " << e.what() << " (proven lower bound " << e.proven_lower() << ")\n";
        return 1;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}
