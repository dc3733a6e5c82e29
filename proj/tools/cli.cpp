#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "drn/constructions.hpp"
#include "drn/error.hpp"
#include "drn/graph.hpp"
#include "drn/repr.hpp"
#include "drn/solver.hpp"

namespace drn::cli {

namespace {

using nlohmann::json;

enum class Format { text, csv, json };

struct Config {
    std::string graph;
    std::string matrix_path;
    std::string which;
    std::string range;
    std::string corpus;
    int order = 0;
    int k = 0;
    int max_k = kMaxSearchWidth;
    std::uint64_t node_limit = SearchLimits{}.node_limit;
    std::int64_t time_limit_ms = SearchLimits{}.time_limit.count();
    int workers = 0;
    Format format = Format::text;
    std::string out_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Graph parse_graph(const std::string& spec) {
    if (spec.starts_with("@")) {
        std::istringstream in(read_file(spec.substr(1)));
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (!line.empty()) return graph6_decode(line);
        }
        throw InputError("'" + spec.substr(1) + "' holds no graph6 line");
    }
    return build(parse_family(spec));
}

std::vector<Graph> read_corpus(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line.starts_with("#")) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const InputError& e) {
            throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto num = [&](std::string_view s) {
        int v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size() || v < 1) throw InputError("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = num(text);
        return {v, v};
    }
    const int a = num(std::string_view(text).substr(0, dots));
    const int b = num(std::string_view(text).substr(dots + 2));
    if (a > b) throw InputError("bad range '" + text + "'");
    return {a, b};
}

SolveLimits solve_limits(const Config& c) {
    SolveLimits l;
    l.max_k = c.max_k;
    l.search.node_limit = c.node_limit;
    l.search.time_limit = std::chrono::milliseconds(c.time_limit_ms);
    l.search.workers = c.workers;
    return l;
}

std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::uint64_t total_nodes(const SolveResult& r) {
    std::uint64_t t = 0;
    for (const auto& k : r.per_k) t += k.stats.nodes;
    return t;
}

double total_ms(const SolveResult& r) {
    double t = 0;
    for (const auto& k : r.per_k) t += k.stats.elapsed_ms;
    return t;
}

json solve_json(const Graph& g, const SolveResult& r) {
    json per_k = json::array();
    for (const auto& k : r.per_k) {
        per_k.push_back({{"k", k.k}, {"verdict", to_string(k.verdict)}, {"nodes", k.stats.nodes},
                         {"elapsed_ms", k.stats.elapsed_ms}});
    }
    return {{"graph6", graph6_encode(g)},        {"drn", r.drn},
            {"lower_bound", r.lower_bound_used}, {"upper_bound", r.upper_bound},
            {"refuted", r.ks_refuted},           {"nodes", total_nodes(r)},
            {"elapsed_ms", total_ms(r)},         {"witness_source", r.witness_source},
            {"per_k", per_k},                    {"witness", write_matrix(r.witness)}};
}

// Writes to --out when given, else to out.
void emit(const Config& c, std::ostream& out, const std::string& text) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + c.out_path + "'");
    f << text;
}

int cmd_verify(const Config& c, std::ostream& out) {
    const Graph g = parse_graph(c.graph);
    const auto m = read_matrix(read_file(c.matrix_path), {.allow_duplicate_rows = true});
    const auto rep = verify(g, m);
    std::ostringstream s;
    if (c.format == Format::json) {
        json v = json::array();
        for (const auto& x : rep.violations) v.push_back(describe(x));
        s << json{{"valid", rep.valid}, {"n", m.rows()}, {"k", m.width()}, {"violations", v}}.dump(2) << "\n";
    } else if (c.format == Format::csv) {
        s << "valid,n,k,violations\n" << (rep.valid ? 1 : 0) << "," << m.rows() << "," << m.width() << ","
          << rep.violations.size() << "\n";
    } else {
        if (rep.valid) s << "valid: " << m.rows() << " rows, width " << m.width() << "\n";
        for (const auto& x : rep.violations) s << describe(x) << "\n";
    }
    emit(c, out, s.str());
    return rep.valid ? ok : invalid;
}

int cmd_construct(const Config& c, std::ostream& out) {
    const auto spec = parse_family(c.graph);
    const auto r = construct(spec);
    if (!verify(build(spec), r.matrix).valid) throw ConstructionDefect(r.tag + ": output does not verify");
    const std::string body = serialize(r);
    if (c.format == Format::json) {
        out << json{{"family", to_string(spec)}, {"construction", r.tag}, {"width", r.claimed_width},
                    {"matrix", body}}
                   .dump(2)
            << "\n";
    } else if (c.format == Format::csv) {
        out << "family,construction,width\n" << to_string(spec) << "," << r.tag << "," << r.claimed_width << "\n";
    } else if (!c.out_path.empty()) {
        out << r.tag << " width " << r.claimed_width << "\n";
    }
    if (!c.out_path.empty() || c.format == Format::text) emit(c, out, body);
    return ok;
}

int cmd_bounds(const Config& c, std::ostream& out) {
    const Graph g = parse_graph(c.graph);
    const auto b = bounds(g);
    std::ostringstream s;
    if (c.format == Format::json) {
        s << json{{"graph6", b.graph6},
                  {"lower", b.lower},
                  {"lower_source", b.lower_source},
                  {"upper", b.upper},
                  {"upper_source", b.upper_source}}
                 .dump(2)
          << "\n";
    } else if (c.format == Format::csv) {
        s << "graph6,lower,lower_source,upper,upper_source\n"
          << b.graph6 << "," << b.lower << "," << b.lower_source << "," << b.upper << "," << b.upper_source << "\n";
    } else {
        s << "lower " << b.lower << " (" << b.lower_source << ")\n"
          << "upper " << b.upper << " (" << b.upper_source << ")\n";
    }
    emit(c, out, s.str());
    return ok;
}

int cmd_solve(const Config& c, std::ostream& out) {
    const Graph g = parse_graph(c.graph);
    const auto r = solve_drn(g, solve_limits(c));
    std::ostringstream s;
    if (c.format == Format::json) {
        s << solve_json(g, r).dump(2) << "\n";
    } else if (c.format == Format::csv) {
        s << "graph6,drn,lower,upper,refuted,nodes,elapsed_ms,witness_source\n"
          << graph6_encode(g) << "," << r.drn << "," << r.lower_bound_used << "," << r.upper_bound << ","
          << join(r.ks_refuted, ";") << "," << total_nodes(r) << "," << total_ms(r) << "," << r.witness_source
          << "\n";
    } else {
        s << "drn " << r.drn << "\n"
          << "bounds " << r.lower_bound_used << ".." << r.upper_bound << "\n"
          << "refuted {" << join(r.ks_refuted, ",") << "}\n";
        for (const auto& k : r.per_k) {
            s << "k=" << k.k << " " << to_string(k.verdict) << " nodes " << k.stats.nodes << " ms "
              << k.stats.elapsed_ms << "\n";
        }
        s << "witness " << r.witness_source << "\n" << write_matrix(r.witness);
    }
    emit(c, out, s.str());
    return ok;
}

struct TableRow {
    std::vector<int> params;
    int drn;
};

// Consecutive first-parameter values with equal drn printed as one row.
std::string group_text(const std::vector<TableRow>& rows, const std::string& head) {
    std::ostringstream s;
    s << head << "\n";
    auto span = [](int a, int b) {
        if (a == b) return std::to_string(a);
        if (b == a + 1) return std::to_string(a) + "," + std::to_string(b);
        return std::to_string(a) + ",...," + std::to_string(b);
    };
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        auto same = [&](std::size_t x) {
            if (rows[x].drn != rows[i].drn) return false;
            if (rows[x].params.size() == 2 && rows[x].params[1] != rows[i].params[1]) return false;
            return rows[x].params[0] == rows[j].params[0] + 1;
        };
        while (j + 1 < rows.size() && same(j + 1)) ++j;
        s << span(rows[i].params[0], rows[j].params[0]);
        if (rows[i].params.size() == 2) s << " | " << rows[i].params[1];
        s << " | " << rows[i].drn << "\n";
        i = j + 1;
    }
    return s.str();
}

int cmd_table(const Config& c, std::ostream& out) {
    const auto limits = solve_limits(c);
    std::vector<TableRow> rows;
    std::vector<std::string> names;
    if (c.which == "cycles" || c.which == "paths") {
        const auto [a, b] = parse_range(c.range.empty() ? (c.which == "cycles" ? "3..12" : "2..10") : c.range);
        const char* letter = c.which == "cycles" ? "C" : "P";
        if (c.which == "cycles" && a < 3) throw InputError("cycles start at 3");
        for (int n = a; n <= b; ++n) {
            rows.push_back({{n}, solve_drn(build(parse_family(letter + std::to_string(n))), limits).drn});
        }
        names = {"n"};
    } else if (c.which == "bipartite") {
        const auto [a, b] = parse_range(c.range.empty() ? "1..4" : c.range);
        for (int s = a; s <= b; ++s) {
            for (int r = 1; r <= s; ++r) {
                const auto g = build(parse_family("K" + std::to_string(r) + "," + std::to_string(s)));
                rows.push_back({{r, s}, solve_drn(g, limits).drn});
            }
        }
        names = {"r", "s"};
    } else {
        throw InputError("unknown table '" + c.which + "' (cycles, paths, bipartite)");
    }
    std::ostringstream s;
    if (c.format == Format::json) {
        json a = json::array();
        for (const auto& r : rows) {
            json o;
            for (std::size_t i = 0; i < names.size(); ++i) o[names[i]] = r.params[i];
            o["drn"] = r.drn;
            a.push_back(o);
        }
        s << json{{"table", c.which}, {"rows", a}}.dump(2) << "\n";
    } else if (c.format == Format::csv) {
        for (const auto& n : names) s << n << ",";
        s << "drn\n";
        for (const auto& r : rows) {
            for (int p : r.params) s << p << ",";
            s << r.drn << "\n";
        }
    } else {
        const std::string head = c.which == "cycles"      ? "n | drn(C_n)"
                                 : c.which == "paths"     ? "n | drn(P_n)"
                                                          : "r | s | drn(K_r,s)";
        s << group_text(rows, head);
    }
    emit(c, out, s.str());
    return ok;
}

int cmd_survey(const Config& c, std::ostream& out) {
    std::vector<Graph> corpus;
    int k = c.k;
    if (!c.corpus.empty()) {
        if (c.order) throw InputError("give a corpus file or --order, not both");
        corpus = read_corpus(c.corpus);
        if (!k) throw InputError("--k is required with a corpus file");
    } else if (c.order) {
        corpus = nonisomorphic_graphs(c.order);
        if (!k) k = c.order;
    } else {
        throw InputError("survey needs a corpus file or --order");
    }
    const auto r = survey(corpus, k, solve_limits(c).search);
    std::ostringstream s;
    if (c.format == Format::json) {
        s << json{{"order", r.order},
                  {"k", r.k},
                  {"total", r.total},
                  {"not_representable", r.not_representable},
                  {"refuted", r.refuted},
                  {"nodes", r.nodes}}
                 .dump(2)
          << "\n";
    } else if (c.format == Format::csv) {
        s << "order,k,total,not_representable,refuted\n"
          << r.order << "," << r.k << "," << r.total << "," << r.not_representable << ",";
        for (std::size_t i = 0; i < r.refuted.size(); ++i) s << (i ? ";" : "") << r.refuted[i];
        s << "\n";
    } else {
        s << "graphs " << r.total << " width " << r.k << "\n"
          << "not representable " << r.not_representable << "\n";
        for (const auto& g6 : r.refuted) s << g6 << "\n";
    }
    emit(c, out, s.str());
    return ok;
}

void add_limits(CLI::App* sub, Config& c) {
    sub->add_option("--max-k", c.max_k, "Largest width searched")->check(CLI::Range(1, kMaxSearchWidth));
    sub->add_option("--node-limit", c.node_limit, "Search nodes per width")->check(CLI::PositiveNumber);
    sub->add_option("--time-limit-ms", c.time_limit_ms, "Search time per width")->check(CLI::PositiveNumber);
    sub->add_option("--workers", c.workers, "OpenMP threads (0: default)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derangement representations of graphs", "drn"};
    app.require_subcommand(1);
    Config c;
    const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "text, csv or json")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("--out", c.out_path, "Write the result here");
    };

    auto* verify_cmd = app.add_subcommand("verify", "Check a matrix against a graph");
    verify_cmd->add_option("graph", c.graph, "Family, g6:<code> or @file")->required();
    verify_cmd->add_option("matrix", c.matrix_path, "drnmat file")->required();
    common(verify_cmd);

    auto* construct_cmd = app.add_subcommand("construct", "Build a representation for a family");
    construct_cmd->add_option("family", c.graph, "Family grammar string")->required();
    common(construct_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds on drn");
    bounds_cmd->add_option("graph", c.graph, "Family, g6:<code> or @file")->required();
    common(bounds_cmd);

    auto* solve_cmd = app.add_subcommand("solve", "Compute drn exactly");
    solve_cmd->add_option("graph", c.graph, "Family, g6:<code> or @file")->required();
    add_limits(solve_cmd, c);
    common(solve_cmd);

    auto* table_cmd = app.add_subcommand("table", "Reproduce a table of exact values");
    table_cmd->add_option("which", c.which, "cycles, paths or bipartite")->required();
    table_cmd->add_option("range", c.range, "a..b (n, or s for bipartite)");
    add_limits(table_cmd, c);
    common(table_cmd);

    auto* survey_cmd = app.add_subcommand("survey", "Count graphs with no k-representation");
    survey_cmd->add_option("corpus", c.corpus, "graph6 file, one graph per line");
    survey_cmd->add_option("--order", c.order, "Enumerate all graphs of this order")->check(CLI::Range(1, 6));
    survey_cmd->add_option("--k", c.k, "Width")->check(CLI::Range(1, kMaxSearchWidth));
    add_limits(survey_cmd, c);
    common(survey_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(c, out);
        if (construct_cmd->parsed()) return cmd_construct(c, out);
        if (bounds_cmd->parsed()) return cmd_bounds(c, out);
        if (solve_cmd->parsed()) return cmd_solve(c, out);
        if (table_cmd->parsed()) return cmd_table(c, out);
        return cmd_survey(c, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const ConstructionDefect& e) {
        err << "construction defect: " << e.what() << "\n";
        return construction_defect;
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return budget_exhausted;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return construction_defect;
    }
}

}  // namespace drn::cli
