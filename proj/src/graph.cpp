#include "drn/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>

#include "drn/error.hpp"

namespace drn {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v + 1) + " out of range");
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder) {
        throw InputError("graph order " + std::to_string(n) + " outside [1.." + std::to_string(kMaxOrder) + "]");
    }
    rows_.assign(static_cast<std::size_t>(n), 0);
}

int Graph::degree(int v) const { return std::popcount(rows_[static_cast<std::size_t>(v)]); }

int Graph::edge_count() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
}

std::uint64_t Graph::all_vertices() const { return low_mask(n_); }

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw InputError("loops are not allowed");
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    rows_[static_cast<std::size_t>(u)] &= ~bit(v);
    rows_[static_cast<std::size_t>(v)] &= ~bit(u);
}

std::vector<Edge> edges(const Graph& g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v)) out.push_back({u, v});
        }
    }
    return out;
}

Graph from_edges(int n, std::span<const Edge> es) {
    Graph g(n);
    for (const auto& e : es) g.add_edge(e.u, e.v);
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) c.add_edge(u, v);
        }
    }
    return c;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vs) {
    if (vs.empty()) throw InputError("induced subgraph needs a nonempty vertex set");
    std::uint64_t seen = 0;
    for (int v : vs) {
        check_vertex(g, v);
        if (seen & bit(v)) throw InputError("vertex " + std::to_string(v + 1) + " repeated");
        seen |= bit(v);
    }
    Graph h(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (g.adjacent(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return h;
}

Graph relabel(const Graph& g, std::span<const int> map) {
    if (static_cast<int>(map.size()) != g.order()) throw InputError("relabelling has wrong size");
    Graph h(g.order());
    for (const auto& e : edges(g)) h.add_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    if (h.edge_count() != g.edge_count()) throw InputError("relabelling is not a bijection");
    return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t left = g.all_vertices();
    while (left) {
        std::uint64_t comp = bit(std::countr_zero(left));
        std::uint64_t frontier = comp;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const std::uint64_t fresh = g.neighbours(v) & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= ~comp;
        std::vector<int> vs;
        for (std::uint64_t c = comp; c; c &= c - 1) vs.push_back(std::countr_zero(c));
        out.push_back(std::move(vs));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

namespace {

// Branch and bound with a greedy colouring bound on each candidate set.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<int> run() {
        std::vector<int> current;
        expand(current, g_.all_vertices());
        return best_;
    }

private:
    void expand(std::vector<int>& current, std::uint64_t candidates) {
        std::vector<int> order;
        std::vector<int> colour;
        std::uint64_t uncoloured = candidates;
        int c = 0;
        while (uncoloured) {
            ++c;
            std::uint64_t avail = uncoloured;
            while (avail) {
                const int v = std::countr_zero(avail);
                avail &= ~bit(v) & ~g_.neighbours(v);
                uncoloured &= ~bit(v);
                order.push_back(v);
                colour.push_back(c);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + static_cast<std::size_t>(colour[i]) <= best_.size()) return;
            const int v = order[i];
            current.push_back(v);
            const std::uint64_t next = candidates & g_.neighbours(v);
            if (next) {
                expand(current, next);
            } else if (current.size() > best_.size()) {
                best_ = current;
            }
            current.pop_back();
            candidates &= ~bit(v);
        }
    }

    const Graph& g_;
    std::vector<int> best_;
};

}  // namespace

std::vector<int> maximum_clique(const Graph& g) {
    auto c = CliqueSearch(g).run();
    std::sort(c.begin(), c.end());
    return c;
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

CliqueDecomposition trivial_edge_decomposition(const Graph& g) {
    if (g.edge_count() == 0) throw InputError("no non-trivial decomposition exists");
    CliqueDecomposition d;
    for (const auto& e : edges(g)) d.cliques.push_back({e.u, e.v});
    return d;
}

CliqueDecomposition greedy_clique_decomposition(const Graph& g) {
    if (g.edge_count() == 0) throw InputError("no non-trivial decomposition exists");
    CliqueDecomposition d;
    Graph rest = g;
    while (rest.edge_count() > 0) {
        auto c = maximum_clique(rest);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) rest.remove_edge(c[i], c[j]);
        }
        d.cliques.push_back(std::move(c));
    }
    return d;
}

bool is_clique_decomposition(const Graph& host, const CliqueDecomposition& d) {
    Graph covered(host.order());
    int count = 0;
    for (const auto& c : d.cliques) {
        if (c.size() < 2) return false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 0 || c[i] >= host.order()) return false;
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (!host.adjacent(c[i], c[j]) || covered.adjacent(c[i], c[j])) return false;
                covered.add_edge(c[i], c[j]);
                ++count;
            }
        }
    }
    return count == host.edge_count();
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (b.order() != n || a.edge_count() != b.edge_count()) return std::nullopt;
    // Order a's vertices so each one sees as many placed vertices as possible,
    // measured in whichever of a, a^c is sparser.
    const bool use_complement = 2 * a.edge_count() > n * (n - 1) / 2;
    const Graph sa = use_complement ? complement(a) : a;
    std::vector<int> order;
    std::uint64_t placed = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        int pick_links = -1;
        int pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed & bit(v)) continue;
            const int links = std::popcount(sa.neighbours(v) & placed);
            const int deg = sa.degree(v);
            if (links > pick_links || (links == pick_links && deg > pick_deg)) {
                pick = v;
                pick_links = links;
                pick_deg = deg;
            }
        }
        order.push_back(pick);
        placed |= bit(pick);
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::uint64_t used = 0;
    std::function<bool(int)> place = [&](int depth) {
        if (depth == n) return true;
        const int v = order[static_cast<std::size_t>(depth)];
        for (int w = 0; w < n; ++w) {
            if ((used & bit(w)) || b.degree(w) != a.degree(v)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int u = order[static_cast<std::size_t>(d)];
                ok = a.adjacent(u, v) == b.adjacent(map[static_cast<std::size_t>(u)], w);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used |= bit(w);
            if (place(depth + 1)) return true;
            used &= ~bit(w);
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return map;
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw InputError("graph6 encoding supports order at most 62");
    std::string s(1, static_cast<char>(n + 63));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                s += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) s += static_cast<char>((acc << (6 - filled)) + 63);
    return s;
}

Graph graph6_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    auto fail = [](std::size_t offset, const std::string& why) {
        return InputError("graph6 byte " + std::to_string(offset) + ": " + why);
    };
    if (text.empty()) throw fail(0, "empty string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw fail(i, "character out of range");
    }
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > 62) throw fail(0, "multi-byte order form is not supported");
    if (n < 1) throw fail(0, "order must be at least 1");
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (text.size() != payload + 1) {
        throw fail(std::min(text.size(), payload + 1), "expected " + std::to_string(payload + 1) + " bytes");
    }
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int c = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((c >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
        }
    }
    if (bits % 6) {
        const int c = static_cast<unsigned char>(text.back()) - 63;
        const int pad = 6 - static_cast<int>(bits % 6);
        if (c & ((1 << pad) - 1)) throw fail(text.size() - 1, "nonzero padding bits");
    }
    return g;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("cannot parse graph '" + std::string(whole) + "'");
    }
    return x;
}

void require(bool ok, const std::string& why) {
    if (!ok) throw InputError(why);
}

void validate(const FamilySpec& f) {
    using K = FamilySpec::Kind;
    const std::string cap = "order must be in [1.." + std::to_string(Graph::kMaxOrder) + "]";
    switch (f.kind) {
        case K::complete:
        case K::path:
        case K::empty:
            require(f.n >= 1 && f.n <= Graph::kMaxOrder, cap);
            break;
        case K::cycle:
            require(f.n >= 3, "cycle needs n >= 3");
            require(f.n <= Graph::kMaxOrder, cap);
            break;
        case K::complete_bipartite:
            require(f.n >= 1 && f.s >= 1, "complete bipartite needs r, s >= 1");
            require(f.n + f.s <= Graph::kMaxOrder, cap);
            break;
        case K::complete_minus:
            require(f.n >= 1 && f.n <= Graph::kMaxOrder, cap);
            switch (f.pattern) {
                case Pattern::clique: require(f.pattern_order >= 2, "removed clique needs r >= 2"); break;
                case Pattern::path: require(f.pattern_order >= 2, "removed path needs k >= 2"); break;
                case Pattern::cycle: require(f.pattern_order >= 3, "removed cycle needs k >= 3"); break;
                case Pattern::two_k2: require(f.n >= 4, "K_n-2K2 needs n >= 4"); break;
                case Pattern::p3_u_p2: require(f.n >= 5, "K_n-(P3uP2) needs n >= 5"); break;
            }
            require(f.pattern_order <= f.n, "removed pattern larger than K_n");
            break;
        case K::graph6:
            break;
    }
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
    FamilySpec f;
    using K = FamilySpec::Kind;
    if (text.starts_with("g6:")) {
        f.kind = K::graph6;
        f.graph6 = std::string(text.substr(3));
        f.n = graph6_decode(f.graph6).order();
        return f;
    }
    require(text.size() >= 2, "cannot parse graph '" + std::string(text) + "'");
    const char head = text[0];
    std::string_view rest = text.substr(1);
    switch (head) {
        case 'P': f.kind = K::path; f.n = parse_int(rest, text); break;
        case 'C': f.kind = K::cycle; f.n = parse_int(rest, text); break;
        case 'E': f.kind = K::empty; f.n = parse_int(rest, text); break;
        case 'K': {
            const auto dash = rest.find('-');
            const auto comma = rest.find(',');
            if (comma != std::string_view::npos && dash == std::string_view::npos) {
                f.kind = K::complete_bipartite;
                f.n = parse_int(rest.substr(0, comma), text);
                f.s = parse_int(rest.substr(comma + 1), text);
            } else if (dash != std::string_view::npos) {
                f.kind = K::complete_minus;
                f.n = parse_int(rest.substr(0, dash), text);
                const std::string_view pat = rest.substr(dash + 1);
                if (pat == "2K2") {
                    f.pattern = Pattern::two_k2;
                    f.pattern_order = 4;
                } else if (pat == "P3uP2") {
                    f.pattern = Pattern::p3_u_p2;
                    f.pattern_order = 5;
                } else {
                    require(pat.size() >= 2, "cannot parse graph '" + std::string(text) + "'");
                    f.pattern_order = parse_int(pat.substr(1), text);
                    switch (pat[0]) {
                        case 'K': f.pattern = Pattern::clique; break;
                        case 'P': f.pattern = Pattern::path; break;
                        case 'C': f.pattern = Pattern::cycle; break;
                        default: throw InputError("unknown removed pattern '" + std::string(pat) + "'");
                    }
                }
            } else {
                f.kind = K::complete;
                f.n = parse_int(rest, text);
            }
            break;
        }
        default:
            throw InputError("cannot parse graph '" + std::string(text) + "'");
    }
    validate(f);
    return f;
}

std::string to_string(const FamilySpec& f) {
    using K = FamilySpec::Kind;
    const std::string n = std::to_string(f.n);
    switch (f.kind) {
        case K::complete: return "K" + n;
        case K::path: return "P" + n;
        case K::cycle: return "C" + n;
        case K::empty: return "E" + n;
        case K::complete_bipartite: return "K" + n + "," + std::to_string(f.s);
        case K::graph6: return "g6:" + f.graph6;
        case K::complete_minus:
            switch (f.pattern) {
                case Pattern::clique: return "K" + n + "-K" + std::to_string(f.pattern_order);
                case Pattern::path: return "K" + n + "-P" + std::to_string(f.pattern_order);
                case Pattern::cycle: return "K" + n + "-C" + std::to_string(f.pattern_order);
                case Pattern::two_k2: return "K" + n + "-2K2";
                case Pattern::p3_u_p2: return "K" + n + "-P3uP2";
            }
    }
    return "?";
}

Graph build(const FamilySpec& f) {
    using K = FamilySpec::Kind;
    if (f.kind == K::graph6) return graph6_decode(f.graph6);
    validate(f);
    switch (f.kind) {
        case K::complete: return complement(Graph(f.n));
        case K::empty: return Graph(f.n);
        case K::path: {
            Graph g(f.n);
            for (int i = 0; i + 1 < f.n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case K::cycle: {
            Graph g(f.n);
            for (int i = 0; i < f.n; ++i) g.add_edge(i, (i + 1) % f.n);
            return g;
        }
        case K::complete_bipartite: {
            Graph g(f.n + f.s);
            for (int i = 0; i < f.n; ++i) {
                for (int j = 0; j < f.s; ++j) g.add_edge(i, f.n + j);
            }
            return g;
        }
        case K::complete_minus: {
            Graph g = complement(Graph(f.n));
            const int k = f.pattern_order;
            switch (f.pattern) {
                case Pattern::clique:
                    for (int i = 0; i < k; ++i) {
                        for (int j = i + 1; j < k; ++j) g.remove_edge(i, j);
                    }
                    break;
                case Pattern::path:
                    for (int i = 0; i + 1 < k; ++i) g.remove_edge(i, i + 1);
                    break;
                case Pattern::cycle:
                    for (int i = 0; i < k; ++i) g.remove_edge(i, (i + 1) % k);
                    break;
                case Pattern::two_k2:
                    g.remove_edge(0, 1);
                    g.remove_edge(2, 3);
                    break;
                case Pattern::p3_u_p2:
                    g.remove_edge(0, 1);
                    g.remove_edge(1, 2);
                    g.remove_edge(3, 4);
                    break;
            }
            return g;
        }
        case K::graph6: break;
    }
    throw InternalError("unhandled family");
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw InputError("canonical code supports order at most 8");
    std::vector<int> q(static_cast<std::size_t>(n));
    std::iota(q.begin(), q.end(), 0);
    const int pairs = n * (n - 1) / 2;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                code = (code << 1) | (g.adjacent(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)]) ? 1u : 0u);
            }
            // Prefix already larger than the best code: no completion can win.
            const int remaining = pairs - j * (j + 1) / 2;
            if (code > (best >> remaining)) {
                code = best;
                break;
            }
        }
        best = std::min(best, code);
    } while (std::next_permutation(q.begin(), q.end()));
    return best;
}

namespace {

Graph from_code(int n, std::uint64_t code) {
    Graph g(n);
    int k = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            --k;
            if ((code >> k) & 1u) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<Graph> enumerate_classes(int n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> codes;
    for (std::uint64_t labelled = 0; labelled < (std::uint64_t{1} << pairs); ++labelled) {
        codes.insert(canonical_code(from_code(n, labelled)));
    }
    std::vector<Graph> out;
    for (auto c : codes) out.push_back(from_code(n, c));
    return out;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 6) throw InputError("isomorphism-free enumeration supports order 1..6");
    std::filesystem::path cache;
    if (const char* dir = std::getenv("DRN_CACHE_DIR"); dir && *dir) {
        cache = std::filesystem::path(dir) / ("graphs-order" + std::to_string(n) + ".g6");
        std::ifstream in(cache);
        if (in) {
            std::vector<Graph> out;
            std::string line;
            try {
                while (std::getline(in, line)) {
                    if (!line.empty()) out.push_back(graph6_decode(line));
                }
                if (!out.empty()) return out;
            } catch (const InputError&) {
                // Corrupt cache: rebuild below.
            }
        }
    }
    auto out = enumerate_classes(n);
    if (!cache.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache.parent_path(), ec);
        const auto tmp = cache.string() + ".tmp";
        std::ofstream o(tmp);
        for (const auto& g : out) o << graph6_encode(g) << '\n';
        o.close();
        if (o) std::filesystem::rename(tmp, cache, ec);
    }
    return out;
}

}  // namespace drn
