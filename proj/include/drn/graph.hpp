#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drn {

// Simple undirected graph on at most 64 vertices, one neighbourhood word per
// vertex. Vertices are 0-based in this API and 1-based in every text form.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Graph(int n);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }
    std::uint64_t neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    int edge_count() const;
    std::uint64_t all_vertices() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<std::uint64_t> rows_;
};

struct Edge {
    int u;
    int v;
};

std::vector<Edge> edges(const Graph& g);
Graph from_edges(int n, std::span<const Edge> es);
Graph complement(const Graph& g);
// vs keeps its order: vertex i of the result is vs[i] of g.
Graph induced_subgraph(const Graph& g, std::span<const int> vs);
// Vertex v of g becomes vertex map[v] of the result.
Graph relabel(const Graph& g, std::span<const int> map);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

int clique_number(const Graph& g);
int independence_number(const Graph& g);
// Vertex set of one maximum clique, ascending.
std::vector<int> maximum_clique(const Graph& g);

// Edge partition into cliques of size >= 2, vertex sets ascending.
struct CliqueDecomposition {
    std::vector<std::vector<int>> cliques;
};

CliqueDecomposition trivial_edge_decomposition(const Graph& g);
// Repeatedly removes the edges of a maximum clique of what remains.
CliqueDecomposition greedy_clique_decomposition(const Graph& g);
bool is_clique_decomposition(const Graph& host, const CliqueDecomposition& d);

// map[v] = image in b of vertex v of a, if a and b are isomorphic.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

enum class Pattern { clique, path, cycle, two_k2, p3_u_p2 };

struct FamilySpec {
    enum class Kind { complete, path, cycle, empty, complete_bipartite, complete_minus, graph6 };
    Kind kind = Kind::complete;
    int n = 1;
    int s = 0;  // second part size of K_{n,s}
    Pattern pattern = Pattern::clique;
    int pattern_order = 0;  // r of K(r), k of P(k)/C(k)
    std::string graph6;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// "K5", "P7", "C10", "E6", "K3,4", "K6-K3", "K9-P4", "K8-C5", "K6-2K2",
// "K6-P3uP2", "g6:Bw".
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Missing edges of the complete-minus patterns, 1-based vertex names:
//   K(r): all pairs in v1..vr      P(k): v_i v_{i+1}, i < k
//   C(k): P(k) plus v_k v_1        2K2: v1v2, v3v4      P3uP2: v1v2, v2v3, v4v5
Graph build(const FamilySpec& spec);

// All isomorphism classes of order n <= 6, one labelled representative each,
// in increasing order of canonical code. Served from DRN_CACHE_DIR when set.
std::vector<Graph> nonisomorphic_graphs(int n);
// Minimum upper-triangle code over all relabellings; n <= 8.
std::uint64_t canonical_code(const Graph& g);

}  // namespace drn
