#pragma once

#include "drn/graph.hpp"
#include "drn/repr.hpp"
#include "oracles.hpp"

inline oracle::Adj adjacency(const drn::Graph& g) {
    oracle::Adj a(static_cast<std::size_t>(g.order()), std::vector<bool>(static_cast<std::size_t>(g.order()), false));
    for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v);
    }
    return a;
}

inline drn::Graph to_graph(const oracle::Adj& a) {
    drn::Graph g(static_cast<int>(a.size()));
    for (std::size_t u = 0; u < a.size(); ++u) {
        for (std::size_t v = u + 1; v < a.size(); ++v) {
            if (a[u][v]) g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return g;
}

inline bool oracle_represents(const drn::Graph& g, const drn::RepresentationMatrix& m) {
    return oracle::represents(adjacency(g), m.all_rows());
}

inline drn::Graph family(const char* text) { return drn::build(drn::parse_family(text)); }
