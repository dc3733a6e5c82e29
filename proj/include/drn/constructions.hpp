#pragma once

#include <string>

#include "drn/graph.hpp"
#include "drn/repr.hpp"

namespace drn {

// A verified representation of `target` whose width equals the bound the
// construction certifies.
struct ConstructionResult {
    RepresentationMatrix matrix;
    int claimed_width;
    std::string tag;
    Graph target;
};

ConstructionResult build_complete(int n);
ConstructionResult build_complete_minus_k2(int n);
// One row-duplicated order-(n-1) square per complement edge.
ConstructionResult build_edge_blocks(const Graph& g);
// d must decompose complement(g) into at least two cliques.
ConstructionResult build_clique_decomposition(const Graph& g, const CliqueDecomposition& d);
ConstructionResult build_empty(int n);

enum class NearPattern { p3, two_k2, k3, p4, p3_u_p2 };
ConstructionResult build_nearly_complete(int n, NearPattern pattern);
ConstructionResult build_complete_minus_path(int n, int k);
ConstructionResult build_complete_minus_cycle(int n, int k);
ConstructionResult build_cycle(int n);
ConstructionResult build_path(int n);
ConstructionResult build_complete_minus_clique(int n, int r);

// Rows reordered so the matrix represents g; g must be isomorphic to r.target.
ConstructionResult align_to(const ConstructionResult& r, const Graph& g);
// Family dispatch; the result is aligned to build(spec).
ConstructionResult construct(const FamilySpec& spec);
// The width construct(spec) will report, evaluated without building.
int claimed_width(const FamilySpec& spec);
// Families g is isomorphic to that have a dedicated construction.
std::vector<FamilySpec> recognize(const Graph& g);

// min { t >= 1 : (t-1)! >= alpha }.
int intersecting_family_bound(int alpha);

struct BoundsReport {
    int lower = 0;
    std::string lower_source;  // clique-number | intersecting-family
    int upper = 0;
    std::string upper_source;
    std::string graph6;
};

BoundsReport bounds(const Graph& g);
// The construction behind bounds(g).upper, aligned to g.
ConstructionResult best_construction(const Graph& g);

// drnmat text with the tag and width in the comment header.
std::string serialize(const ConstructionResult& r);

}  // namespace drn
