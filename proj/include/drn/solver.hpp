#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drn/graph.hpp"
#include "drn/repr.hpp"

namespace drn {

inline constexpr int kMaxSearchWidth = 8;
inline constexpr int kMaxSolveOrder = 32;

struct SearchLimits {
    std::uint64_t node_limit = 1'000'000'000;
    std::chrono::milliseconds time_limit = std::chrono::minutes(15);
    int workers = 0;  // 0: OpenMP default
};

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct SearchStats {
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

struct KResult {
    int k = 0;
    Verdict verdict = Verdict::unknown;
    std::optional<RepresentationMatrix> witness;  // set iff yes
    SearchStats stats;
};

// Backtracking embedding of g into Cay(S_k, D_k). The first processed vertex
// is pinned to the identity; the second ranges over the lexicographically
// least member of each conjugacy class. Workers split the second vertex's
// candidates; the witness is the one found under the least candidate, so it
// does not depend on the worker count.
KResult is_k_representable(const Graph& g, int k, const SearchLimits& limits = {});
// Same search on the calling thread only.
KResult is_k_representable_serial(const Graph& g, int k, const SearchLimits& limits = {});

// Exhaustive over all injective maps V(g) -> S_k; n <= 4, k <= 4.
bool brute_force_oracle(const Graph& g, int k);

// Search order: highest degree first, then most already-placed neighbours,
// ties by higher degree and lower index.
std::vector<int> search_order(const Graph& g);

struct SolveLimits {
    SearchLimits search;
    int max_k = kMaxSearchWidth;
};

struct SolveResult {
    int drn = 0;
    RepresentationMatrix witness{1, 1, {1}};
    std::string witness_source;  // search | construction:<tag>
    int lower_bound_used = 0;
    int upper_bound = 0;
    std::vector<int> ks_refuted;
    std::vector<KResult> per_k;  // widths searched, ascending; witnesses dropped
};

// Iterates k from the lower bound; width upper is certified by the best
// construction without search. Throws BudgetExhausted when a width is left
// undecided.
SolveResult solve_drn(const Graph& g, const SolveLimits& limits = {});

struct SurveyResult {
    int order = 0;  // common order of the corpus, 0 if mixed
    int k = 0;
    int total = 0;
    int not_representable = 0;
    std::vector<std::string> refuted;  // graph6
    std::uint64_t nodes = 0;
};

// Throws BudgetExhausted if any verdict is unknown.
SurveyResult survey(std::span<const Graph> corpus, int k, const SearchLimits& limits = {});

}  // namespace drn
