#include "drn/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "drn/error.hpp"
#include "drn/fixtures.hpp"
#include "drn/latin.hpp"
#include "drn/perm.hpp"

namespace drn {

namespace {

Graph complete_minus(int n, std::initializer_list<Edge> missing) {
    Graph g = complement(Graph(n));
    for (const auto& e : missing) g.remove_edge(e.u, e.v);
    return g;
}

ConstructionResult certify(std::vector<Row> rows, int width, std::string tag, Graph target) {
    auto m = RepresentationMatrix::from_rows(rows);
    if (m.width() != width) {
        throw ConstructionDefect(tag + ": width " + std::to_string(m.width()) + " differs from claimed " +
                                 std::to_string(width));
    }
    const auto rep = verify(target, m);
    if (!rep.valid) {
        std::string why = tag + ": " + describe(rep.violations.front());
        if (rep.violations.size() > 1) why += " (+" + std::to_string(rep.violations.size() - 1) + " more)";
        throw ConstructionDefect(why);
    }
    return ConstructionResult{std::move(m), width, std::move(tag), std::move(target)};
}

ConstructionResult from_stored(const std::string& name, int width, const std::string& family) {
    const auto& s = stored_matrix(name);
    return certify(s.matrix.all_rows(), width, family + ":stored:" + name, s.target);
}

Row concat(const Row& a, const Row& b) {
    Row r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Row iota_row(int from, int to) {
    Row r;
    for (int x = from; x <= to; ++x) r.push_back(x);
    return r;
}

// False also when some row is not a permutation of its width.
bool represents(const Graph& g, const std::vector<Row>& rows) {
    for (const auto& r : rows) {
        auto sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != iota_row(1, static_cast<int>(r.size()))) return false;
    }
    return verify(g, RepresentationMatrix::from_rows(rows)).valid;
}

Row rotate_left(Row r, int by) {
    if (!r.empty()) std::rotate(r.begin(), r.begin() + (by % static_cast<int>(r.size())), r.end());
    return r;
}

// M_{i,j}: in row i+1, swap the symbols at columns j and j+1 (1-based, mod n).
void flip(std::vector<Row>& L, int i, int j) {
    const int n = static_cast<int>(L.size());
    auto& row = L[static_cast<std::size_t>(i % n)];
    std::swap(row[static_cast<std::size_t>((j - 1) % n)], row[static_cast<std::size_t>(j % n)]);
}

// Concatenates column blocks, each an n-row array.
std::vector<Row> hconcat(const std::vector<std::vector<Row>>& blocks, int n) {
    std::vector<Row> rows(static_cast<std::size_t>(n));
    for (const auto& b : blocks) {
        for (int i = 0; i < n; ++i) {
            rows[static_cast<std::size_t>(i)].insert(rows[static_cast<std::size_t>(i)].end(),
                                                     b[static_cast<std::size_t>(i)].begin(),
                                                     b[static_cast<std::size_t>(i)].end());
        }
    }
    return rows;
}

std::vector<Row> duplicated_block(int n, const std::vector<int>& S, int offset) {
    const int order = n - static_cast<int>(S.size()) + 1;
    const auto L = LatinSquare(shift_symbols(circulant(order), offset));
    const auto D = duplicate_rows(L, S, n);
    std::vector<Row> out;
    for (int i = 0; i < n; ++i) out.push_back(D.row(i));
    return out;
}

int empty_k(int n) {
    int k = 1;
    while (factorial(k) < static_cast<std::uint64_t>(n)) ++k;
    return k;
}

}  // namespace

ConstructionResult build_complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    return certify(circulant(n).all_rows(), n, "complete:latin-square", complement(Graph(n)));
}

ConstructionResult build_complete_minus_k2(int n) {
    if (n < 4) throw InputError("K_n-K_2 construction needs n >= 4");
    const Row r1 = iota_row(1, n);
    const Row r2 = concat({2, 1}, rotate_left(iota_row(3, n), 1));
    auto rows = prescribe_rows(std::vector<Row>{r1, r2}, n).all_rows();
    rows[1] = concat({1, 2}, rotate_left(iota_row(3, n), 1));
    return certify(std::move(rows), n, "complete-minus-edge:row-replacement", complete_minus(n, {{0, 1}}));
}

ConstructionResult build_edge_blocks(const Graph& g) {
    const int n = g.order();
    const auto missing = edges(complement(g));
    if (missing.size() < 2) throw InputError("construction requires at least two complement edges");
    std::vector<std::vector<Row>> blocks;
    int offset = 0;
    for (const auto& e : missing) {
        blocks.push_back(duplicated_block(n, {e.u, e.v}, offset));
        offset += n - 1;
    }
    return certify(hconcat(blocks, n), offset, "edge-blocks", g);
}

ConstructionResult build_clique_decomposition(const Graph& g, const CliqueDecomposition& d) {
    const int n = g.order();
    if (d.cliques.size() < 2) throw InputError("clique decomposition needs at least two cliques");
    if (!is_clique_decomposition(complement(g), d)) throw InputError("not a clique decomposition of the complement");
    std::vector<std::vector<Row>> blocks;
    int offset = 0;
    for (auto c : d.cliques) {
        std::sort(c.begin(), c.end());
        blocks.push_back(duplicated_block(n, c, offset));
        offset += n - static_cast<int>(c.size()) + 1;
    }
    return certify(hconcat(blocks, n), offset, "clique-decomposition", g);
}

ConstructionResult build_empty(int n) {
    if (n < 1) throw InputError("empty graph needs n >= 1");
    const int k = empty_k(n);
    const auto perms = enumerate_permutations(k);
    std::vector<Row> rows;
    for (int i = 0; i < n; ++i) rows.push_back(concat({k + 1}, perms[static_cast<std::size_t>(i)].one_based()));
    return certify(std::move(rows), k + 1, "empty:leading-column", Graph(n));
}

ConstructionResult build_nearly_complete(int n, NearPattern pattern) {
    const int m = n - 1;
    switch (pattern) {
        case NearPattern::p3: {
            if (n < 3) throw InputError("K_n-P_3 needs n >= 3");
            if (n == 3) return from_stored("k3-minus-p3", 3, "nearly-complete:P3");
            if (n == 4) return from_stored("k4-minus-p3", 4, "nearly-complete:P3");
            const Row r1 = iota_row(1, m);
            const Row r2 = concat({2, 1, m}, iota_row(3, m - 1));
            auto rows = prescribe_rows(std::vector<Row>{r1, r2}, m).all_rows();
            rows.push_back(concat({1, 2, m}, iota_row(3, m - 1)));
            return certify(std::move(rows), m, "nearly-complete:P3:general",
                           complete_minus(n, {{0, n - 1}, {1, n - 1}}));
        }
        case NearPattern::two_k2: {
            if (n < 4) throw InputError("K_n-2K_2 needs n >= 4");
            if (n <= 6) return from_stored("k" + std::to_string(n) + "-minus-2k2", n, "nearly-complete:2K2");
            const Row tail = iota_row(4, m);
            const std::vector<Row> pinned = {concat({1, 2, 3}, tail), concat({3, 1, 2}, rotate_left(tail, 1)),
                                             concat({2, 3, 1}, rotate_left(tail, 2))};
            auto rows = prescribe_rows(pinned, m).all_rows();
            rows[1] = concat({1, 2, 3}, rotate_left(tail, 1));
            rows.push_back(concat({3, 1, 2}, rotate_left(tail, 2)));
            return certify(std::move(rows), m, "nearly-complete:2K2:general",
                           complete_minus(n, {{0, 1}, {2, n - 1}}));
        }
        case NearPattern::k3: {
            if (n < 4) throw InputError("K_n-K_3 needs n >= 4");
            if (n == 5) return from_stored("k5-minus-k3-corrected", 5, "nearly-complete:K3");
            if (n <= 6) return from_stored("k" + std::to_string(n) + "-minus-k3", n, "nearly-complete:K3");
            const Row tail = iota_row(5, m);
            const std::vector<Row> pinned = {concat({1, 2, 3, 4}, tail), concat({2, 1, 4, 3}, rotate_left(tail, 1))};
            auto rows = prescribe_rows(pinned, m).all_rows();
            rows[1] = concat({1, 2, 4, 3}, rotate_left(tail, 1));
            rows.push_back(concat({2, 1, 3, 4}, rotate_left(tail, 1)));
            return certify(std::move(rows), m, "nearly-complete:K3:general",
                           complete_minus(n, {{0, 1}, {0, n - 1}, {1, n - 1}}));
        }
        case NearPattern::p4: {
            if (n < 4) throw InputError("K_n-P_4 needs n >= 4");
            if (n == 4) return from_stored("k4-minus-p4", 4, "nearly-complete:P4");
            if (n <= 6) return from_stored("k" + std::to_string(n) + "-minus-p4", m, "nearly-complete:P4");
            const Row tail = iota_row(4, m);
            const std::vector<Row> pinned = {concat({1, 2, 3}, tail), concat({2, 3, 1}, rotate_left(tail, 1)),
                                             concat({3, 1, 2}, rotate_left(tail, 2))};
            auto rows = prescribe_rows(pinned, m).all_rows();
            rows[1] = concat({1, 2, 3}, rotate_left(tail, 1));
            rows.push_back(concat({3, 1, 2}, rotate_left(tail, 1)));
            return certify(std::move(rows), m, "nearly-complete:P4:general",
                           complete_minus(n, {{0, 1}, {1, n - 1}, {2, n - 1}}));
        }
        case NearPattern::p3_u_p2: {
            if (n < 5) throw InputError("K_n-(P_3 u P_2) needs n >= 5");
            if (n <= 6) return from_stored("k" + std::to_string(n) + "-minus-p3up2", m, "nearly-complete:P3uP2");
            const Row tail = iota_row(3, m);
            const Row r3 = concat(concat({3, 4}, iota_row(5, m)), {1, 2});
            const Row r4 = concat(concat({4, 3}, iota_row(6, m)), {1, 2, 5});
            const std::vector<Row> pinned = {concat({1, 2}, tail), concat({2, 1}, rotate_left(tail, 1)), r3, r4};
            auto rows = prescribe_rows(pinned, m).all_rows();
            rows[1] = concat({1, 2}, rotate_left(tail, 1));
            rows.push_back(concat({3, 4}, Row(r4.begin() + 2, r4.end())));
            return certify(std::move(rows), m, "nearly-complete:P3uP2:general",
                           complete_minus(n, {{0, 1}, {2, n - 1}, {3, n - 1}}));
        }
    }
    throw InternalError("unhandled pattern");
}

ConstructionResult build_complete_minus_path(int n, int k) {
    if (k < 5 || n < k) throw InputError("K_n-P_k flip construction needs n >= k >= 5");
    const Graph target = build(parse_family("K" + std::to_string(n) + "-P" + std::to_string(k)));
    // The listed schedule M_{1,1}, M_{2,3}, ..., M_{k-2,2k-5}; then the
    // variant with one flip per path edge.
    for (const int flips : {k - 2, k - 1}) {
        auto L = circulant(n).all_rows();
        for (int i = 1; i <= flips; ++i) flip(L, i, 2 * i - 1);
        if (represents(target, L)) {
            return certify(std::move(L), n, flips == k - 2 ? "complete-minus-path:flips" : "complete-minus-path:flips-per-edge",
                           target);
        }
    }
    throw ConstructionDefect("K_n-P_k: neither flip schedule verifies for n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
}

ConstructionResult build_complete_minus_cycle(int n, int k) {
    if (k < 4 || n < k) throw InputError("K_n-C_k construction needs n >= k >= 4");
    const Graph target = build(parse_family("K" + std::to_string(n) + "-C" + std::to_string(k)));
    if (n == k) {
        auto L = circulant(n).all_rows();
        for (int i = 1; i <= n - 1; i += 2) flip(L, i, i);
        if (represents(target, L)) return certify(std::move(L), n, "complete-minus-cycle:flips", target);
        // Odd n: the pairs of flips leave v_n v_1 in place; one more flip
        // in the last row at column 1 removes it.
        flip(L, n - 1, 1);
        return certify(std::move(L), n, "complete-minus-cycle:flips-closing", target);
    }
    if (k % 2 == 0) {
        const int t = k / 2;
        const auto A = circulant(t).all_rows();
        const auto B = shift_symbols(circulant(n - t), t).all_rows();
        std::vector<Row> L;
        for (int i = 0; i < t; ++i) L.push_back(concat(A[static_cast<std::size_t>(i)], B[static_cast<std::size_t>(i)]));
        const auto C = extend_avoiding(L, iota_row(1, n), n - 2 * t);
        if (!C) throw ConstructionDefect("K_n-C_k: Hall extension failed");
        std::vector<Row> rows = {concat(A[0], B[static_cast<std::size_t>(t - 1)])};
        for (int i = 0; i < t; ++i) {
            rows.push_back(concat(A[static_cast<std::size_t>(i)], B[static_cast<std::size_t>(i)]));
            if (i + 1 < t) rows.push_back(concat(A[static_cast<std::size_t>(i + 1)], B[static_cast<std::size_t>(i)]));
        }
        rows.insert(rows.end(), C->begin(), C->end());
        return certify(std::move(rows), n, "complete-minus-cycle:interleaved-blocks", target);
    }
    if (k < 5) throw InputError("K_n-C_k odd case needs k >= 5");
    const int t = (k + 1) / 2;
    std::vector<Row> A;
    for (int i = 0; i < t; ++i) {
        Row r;
        for (int j = 0; j < t; ++j) r.push_back(((j - i) % t + t) % t + 1);
        A.push_back(std::move(r));
    }
    const auto B = shift_symbols(circulant(n - t), t).all_rows();
    Row first = concat(A[0], B[0]);
    for (int& x : first) {
        if (x == 1) x = 2;
        else if (x == 2) x = t + 1;
        else if (x == t + 1) x = 1;
    }
    std::vector<Row> rows = {first};
    for (int i = 0; i + 1 < t; ++i) {
        rows.push_back(concat(A[static_cast<std::size_t>(i)], B[static_cast<std::size_t>(i + 1)]));
        rows.push_back(concat(A[static_cast<std::size_t>(i + 1)], B[static_cast<std::size_t>(i + 1)]));
    }
    const auto C = extend_avoiding(rows, iota_row(1, n), n - k);
    if (!C) throw ConstructionDefect("K_n-C_k: avoiding extension failed");
    rows.insert(rows.end(), C->begin(), C->end());
    return certify(std::move(rows), n, "complete-minus-cycle:cycled-blocks", target);
}

namespace {

// Row i of N (1-based, i < k): identity except N(i) = i+1, N(i+1) = k+1.
Row shifted_row(int k, int i) {
    Row r;
    for (int j = 1; j <= k; ++j) r.push_back(j == i ? i + 1 : j == i + 1 ? k + 1 : j);
    return r;
}

// Vertices 1..2k of C_{2k} (or P_{2k} with `path`): odd vertices
// [k+1 | M_i], even vertices [i | N_i].
std::vector<Row> even_blocks(int k, bool path) {
    const auto M = idempotent(k).all_rows();
    std::vector<Row> N;
    for (int i = 1; i < k; ++i) N.push_back(shifted_row(k, i));
    if (path) {
        N.push_back(concat(iota_row(1, k - 1), {k + 1}));
    } else {
        N.push_back(concat(concat({k + 1}, iota_row(2, k - 1)), {1}));
    }
    std::vector<Row> rows;
    for (int i = 0; i < k; ++i) {
        rows.push_back(concat({k + 1}, M[static_cast<std::size_t>(i)]));
        rows.push_back(concat({i + 1}, N[static_cast<std::size_t>(i)]));
    }
    return rows;
}

std::optional<std::vector<Row>> odd_blocks(int k, const Graph& target) {
    auto square = idempotent_with_cyclic_transversal(k);
    if (!square) square = idempotent(k);
    const auto M = square->all_rows();
    const int n = 2 * k + 1;
    std::vector<Row> rows(static_cast<std::size_t>(n));
    for (int i = 1; i <= k; ++i) rows[static_cast<std::size_t>(2 * i - 1)] = concat({k + 2, k + 1}, M[static_cast<std::size_t>(i - 1)]);
    for (int i = 1; i < k; ++i) rows[static_cast<std::size_t>(2 * i)] = concat({i, k + 2}, shifted_row(k, i));
    rows[0] = concat({k + 1, 1, k + 2}, iota_row(2, k));
    Row w1 = {M[static_cast<std::size_t>(k - 1)][0], k + 2, k + 1};
    for (int i = 0; i + 1 < k; ++i) w1.push_back(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)]);
    rows.back() = w1;
    if (represents(target, rows)) return rows;
    // The W1 row alone is in doubt: search it over S_{k+2}.
    if (k + 2 > 9) return std::nullopt;
    Row p = iota_row(1, k + 2);
    do {
        rows.back() = p;
        if (represents(target, rows)) return rows;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

}  // namespace

ConstructionResult build_cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    if (n == 4) throw ConstructionDefect("C4 has no derangement 3-representation; its minimum width is 4");
    const Graph target = build(parse_family("C" + std::to_string(n)));
    const int k = n / 2;
    const int width = n / 2 + (n % 2 ? 2 : 1);
    if (k != 2) {
        if (n % 2 == 0) {
            auto rows = even_blocks(k, false);
            if (represents(target, rows)) return certify(std::move(rows), width, "cycle:idempotent-blocks", target);
        } else if (auto rows = odd_blocks(k, target)) {
            return certify(std::move(*rows), width, "cycle:idempotent-blocks", target);
        }
    }
    const std::string name = "cycle-" + std::to_string(n);
    for (const auto& s : stored_witnesses()) {
        if (s.name == name) return from_stored(name, width, "cycle");
    }
    throw ConstructionDefect("cycle blocks do not verify for n=" + std::to_string(n) + " and no stored witness exists");
}

ConstructionResult build_path(int n) {
    if (n < 5) throw InputError("path construction needs n >= 5");
    const Graph target = build(parse_family("P" + std::to_string(n)));
    const int k = (n + 1) / 2;
    auto rows = even_blocks(k, true);
    rows.resize(static_cast<std::size_t>(n));
    if (represents(target, rows)) return certify(std::move(rows), k + 1, "path:idempotent-blocks", target);
    const std::string name = "path-" + std::to_string(n);
    for (const auto& s : stored_witnesses()) {
        if (s.name == name) return from_stored(name, k + 1, "path");
    }
    throw ConstructionDefect("path blocks do not verify for n=" + std::to_string(n) + " and no stored witness exists");
}

ConstructionResult build_complete_minus_clique(int n, int r) {
    if (r <= 1 || r >= n) throw InputError("K_n-K_r needs 1 < r < n");
    if (n < 2 * r) {
        const auto big = build_complete_minus_clique(2 * r, r);
        auto rows = big.matrix.all_rows();
        rows.resize(static_cast<std::size_t>(n));
        std::vector<int> keep(static_cast<std::size_t>(n));
        std::iota(keep.begin(), keep.end(), 0);
        return certify(std::move(rows), 2 * r, "complete-minus-clique:induced-from-2r",
                       induced_subgraph(big.target, keep));
    }
    const auto A = circulant(r).all_rows();
    const auto B = shift_symbols(circulant(n - r), r).all_rows();
    std::vector<Row> L1;
    for (int i = 0; i < r; ++i) L1.push_back(concat(A[static_cast<std::size_t>(i)], B[static_cast<std::size_t>(i)]));
    auto rows = hall_extend(LatinRectangle::from_rows(L1)).all_rows();
    for (int i = 1; i < r; ++i) std::copy(A[0].begin(), A[0].end(), rows[static_cast<std::size_t>(i)].begin());
    return certify(std::move(rows), n, "complete-minus-clique:hall",
                   build(parse_family("K" + std::to_string(n) + "-K" + std::to_string(r))));
}

ConstructionResult align_to(const ConstructionResult& r, const Graph& g) {
    const auto iso = find_isomorphism(r.target, g);
    if (!iso) throw InternalError("construction target is not isomorphic to the requested graph (" + r.tag + ")");
    auto m = permute_rows(r.matrix, *iso);
    if (!verify(g, m).valid) throw InternalError("alignment broke the representation (" + r.tag + ")");
    return ConstructionResult{std::move(m), r.claimed_width, r.tag, g};
}

namespace {

ConstructionResult construct_unaligned(const FamilySpec& f) {
    using K = FamilySpec::Kind;
    const int n = f.n;
    switch (f.kind) {
        case K::complete: return build_complete(n);
        case K::empty: return build_empty(n);
        case K::cycle:
            if (n == 4) return build_nearly_complete(4, NearPattern::two_k2);
            return build_cycle(n);
        case K::path:
            if (n <= 2) return build_complete(n);
            if (n == 3) return from_stored("p3", 4, "path");
            if (n == 4) return from_stored("k4-minus-p4", 4, "path");
            return build_path(n);
        case K::complete_bipartite:
        case K::graph6: return best_construction(build(f));
        case K::complete_minus: {
            const int k = f.pattern_order;
            switch (f.pattern) {
                case Pattern::clique:
                    if (k == n) return build_empty(n);
                    if (k == 2) {
                        if (n == 3) return from_stored("p3", 4, "complete-minus-edge");
                        return build_complete_minus_k2(n);
                    }
                    if (k == 3) return build_nearly_complete(n, NearPattern::k3);
                    return build_complete_minus_clique(n, k);
                case Pattern::path:
                    if (k == 2) return construct_unaligned(parse_family("K" + std::to_string(n) + "-K2"));
                    if (k == 3) return build_nearly_complete(n, NearPattern::p3);
                    if (k == 4) return build_nearly_complete(n, NearPattern::p4);
                    return build_complete_minus_path(n, k);
                case Pattern::cycle:
                    if (k == 3) return construct_unaligned(parse_family("K" + std::to_string(n) + "-K3"));
                    return build_complete_minus_cycle(n, k);
                case Pattern::two_k2: return build_nearly_complete(n, NearPattern::two_k2);
                case Pattern::p3_u_p2: return build_nearly_complete(n, NearPattern::p3_u_p2);
            }
        }
    }
    throw InternalError("unhandled family");
}

}  // namespace

ConstructionResult construct(const FamilySpec& spec) {
    return align_to(construct_unaligned(spec), build(spec));
}

int claimed_width(const FamilySpec& f) {
    using K = FamilySpec::Kind;
    const int n = f.n;
    switch (f.kind) {
        case K::complete: return n;
        case K::empty: return empty_k(n) + 1;
        case K::cycle: return n == 4 ? 4 : n / 2 + (n % 2 ? 2 : 1);
        case K::path: return n <= 2 ? n : n <= 4 ? 4 : (n + 1) / 2 + 1;
        case K::complete_bipartite:
        case K::graph6: return bounds(build(f)).upper;
        case K::complete_minus: {
            const int k = f.pattern_order;
            switch (f.pattern) {
                case Pattern::clique:
                    if (k == n) return empty_k(n) + 1;
                    if (k == 2) return n == 3 ? 4 : n;
                    if (k == 3) return n <= 6 ? n : n - 1;
                    return std::max(n, 2 * k);
                case Pattern::path:
                    if (k == 2) return n == 2 ? 3 : n == 3 ? 4 : n;
                    if (k == 3) return n <= 4 ? n : n - 1;
                    if (k == 4) return n == 4 ? 4 : n - 1;
                    return n;
                case Pattern::cycle:
                    if (k == 3) return n == 3 ? empty_k(3) + 1 : n <= 6 ? n : n - 1;
                    return n;
                case Pattern::two_k2: return n <= 6 ? n : n - 1;
                case Pattern::p3_u_p2: return n - 1;
            }
        }
    }
    throw InternalError("unhandled family");
}

namespace {

bool is_path_graph(const Graph& g) {
    const int n = g.order();
    if (g.edge_count() != n - 1 || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return false;
    }
    return true;
}

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

bool is_clique(const Graph& h) { return h.edge_count() == h.order() * (h.order() - 1) / 2; }

}  // namespace

std::vector<FamilySpec> recognize(const Graph& g) {
    using K = FamilySpec::Kind;
    const int n = g.order();
    std::vector<FamilySpec> out;
    auto add = [&](K kind, int a, Pattern p = Pattern::clique, int k = 0) {
        FamilySpec f;
        f.kind = kind;
        f.n = a;
        f.pattern = p;
        f.pattern_order = k;
        out.push_back(f);
    };
    if (is_clique(g)) add(K::complete, n);
    if (g.edge_count() == 0) add(K::empty, n);
    if (is_cycle_graph(g) && n != 4) add(K::cycle, n);
    if (is_path_graph(g)) add(K::path, n);
    const Graph c = complement(g);
    std::vector<Graph> parts;
    for (const auto& comp : components(c)) {
        if (comp.size() >= 2) parts.push_back(induced_subgraph(c, comp));
    }
    if (parts.size() == 1) {
        const Graph& h = parts[0];
        const int k = h.order();
        if (is_clique(h)) add(K::complete_minus, n, Pattern::clique, k);
        if (is_path_graph(h) && k >= 3) add(K::complete_minus, n, Pattern::path, k);
        if (is_cycle_graph(h) && k >= 4) add(K::complete_minus, n, Pattern::cycle, k);
    } else if (parts.size() == 2) {
        const int a = parts[0].order();
        const int b = parts[1].order();
        const bool a_edge = a == 2;
        const bool b_edge = b == 2;
        if (a_edge && b_edge) add(K::complete_minus, n, Pattern::two_k2, 4);
        const bool a_p3 = a == 3 && is_path_graph(parts[0]);
        const bool b_p3 = b == 3 && is_path_graph(parts[1]);
        if ((a_p3 && b_edge) || (b_p3 && a_edge)) add(K::complete_minus, n, Pattern::p3_u_p2, 5);
    }
    return out;
}

int intersecting_family_bound(int alpha) {
    int t = 1;
    while (factorial(t - 1) < static_cast<std::uint64_t>(alpha)) ++t;
    return t;
}

namespace {

struct Candidate {
    std::string source;
    int width;
    int kind;  // 0 family, 1 clique decomposition, 2 edge blocks
    FamilySpec spec;
};

Candidate best_candidate(const Graph& g) {
    std::vector<Candidate> cands;
    for (const auto& f : recognize(g)) cands.push_back({"family:" + to_string(f), claimed_width(f), 0, f});
    const Graph c = complement(g);
    const int n = g.order();
    if (c.edge_count() >= 1) {
        const auto d = greedy_clique_decomposition(c);
        if (d.cliques.size() >= 2) {
            int w = 0;
            for (const auto& cl : d.cliques) w += n + 1 - static_cast<int>(cl.size());
            cands.push_back({"clique-decomposition", w, 1, {}});
        }
    }
    if (c.edge_count() >= 2) cands.push_back({"edge-blocks", (n - 1) * c.edge_count(), 2, {}});
    if (cands.empty()) throw InternalError("no construction applies");
    auto best = cands.front();
    for (const auto& x : cands) {
        if (x.width < best.width) best = x;
    }
    return best;
}

}  // namespace

BoundsReport bounds(const Graph& g) {
    BoundsReport r;
    const int omega = clique_number(g);
    const int alpha_bound = intersecting_family_bound(independence_number(g));
    r.lower = std::max(omega, alpha_bound);
    r.lower_source = omega >= alpha_bound ? "clique-number" : "intersecting-family";
    const auto best = best_candidate(g);
    r.upper = best.width;
    r.upper_source = best.source;
    r.graph6 = g.order() <= 62 ? graph6_encode(g) : "";
    if (r.lower > r.upper) throw InternalError("lower bound exceeds upper bound");
    return r;
}

ConstructionResult best_construction(const Graph& g) {
    const auto best = best_candidate(g);
    switch (best.kind) {
        case 0: return align_to(construct_unaligned(best.spec), g);
        case 1: return build_clique_decomposition(g, greedy_clique_decomposition(complement(g)));
        default: return build_edge_blocks(g);
    }
}

std::string serialize(const ConstructionResult& r) {
    const std::vector<std::string> header = {"construction: " + r.tag,
                                             "claimed width: " + std::to_string(r.claimed_width),
                                             "graph6: " + (r.target.order() <= 62 ? graph6_encode(r.target) : "")};
    return write_matrix(r.matrix, header);
}

}  // namespace drn
