#pragma once

// Independent reference implementations. None of these call into the
// library's search, verification or encoding code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;
using Adj = std::vector<std::vector<bool>>;

// d(k) = (k-1)(d(k-1)+d(k-2)), d(1)=0, d(2)=1.
inline std::uint64_t derangement_number(int k) {
    std::uint64_t a = 1;  // d(0)
    std::uint64_t b = 0;  // d(1)
    if (k == 0) return a;
    for (int i = 2; i <= k; ++i) {
        const std::uint64_t c = static_cast<std::uint64_t>(i - 1) * (a + b);
        a = b;
        b = c;
    }
    return b;
}

inline bool is_permutation_row(const std::vector<int>& r) {
    std::vector<int> s = r;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

inline bool all_differ(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) return false;
    }
    return true;
}

// Direct reading of the definition: distinct permutation rows, u ~ v iff
// the rows differ in every column.
inline bool represents(const Adj& adj, const Rows& rows) {
    const std::size_t n = adj.size();
    if (rows.size() != n) return false;
    for (const auto& r : rows) {
        if (!is_permutation_row(r) || r.size() != rows[0].size()) return false;
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rows[u] == rows[v]) return false;
            if (all_differ(rows[u], rows[v]) != static_cast<bool>(adj[u][v])) return false;
        }
    }
    return true;
}

inline bool is_latin(const Rows& rows) {
    const std::size_t n = rows.size();
    for (const auto& r : rows) {
        if (r.size() != n || !is_permutation_row(r)) return false;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::set<int> col;
        for (const auto& r : rows) col.insert(r[c]);
        if (col.size() != n) return false;
    }
    return true;
}

inline int clique_number(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if ((mask >> u & 1) && (mask >> v & 1) && !adj[u][v]) ok = false;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// graph6 straight from the format description: N(n) then the upper
// triangle column by column, six bits per byte, each byte + 63.
inline std::string graph6(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    std::string s(1, static_cast<char>(n + 63));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) bits.push_back(adj[i][j] ? 1 : 0);
    }
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + static_cast<std::size_t>(b)];
        s.push_back(static_cast<char>(v + 63));
    }
    return s;
}

inline Adj from_mask(int n, std::uint32_t mask) {
    Adj a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (mask >> bit & 1) a[u][v] = a[v][u] = true;
        }
    }
    return a;
}

// Smallest relabelled mask over all n! vertex orders.
inline std::uint32_t canonical_mask(const Adj& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::uint32_t best = ~0u;
    do {
        std::uint32_t m = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v, ++bit) {
                if (a[p[u]][p[v]]) m |= 1u << bit;
            }
        }
        best = std::min(best, m);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Every labelled graph of order n, deduplicated by brute-force relabelling.
inline std::vector<Adj> isomorphism_classes(int n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> seen;
    std::vector<Adj> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        const auto a = from_mask(n, mask);
        if (seen.insert(canonical_mask(a)).second) out.push_back(a);
    }
    return out;
}

inline bool isomorphic(const Adj& a, const Adj& b) {
    return a.size() == b.size() && canonical_mask(a) == canonical_mask(b);
}

}  // namespace oracle
