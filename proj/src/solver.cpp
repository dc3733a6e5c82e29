#include "drn/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <memory>
#include <mutex>

#include "drn/constructions.hpp"
#include "drn/error.hpp"
#include "drn/latin.hpp"
#include "drn/perm.hpp"

namespace drn {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
using Word = std::uint64_t;

// S_k in lexicographic order; image j of permutation x sits in nibble j of
// packed[x].
struct Cayley {
    int k = 0;
    int size = 0;
    int words = 0;
    std::vector<std::uint32_t> packed;
    std::vector<Row> perms;
    // k <= 7 only: row(x) is the neighbourhood of x, nonrow(x) its
    // complement without x.
    std::vector<Word> rows;
    std::vector<Word> nonrows;
    std::vector<int> class_reps;  // ascending

    bool precomputed() const { return !rows.empty(); }
};

inline bool disagree(std::uint32_t a, std::uint32_t b, std::uint32_t full) {
    const std::uint32_t v = a ^ b;
    return ((v | v >> 1 | v >> 2 | v >> 3) & 0x11111111u) == full;
}

std::uint32_t nibble_mask(int k) {
    std::uint32_t m = 0;
    for (int j = 0; j < k; ++j) m |= 1u << (4 * j);
    return m;
}

void fill_row(const Cayley& c, int x, Word* row) {
    std::fill(row, row + c.words, Word{0});
    const std::uint32_t full = nibble_mask(c.k);
    const std::uint32_t px = c.packed[static_cast<std::size_t>(x)];
    for (int y = 0; y < c.size; ++y) {
        if (disagree(px, c.packed[static_cast<std::size_t>(y)], full)) row[y >> 6] |= Word{1} << (y & 63);
    }
}

void complement_row(const Cayley& c, int x, const Word* row, Word* out) {
    for (int w = 0; w < c.words; ++w) out[w] = ~row[w];
    const int tail = c.size & 63;
    if (tail) out[c.words - 1] &= (Word{1} << tail) - 1;
    out[x >> 6] &= ~(Word{1} << (x & 63));
}

std::vector<int> cycle_type(const Row& p) {
    std::vector<int> type;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        if (len) type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

std::unique_ptr<Cayley> make_cayley(int k) {
    auto c = std::make_unique<Cayley>();
    c->k = k;
    for (const auto& p : enumerate_permutations(k)) {
        c->perms.push_back(p.zero_based());
        std::uint32_t v = 0;
        for (int j = 0; j < k; ++j) v |= static_cast<std::uint32_t>(p[j]) << (4 * j);
        c->packed.push_back(v);
    }
    c->size = static_cast<int>(c->perms.size());
    c->words = (c->size + 63) / 64;
    std::vector<std::vector<int>> types_seen;
    for (int x = 0; x < c->size; ++x) {
        auto t = cycle_type(c->perms[static_cast<std::size_t>(x)]);
        if (std::find(types_seen.begin(), types_seen.end(), t) == types_seen.end()) {
            types_seen.push_back(std::move(t));
            c->class_reps.push_back(x);
        }
    }
    if (k <= 7) {
        const auto W = static_cast<std::size_t>(c->words);
        c->rows.assign(static_cast<std::size_t>(c->size) * W, 0);
        c->nonrows.assign(static_cast<std::size_t>(c->size) * W, 0);
        for (int x = 0; x < c->size; ++x) {
            fill_row(*c, x, &c->rows[static_cast<std::size_t>(x) * W]);
            complement_row(*c, x, &c->rows[static_cast<std::size_t>(x) * W], &c->nonrows[static_cast<std::size_t>(x) * W]);
        }
    }
    return c;
}

const Cayley& cayley(int k) {
    static std::array<std::unique_ptr<Cayley>, kMaxSearchWidth + 1> cache;
    static std::array<std::once_flag, kMaxSearchWidth + 1> once;
    std::call_once(once[static_cast<std::size_t>(k)], [k] { cache[static_cast<std::size_t>(k)] = make_cayley(k); });
    return *cache[static_cast<std::size_t>(k)];
}

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::uint64_t node_limit = 0;
    Clock::time_point deadline;
};

struct Problem {
    const Cayley& cay;
    int n;
    std::vector<int> order;
    std::vector<std::vector<char>> linked;  // linked[p][q]: order[p] ~ order[q]
};

// Domains are indexed by search position. Level L holds the domains of
// positions L..n-1 given the placements of positions 0..L-1.
class Worker {
public:
    Worker(const Problem& pr, Shared& sh)
        : pr_(pr), sh_(sh), W_(static_cast<std::size_t>(pr.cay.words)),
          dom_(static_cast<std::size_t>(pr.n + 1) * static_cast<std::size_t>(pr.n) * W_, 0),
          assign_(static_cast<std::size_t>(pr.n), -1), row_(W_), nonrow_(W_) {}

    Word* dom(int level, int pos) {
        return &dom_[(static_cast<std::size_t>(level) * static_cast<std::size_t>(pr_.n) + static_cast<std::size_t>(pos)) * W_];
    }

    void init_full() {
        const int tail = pr_.cay.size & 63;
        for (int p = 0; p < pr_.n; ++p) {
            Word* d = dom(0, p);
            std::fill(d, d + W_, ~Word{0});
            if (tail) d[W_ - 1] = (Word{1} << tail) - 1;
        }
    }

    void copy_level(Worker& from, int level) {
        for (int p = level; p < pr_.n; ++p) {
            const Word* src = from.dom(level, p);
            std::copy(src, src + W_, dom(level, p));
        }
        for (int p = 0; p < level; ++p) assign_[static_cast<std::size_t>(p)] = from.assign_[static_cast<std::size_t>(p)];
    }

    // Places position `level` at x and filters into level+1; false on a wipe-out.
    bool place(int level, int x) {
        assign_[static_cast<std::size_t>(level)] = x;
        const Word* row;
        const Word* nonrow;
        if (pr_.cay.precomputed()) {
            row = &pr_.cay.rows[static_cast<std::size_t>(x) * W_];
            nonrow = &pr_.cay.nonrows[static_cast<std::size_t>(x) * W_];
        } else {
            fill_row(pr_.cay, x, row_.data());
            complement_row(pr_.cay, x, row_.data(), nonrow_.data());
            row = row_.data();
            nonrow = nonrow_.data();
        }
        for (int p = level + 1; p < pr_.n; ++p) {
            const Word* mask = pr_.linked[static_cast<std::size_t>(level)][static_cast<std::size_t>(p)] ? row : nonrow;
            const Word* src = dom(level, p);
            Word* dst = dom(level + 1, p);
            Word any = 0;
            for (std::size_t w = 0; w < W_; ++w) any |= (dst[w] = src[w] & mask[w]);
            if (!any) return false;
        }
        return true;
    }

    // True when a full embedding extends the current placements.
    bool dfs(int level, int tag) {
        if (level == pr_.n) return true;
        const Word* d = dom(level, level);
        for (std::size_t w = 0; w < W_; ++w) {
            for (Word bits = d[w]; bits; bits &= bits - 1) {
                if (stop(tag)) return false;
                const int x = static_cast<int>(w * 64) + std::countr_zero(bits);
                if (place(level, x) && dfs(level + 1, tag)) return true;
            }
        }
        return false;
    }

    bool stop(int tag) {
        if (++local_ >= kFlush) flush();
        return sh_.exhausted.load(std::memory_order_relaxed) || sh_.best.load(std::memory_order_relaxed) < tag;
    }

    void flush() {
        const auto total = sh_.nodes.fetch_add(local_, std::memory_order_relaxed) + local_;
        local_ = 0;
        if (total >= sh_.node_limit || Clock::now() >= sh_.deadline) sh_.exhausted.store(true);
    }

    const std::vector<int>& assignment() const { return assign_; }

private:
    static constexpr std::uint64_t kFlush = 1024;
    const Problem& pr_;
    Shared& sh_;
    std::size_t W_;
    std::vector<Word> dom_;
    std::vector<int> assign_;
    std::vector<Word> row_;
    std::vector<Word> nonrow_;
    std::uint64_t local_ = 0;
};

RepresentationMatrix witness_matrix(const Problem& pr, const std::vector<int>& assign) {
    std::vector<Row> rows(static_cast<std::size_t>(pr.n));
    for (int p = 0; p < pr.n; ++p) {
        Row r = pr.cay.perms[static_cast<std::size_t>(assign[static_cast<std::size_t>(p)])];
        for (int& v : r) ++v;
        rows[static_cast<std::size_t>(pr.order[static_cast<std::size_t>(p)])] = std::move(r);
    }
    return RepresentationMatrix::from_rows(rows);
}

KResult run_search(const Graph& g, int k, const SearchLimits& limits, int workers) {
    const auto start = Clock::now();
    if (k < 1) throw InputError("width must be at least 1");
    if (k > kMaxSearchWidth) throw InputError("width cap exceeded");
    if (limits.node_limit == 0 || limits.time_limit.count() <= 0) throw InputError("limits must be positive");
    KResult res;
    res.k = k;
    const int n = g.order();
    auto finish = [&](Verdict v) {
        res.verdict = v;
        res.stats.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (res.witness && !verify(g, *res.witness).valid) throw InternalError("search witness does not verify");
        return res;
    };
    if (static_cast<std::uint64_t>(n) > factorial(k)) return finish(Verdict::no);

    auto order = search_order(g);
    std::vector<std::vector<char>> linked(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            linked[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                g.adjacent(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(q)]);
        }
    }
    const Problem pr{cayley(k), n, std::move(order), std::move(linked)};

    Shared sh;
    sh.node_limit = limits.node_limit;
    sh.deadline = start + limits.time_limit;

    Worker root(pr, sh);
    root.init_full();
    sh.nodes = 1;
    if (!root.place(0, 0)) return finish(Verdict::no);
    if (n == 1) {
        res.witness = witness_matrix(pr, root.assignment());
        return finish(Verdict::yes);
    }
    std::vector<int> cands;
    const Word* d1 = root.dom(1, 1);
    for (int x : pr.cay.class_reps) {
        if ((d1[x >> 6] >> (x & 63)) & 1u) cands.push_back(x);
    }
    const int m = static_cast<int>(cands.size());
    std::vector<std::vector<int>> found(static_cast<std::size_t>(m));

#pragma omp parallel num_threads(workers)
    {
        Worker w(pr, sh);
#pragma omp for schedule(dynamic, 1)
        for (int i = 0; i < m; ++i) {
            if (sh.best.load() < i || sh.exhausted.load()) continue;
            w.copy_level(root, 1);
            if (w.place(1, cands[static_cast<std::size_t>(i)]) && w.dfs(2, i)) {
                found[static_cast<std::size_t>(i)] = w.assignment();
                int cur = sh.best.load();
                while (i < cur && !sh.best.compare_exchange_weak(cur, i)) {
                }
            }
        }
        w.flush();
    }

    res.stats.nodes = sh.nodes.load();
    const int best = sh.best.load();
    if (best < m) {
        res.witness = witness_matrix(pr, found[static_cast<std::size_t>(best)]);
        return finish(Verdict::yes);
    }
    return finish(sh.exhausted.load() ? Verdict::unknown : Verdict::no);
}

}  // namespace

std::vector<int> search_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> links(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            const auto key = [&](int u) { return std::pair{links[static_cast<std::size_t>(u)], g.degree(u)}; };
            if (key(v) > key(best)) best = v;
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = 1;
        for (int v = 0; v < n; ++v) {
            if (g.adjacent(best, v)) ++links[static_cast<std::size_t>(v)];
        }
    }
    return order;
}

KResult is_k_representable(const Graph& g, int k, const SearchLimits& limits) {
    return run_search(g, k, limits, limits.workers > 0 ? limits.workers : omp_get_max_threads());
}

KResult is_k_representable_serial(const Graph& g, int k, const SearchLimits& limits) {
    return run_search(g, k, limits, 1);
}

SolveResult solve_drn(const Graph& g, const SolveLimits& limits) {
    if (g.order() > kMaxSolveOrder) throw InputError("order exceeds solver cap of " + std::to_string(kMaxSolveOrder));
    if (limits.max_k < 1 || limits.max_k > kMaxSearchWidth) throw InputError("width cap exceeded");
    const auto b = bounds(g);
    SolveResult r;
    r.lower_bound_used = b.lower;
    r.upper_bound = b.upper;
    for (int k = b.lower; k < b.upper; ++k) {
        if (k > limits.max_k) {
            throw BudgetExhausted("widths " + std::to_string(k) + ".." + std::to_string(b.upper - 1) +
                                  " exceed max-k " + std::to_string(limits.max_k) + "; drn is in [" +
                                  std::to_string(k) + ".." + std::to_string(b.upper) + "]");
        }
        auto kr = is_k_representable(g, k, limits.search);
        if (kr.verdict == Verdict::unknown) {
            std::string refuted;
            for (int j : r.ks_refuted) refuted += (refuted.empty() ? "" : ",") + std::to_string(j);
            throw BudgetExhausted("budget exhausted at width " + std::to_string(k) + " after " +
                                  std::to_string(kr.stats.nodes) + " nodes; refuted widths {" + refuted +
                                  "}; drn is in [" + std::to_string(k) + ".." + std::to_string(b.upper) + "]");
        }
        if (kr.verdict == Verdict::yes) {
            r.drn = k;
            r.witness = std::move(*kr.witness);
            r.witness_source = "search";
            kr.witness.reset();
            r.per_k.push_back(std::move(kr));
            return r;
        }
        r.ks_refuted.push_back(k);
        r.per_k.push_back(std::move(kr));
    }
    const auto c = best_construction(g);
    r.drn = b.upper;
    r.witness = c.matrix;
    r.witness_source = "construction:" + c.tag;
    return r;
}

SurveyResult survey(std::span<const Graph> corpus, int k, const SearchLimits& limits) {
    SurveyResult s;
    s.k = k;
    s.order = corpus.empty() ? 0 : corpus.front().order();
    int unknown = 0;
    for (const auto& g : corpus) {
        if (g.order() != s.order) s.order = 0;
        const auto r = is_k_representable(g, k, limits);
        ++s.total;
        s.nodes += r.stats.nodes;
        if (r.verdict == Verdict::no) {
            ++s.not_representable;
            s.refuted.push_back(graph6_encode(g));
        } else if (r.verdict == Verdict::unknown) {
            ++unknown;
        }
    }
    if (unknown) {
        throw BudgetExhausted(std::to_string(unknown) + " of " + std::to_string(s.total) +
                              " graphs undecided at width " + std::to_string(k));
    }
    return s;
}

}  // namespace drn
