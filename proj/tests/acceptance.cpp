// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a
// gating criterion fails, except for failures listed in kRecordedErrata.

#include <chrono>
#include <cstdio>
#include <functional>
#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "drn/constructions.hpp"
#include "drn/fixtures.hpp"
#include "drn/latin.hpp"
#include "drn/solver.hpp"
#include "support.hpp"

using namespace drn;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kCrit1Seconds = 1.0;
constexpr double kCrit2Seconds = 30.0;
constexpr double kCrit3Seconds = 600.0;
constexpr double kCrit3ExtSeconds = 3600.0;
constexpr double kCrit4Seconds = 600.0;
constexpr double kCrit5Seconds = 600.0;
constexpr double kCrit6Seconds = 900.0;
constexpr double kCrit8Seconds = 300.0;
constexpr double kCrit9Seconds = 600.0;
constexpr double kCrit11Seconds = 1200.0;
constexpr int kSymmetryTriples = 1000;

struct Outcome {
    bool pass = false;
    std::string detail;
    bool recorded_erratum = false;
};

struct Criterion {
    std::string id;
    bool gating;
    std::function<Outcome()> run;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

std::string S(const std::string& a, int x) { return a + std::to_string(x); }

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Outcome crit1() {
    const auto t = Clock::now();
    const auto r = solve_drn(family("P3"));
    const double s = seconds_since(t);
    const bool ok = r.drn == 4 && r.ks_refuted == std::vector<int>{3} && s < kCrit1Seconds;
    return {ok, "drn(P3)=" + std::to_string(r.drn) + ", refuted {" + join(r.ks_refuted) + "}, " + fmt_seconds(s)};
}

Outcome crit2() {
    const auto t = Clock::now();
    std::vector<int> got;
    bool searched = true;
    for (int n = 1; n <= 6; ++n) {
        const auto g = family(S("K", n).c_str());
        got.push_back(solve_drn(g).drn);
        searched = searched && is_k_representable(g, n).verdict == Verdict::yes;
        if (n > 1) searched = searched && is_k_representable(g, n - 1).verdict == Verdict::no;
    }
    const double s = seconds_since(t);
    const bool ok = got == std::vector<int>{1, 2, 3, 4, 5, 6} && searched && s < kCrit2Seconds;
    return {ok, "drn(K1..K6) = " + join(got) + (searched ? ", search confirms width n and refutes n-1" : "") + ", " +
                    fmt_seconds(s)};
}

// Tables are compared entry by entry; mismatches listed as n:got/want.
struct TableCheck {
    std::string mismatches;
    std::vector<int> bad_params;
    std::vector<int> values;
};

TableCheck check_table(const char* letter, int from, const std::vector<int>& want) {
    TableCheck tc;
    for (std::size_t i = 0; i < want.size(); ++i) {
        const int n = from + static_cast<int>(i);
        const int d = solve_drn(family(S(letter, n).c_str())).drn;
        tc.values.push_back(d);
        if (d != want[i]) {
            tc.mismatches += " " + std::to_string(n) + ":" + std::to_string(d) + "/" + std::to_string(want[i]);
            tc.bad_params.push_back(n);
        }
    }
    return tc;
}

Outcome crit3() {
    const auto t = Clock::now();
    const auto tc = check_table("C", 3, {3, 4, 4, 4, 5, 5, 5, 5, 5, 5});
    const double s = seconds_since(t);
    Outcome o;
    o.pass = tc.bad_params.empty() && s <= kCrit3Seconds;
    o.detail = "drn(C3..C12) = " + join(tc.values) + ", " + fmt_seconds(s);
    if (!tc.bad_params.empty()) o.detail += "; mismatches (n:got/want):" + tc.mismatches;
    // Recorded erratum: the table lists 5 at n=8, but C8 has a verified
    // 4-representation. Accepted only if that is the sole mismatch and the
    // witness passes the independent check.
    if (!o.pass && tc.bad_params == std::vector<int>{8} && s <= kCrit3Seconds) {
        const auto c8 = family("C8");
        const auto r = is_k_representable(c8, 4);
        if (r.verdict == Verdict::yes && oracle_represents(c8, *r.witness)) {
            o.recorded_erratum = true;
            o.detail += "; C8 4-representation re-verified by the oracle (table value 5 is an erratum)";
        }
    }
    return o;
}

Outcome crit3_extended() {
    const auto t = Clock::now();
    const auto tc = check_table("C", 13, {6, 6, 6, 6});
    const double s = seconds_since(t);
    Outcome o{tc.bad_params.empty() && s <= kCrit3ExtSeconds, "drn(C13..C16) = " + join(tc.values) + ", " + fmt_seconds(s)};
    if (!tc.bad_params.empty()) {
        o.detail += "; mismatches (n:got/want):" + tc.mismatches;
        bool witnesses_ok = true;
        for (int n : tc.bad_params) {
            const auto g = family(S("C", n).c_str());
            const auto r = solve_drn(g);
            witnesses_ok = witnesses_ok && oracle_represents(g, r.witness);
        }
        if (witnesses_ok) o.detail += "; every smaller-width witness re-verified by the oracle";
    }
    return o;
}

Outcome crit4() {
    const auto t = Clock::now();
    const auto tc = check_table("P", 2, {2, 4, 4, 4, 4, 4, 4, 5, 5});
    const double s = seconds_since(t);
    Outcome o{tc.bad_params.empty() && s <= kCrit4Seconds, "drn(P2..P10) = " + join(tc.values) + ", " + fmt_seconds(s)};
    if (!tc.bad_params.empty()) o.detail += "; mismatches:" + tc.mismatches;
    return o;
}

Outcome crit5() {
    const auto t = Clock::now();
    const std::map<std::pair<int, int>, int> want{{{1, 1}, 2}, {{1, 2}, 4}, {{2, 2}, 4}, {{1, 3}, 4}, {{2, 3}, 4},
                                                  {{3, 3}, 5}, {{1, 4}, 5}, {{2, 4}, 5}, {{3, 4}, 5}, {{4, 4}, 5}};
    std::string bad;
    for (const auto& [rs, d] : want) {
        const auto g = family((S("K", rs.first) + S(",", rs.second)).c_str());
        const int got = solve_drn(g).drn;
        if (got != d) bad += " K" + std::to_string(rs.first) + "," + std::to_string(rs.second) + ":" + std::to_string(got);
    }
    const double s = seconds_since(t);
    return {bad.empty() && s <= kCrit5Seconds,
            "K_{r,s}, r <= s <= 4: " + std::string(bad.empty() ? "all 10 match" : "mismatches" + bad) + ", " +
                fmt_seconds(s)};
}

Outcome crit6() {
    const auto t = Clock::now();
    std::vector<int> counts;
    std::vector<int> sizes;
    bool dedupe_agrees = true;
    for (int i = 1; i <= 5; ++i) {
        const auto corpus = nonisomorphic_graphs(i);
        const auto classes = oracle::isomorphism_classes(i);
        dedupe_agrees = dedupe_agrees && classes.size() == corpus.size();
        std::set<std::uint32_t> ours;
        for (const auto& g : corpus) ours.insert(oracle::canonical_mask(adjacency(g)));
        dedupe_agrees = dedupe_agrees && ours.size() == classes.size();
        sizes.push_back(static_cast<int>(corpus.size()));
        counts.push_back(survey(corpus, i).not_representable);
    }
    const double s = seconds_since(t);
    const bool ok = counts == std::vector<int>{0, 1, 2, 0, 0} && sizes == std::vector<int>{1, 2, 4, 11, 34} &&
                    dedupe_agrees && s <= kCrit6Seconds;
    return {ok, "Cay^not(1..5) = " + join(counts) + ", corpus sizes " + join(sizes) +
                    (dedupe_agrees ? " (brute-force dedupe agrees)" : " (dedupe DISAGREES)") + ", " + fmt_seconds(s)};
}

Outcome crit7() {
    int valid = 0;
    int triaged = 0;
    std::string unexplained;
    for (const auto& f : transcribed_fixtures()) {
        const bool ok = verify(f.target, f.matrix).valid && oracle_represents(f.target, f.matrix);
        if (ok && f.status != "erratum") {
            ++valid;
        } else if (!ok && f.status == "erratum" && !f.notes.empty()) {
            ++triaged;
        } else {
            unexplained += " " + f.name;
        }
    }
    return {unexplained.empty() && valid + triaged == 24,
            std::to_string(valid) + " verify, " + std::to_string(triaged) + " triaged as errata" +
                (unexplained.empty() ? ", none unexplained" : "; unexplained:" + unexplained)};
}

Outcome crit8() {
    const auto t = Clock::now();
    int checked = 0;
    std::string failures;
    auto check = [&](const std::string& label, const std::function<ConstructionResult()>& make, const Graph& want,
                     int width) {
        ++checked;
        try {
            const auto r = make();
            const bool ok = r.matrix.width() == width && oracle_represents(r.target, r.matrix) &&
                            find_isomorphism(r.target, want).has_value() && bounds(r.target).lower <= width;
            if (!ok) failures += " " + label;
        } catch (const std::exception& e) {
            failures += " " + label + "(" + e.what() + ")";
        }
    };
    for (int n = 1; n <= 12; ++n) check(S("K", n), [n] { return build_complete(n); }, family(S("K", n).c_str()), n);
    for (int n = 4; n <= 12; ++n) {
        check(S("K", n) + "-K2", [n] { return build_complete_minus_k2(n); }, family((S("K", n) + "-K2").c_str()), n);
    }
    for (int i = 1; i <= 5; ++i) {
        for (const auto& g : nonisomorphic_graphs(i)) {
            const auto c = complement(g);
            const int q = c.edge_count();
            if (q < 2) continue;
            const int n = g.order();
            check("blocks:" + graph6_encode(g), [&g] { return build_edge_blocks(g); }, g, (n - 1) * q);
            const auto d = trivial_edge_decomposition(c);
            check("cliques:" + graph6_encode(g), [&g, &d] { return build_clique_decomposition(g, d); }, g,
                  q * (n + 1) - 2 * q);
        }
    }
    auto empty_width = [](int n) {
        int k = 1;
        std::uint64_t f = 1;
        while (f < static_cast<std::uint64_t>(n)) f *= static_cast<std::uint64_t>(++k);
        return k + 1;
    };
    for (int n = 1; n <= 24; ++n) check(S("E", n), [n] { return build_empty(n); }, Graph(n), empty_width(n));
    struct Near {
        NearPattern p;
        const char* suffix;
        int from;
        std::function<int(int)> width;
    };
    const std::vector<Near> near{
        {NearPattern::p3, "-P3", 3, [](int n) { return n <= 4 ? n : n - 1; }},
        {NearPattern::two_k2, "-2K2", 4, [](int n) { return n <= 6 ? n : n - 1; }},
        {NearPattern::k3, "-K3", 4, [](int n) { return n <= 6 ? n : n - 1; }},
        {NearPattern::p4, "-P4", 4, [](int n) { return n == 4 ? 4 : n - 1; }},
        {NearPattern::p3_u_p2, "-P3uP2", 5, [](int n) { return n - 1; }},
    };
    for (const auto& x : near) {
        for (int n = x.from; n <= 12; ++n) {
            const auto label = S("K", n) + x.suffix;
            check(label, [&x, n] { return build_nearly_complete(n, x.p); }, family(label.c_str()), x.width(n));
        }
    }
    for (int n = 5; n <= 12; ++n) {
        for (int k = 5; k <= n; ++k) {
            const auto label = S("K", n) + S("-P", k);
            check(label, [n, k] { return build_complete_minus_path(n, k); }, family(label.c_str()), n);
        }
    }
    for (int n = 4; n <= 12; ++n) {
        for (int k = 4; k <= n; ++k) {
            const auto label = S("K", n) + S("-C", k);
            check(label, [n, k] { return build_complete_minus_cycle(n, k); }, family(label.c_str()), n);
        }
    }
    for (int n = 3; n <= 40; ++n) {
        // C4 is covered by the K4-2K2 construction; the cycle formula does
        // not apply there (see criterion 8b).
        if (n != 4) {
            const int w = n % 2 ? (n - 1) / 2 + 2 : n / 2 + 1;
            check(S("C", n), [n] { return build_cycle(n); }, family(S("C", n).c_str()), w);
        }
        if (n >= 5) check(S("P", n), [n] { return build_path(n); }, family(S("P", n).c_str()), (n + 1) / 2 + 1);
    }
    for (int n = 3; n <= 12; ++n) {
        for (int r = 2; r < n; ++r) {
            const auto label = S("K", n) + S("-K", r);
            check(label, [n, r] { return build_complete_minus_clique(n, r); }, family(label.c_str()), std::max(n, 2 * r));
        }
    }
    const double s = seconds_since(t);
    return {failures.empty() && s <= kCrit8Seconds,
            std::to_string(checked) + " constructions checked, " +
                (failures.empty() ? std::string("0 failures") : "failures:" + failures) + ", " + fmt_seconds(s)};
}

Outcome crit8_c4() {
    const bool refuted = is_k_representable(family("C4"), 3).verdict == Verdict::no;
    const auto r = construct(parse_family("C4"));
    const bool built = r.matrix.width() == 4 && oracle_represents(family("C4"), r.matrix);
    return {refuted && built, std::string("C4 at width 3: ") + (refuted ? "refuted" : "NOT refuted") +
                                  "; width-4 construction " + (built ? "verifies" : "fails")};
}

Outcome crit9() {
    const auto t = Clock::now();
    int cases = 0;
    int disagreements = 0;
    for (int i = 1; i <= 4; ++i) {
        for (const auto& g : nonisomorphic_graphs(i)) {
            for (int k = 1; k <= 4; ++k) {
                ++cases;
                const auto r = is_k_representable(g, k);
                const bool yes = r.verdict == Verdict::yes && oracle_represents(g, *r.witness);
                if (r.verdict == Verdict::unknown || yes != brute_force_oracle(g, k)) ++disagreements;
            }
        }
    }
    const double s = seconds_since(t);
    return {disagreements == 0 && s <= kCrit9Seconds,
            std::to_string(cases) + " (graph, k) cases, " + std::to_string(disagreements) + " disagreements, " +
                fmt_seconds(s)};
}

Outcome crit10() {
    std::mt19937_64 rng(10);
    int violations = 0;
    int valid = 0;
    for (int trial = 0; trial < kSymmetryTriples; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const int n = 1 + static_cast<int>(rng() % 7);
        std::vector<Row> rows;
        for (int i = 0; i < n; ++i) {
            Row r(static_cast<std::size_t>(k));
            std::iota(r.begin(), r.end(), 1);
            std::shuffle(r.begin(), r.end(), rng);
            rows.push_back(r);
        }
        const auto m = RepresentationMatrix::from_rows(rows);
        Graph g = represented_graph(m);
        if (trial % 2 && n >= 2) {
            const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            const int v = (u + 1) % n;
            if (g.adjacent(u, v)) g.remove_edge(u, v);
            else g.add_edge(u, v);
        }
        std::vector<int> tv(static_cast<std::size_t>(k));
        std::iota(tv.begin(), tv.end(), 0);
        std::shuffle(tv.begin(), tv.end(), rng);
        const auto tp = Permutation::from_zero_based(tv);
        const bool base = verify(g, m).valid;
        valid += base;
        if (verify(g, normalize(m)).valid != base || verify(g, permute_columns(m, tp)).valid != base ||
            verify(g, relabel_symbols(m, tp)).valid != base) {
            ++violations;
        }
    }
    return {violations == 0, std::to_string(kSymmetryTriples) + " triples (" + std::to_string(valid) + " valid), " +
                                 std::to_string(violations) + " violations"};
}

Outcome crit11() {
    const auto t = Clock::now();
    const std::vector<std::pair<const char*, int>> want{{"K5-2K2", 5}, {"K6-2K2", 6}, {"K5-K3", 5},
                                                        {"K6-K3", 6},  {"K4-P4", 4},  {"K5-P3", 4}};
    std::string detail;
    bool ok = true;
    for (const auto& [name, d] : want) {
        const auto g = family(name);
        const auto r = solve_drn(g);
        // The value below drn must be refuted by exhaustive search.
        const bool refuted = d == 1 || is_k_representable(g, d - 1).verdict == Verdict::no;
        ok = ok && r.drn == d && refuted;
        detail += std::string(detail.empty() ? "" : ", ") + name + "=" + std::to_string(r.drn);
    }
    const double s = seconds_since(t);
    return {ok && s <= kCrit11Seconds, detail + ", " + fmt_seconds(s)};
}

Outcome crit12() {
    auto key = [](const Graph& g) { return std::pair(g.order(), oracle::canonical_mask(adjacency(g))); };
    const std::set<std::pair<int, std::uint32_t>> excluded{key(Graph(2)), key(Graph(3)), key(family("P3"))};
    int checked = 0;
    std::string over;
    for (int i = 1; i <= 5; ++i) {
        for (const auto& g : nonisomorphic_graphs(i)) {
            if (excluded.count(key(g))) continue;
            ++checked;
            const int d = solve_drn(g).drn;
            if (d > i) over += " " + graph6_encode(g) + ":" + std::to_string(d);
        }
    }
    return {over.empty(), std::to_string(checked) + " graphs of order <= 5 outside {E2,E3,P3}: " +
                              (over.empty() ? std::string("all have drn <= order") : "exceed order:" + over)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1", true, crit1},   {"2", true, crit2},     {"3", true, crit3},   {"3-ext", false, crit3_extended},
        {"4", true, crit4},   {"5", true, crit5},     {"6", true, crit6},   {"7", true, crit7},
        {"8", true, crit8},   {"8b", true, crit8_c4}, {"9", true, crit9},   {"10", true, crit10},
        {"11", true, crit11}, {"12", false, crit12},
    };
    int gating_failures = 0;
    int errata = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::string tag = c.gating ? "" : " [non-gating]";
        if (!o.pass && o.recorded_erratum) tag += " [recorded erratum]";
        std::printf("%s criterion %-5s %s%s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), o.detail.c_str(), tag.c_str());
        std::fflush(stdout);
        if (!o.pass && c.gating) (o.recorded_erratum ? errata : gating_failures)++;
    }
    std::printf("summary: %d gating failure(s), %d recorded erratum failure(s)\n", gating_failures, errata);
    return gating_failures == 0 ? 0 : 1;
}
