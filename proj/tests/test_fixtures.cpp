#include <doctest.h>

#include <map>

#include "drn/error.hpp"
#include "drn/fixtures.hpp"
#include "drn/solver.hpp"
#include "support.hpp"

using namespace drn;

namespace {

Graph fork_graph() {
    const std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {2, 4}};
    return from_edges(5, es);
}

// Isomorphism class each stored matrix is meant to represent.
Graph stated(const std::string& name) {
    static const std::map<std::string, std::string> grammar{
        {"p3", "P3"},
        {"k3-minus-p3", "K3-P3"},
        {"k4-minus-p3", "K4-P3"},
        {"k4-minus-2k2", "K4-2K2"},
        {"k5-minus-2k2", "K5-2K2"},
        {"k6-minus-2k2", "K6-2K2"},
        {"k4-minus-k3", "K4-K3"},
        {"k5-minus-k3", "K5-K3"},
        {"k5-minus-k3-corrected", "K5-K3"},
        {"k6-minus-k3", "K6-K3"},
        {"k4-minus-p4", "K4-P4"},
        {"k5-minus-p4", "K5-P4"},
        {"k6-minus-p4", "K6-P4"},
        {"k5-minus-p3up2", "K5-P3uP2"},
        {"k6-minus-p3up2", "K6-P3uP2"},
        {"k8-minus-p6", "K8-P6"},
        {"c10", "C10"},
        {"c11", "C11"},
        {"p9", "P9"},
        {"p10", "P10"},
        {"order6-k6-minus-k3", "K6-K3"},
        {"order6-k6-minus-2k2", "K6-2K2"},
        {"order6-k6-minus-k2", "K6-K2"},
    };
    if (name == "fork") return fork_graph();
    return build(parse_family(grammar.at(name)));
}

}  // namespace

TEST_CASE("every transcribed matrix is accounted for") {
    const auto& all = transcribed_fixtures();
    CHECK(all.size() == 24);
    for (const auto& s : all) {
        CAPTURE(s.name);
        const auto target_edges_ok = find_isomorphism(s.target, stated(s.name)).has_value();
        const bool valid = verify(s.target, s.matrix).valid;
        CHECK(valid == oracle_represents(s.target, s.matrix));
        if (s.status == "valid" || s.status == "corrected") {
            CHECK(valid);
            CHECK(target_edges_ok);
        } else if (s.status == "relabelled") {
            // Valid for the graph the rows actually represent, which is the
            // stated graph under another labelling.
            CHECK(valid);
            CHECK(target_edges_ok);
            CHECK_FALSE(verify(stated(s.name), s.matrix).valid);
        } else {
            REQUIRE(s.status == "erratum");
            CHECK_FALSE(valid);
            // No labelling of the stated graph is represented either.
            CHECK_FALSE(find_isomorphism(represented_graph(s.matrix), stated(s.name)).has_value());
            CHECK_FALSE(s.notes.empty());
        }
    }
}

TEST_CASE("the corrected K5-K3 matrix differs from the display by one swap") {
    const auto a = stored_matrix("k5-minus-k3").matrix.all_rows();
    const auto b = stored_matrix("k5-minus-k3-corrected").matrix.all_rows();
    int diffs = 0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a[r].size(); ++c) diffs += a[r][c] != b[r][c];
    }
    CHECK(diffs == 2);
}

TEST_CASE("the fork erratum is a transcription-level defect: the fork is 4-representable") {
    const auto r = is_k_representable(fork_graph(), 4);
    CHECK(r.verdict == Verdict::yes);
    CHECK(is_k_representable(fork_graph(), 3).verdict == Verdict::no);
}

TEST_CASE("stored witnesses verify at their family's width") {
    const auto& ws = stored_witnesses();
    CHECK(ws.size() == 8);
    for (const auto& w : ws) {
        CAPTURE(w.name);
        CHECK(w.status == "witness");
        CHECK(verify(w.target, w.matrix).valid);
        CHECK(oracle_represents(w.target, w.matrix));
        CHECK(w.target == build(parse_family(w.graph)));
    }
}

TEST_CASE("stored text parses back to the same matrix") {
    for (const auto& s : transcribed_fixtures()) {
        const auto again = parse_stored_matrix(s.name, s.text);
        CHECK(again.matrix == s.matrix);
        CHECK(again.target == s.target);
    }
    CHECK_THROWS_AS(stored_matrix("no-such-matrix"), InputError);
}
