#include "drn/fixtures.hpp"

#include <charconv>

#include "drn/error.hpp"

namespace drn {

namespace {

struct Embedded {
    const char* group;
    const char* name;
    const char* text;
};

#include "embedded_matrices.inc"

Graph parse_edges(int n, std::string_view list) {
    Graph g(n);
    std::size_t i = 0;
    while (i < list.size()) {
        while (i < list.size() && list[i] == ' ') ++i;
        if (i == list.size()) break;
        auto j = list.find(' ', i);
        if (j == std::string_view::npos) j = list.size();
        const auto item = list.substr(i, j - i);
        const auto dash = item.find('-');
        int a = 0;
        int b = 0;
        if (dash == std::string_view::npos ||
            std::from_chars(item.data(), item.data() + dash, a).ec != std::errc() ||
            std::from_chars(item.data() + dash + 1, item.data() + item.size(), b).ec != std::errc()) {
            throw InputError("bad edge '" + std::string(item) + "'");
        }
        g.add_edge(a - 1, b - 1);
        i = j;
    }
    return g;
}

std::vector<StoredMatrix> load(std::string_view group) {
    std::vector<StoredMatrix> out;
    for (const auto& e : kEmbedded) {
        if (group == e.group) out.push_back(parse_stored_matrix(e.name, e.text));
    }
    return out;
}

}  // namespace

StoredMatrix parse_stored_matrix(std::string_view name, std::string_view text) {
    const auto m = read_matrix(text, {.allow_duplicate_rows = true});
    std::string graph;
    std::string status;
    std::vector<std::string> notes;
    std::string edge_list;
    bool have_edges = false;
    for (const auto& c : read_comments(text)) {
        auto field = [&](std::string_view key) -> const char* {
            return c.starts_with(key) ? c.c_str() + key.size() : nullptr;
        };
        if (auto v = field("graph: ")) graph = v;
        else if (auto v2 = field("status: ")) status = v2;
        else if (auto v3 = field("note: ")) notes.emplace_back(v3);
        else if (auto v4 = field("target-edges:")) {
            edge_list = v4;
            have_edges = true;
        }
    }
    if (!have_edges) throw InputError("stored matrix " + std::string(name) + " lacks target-edges");
    return StoredMatrix{std::string(name), graph, status, notes, parse_edges(m.rows(), edge_list), m, std::string(text)};
}

const std::vector<StoredMatrix>& transcribed_fixtures() {
    static const auto all = load("fixtures");
    return all;
}

const std::vector<StoredMatrix>& stored_witnesses() {
    static const auto all = load("witnesses");
    return all;
}

const StoredMatrix& stored_matrix(std::string_view name) {
    for (const auto* list : {&transcribed_fixtures(), &stored_witnesses()}) {
        for (const auto& s : *list) {
            if (s.name == name) return s;
        }
    }
    throw InputError("no stored matrix named '" + std::string(name) + "'");
}

}  // namespace drn
