#include "drn/repr.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "drn/error.hpp"

namespace drn {

namespace {

bool is_permutation_row(std::span<const int> row) {
    std::vector<char> seen(row.size() + 1, 0);
    for (int x : row) {
        if (x < 1 || x > static_cast<int>(row.size()) || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

}  // namespace

RepresentationMatrix::RepresentationMatrix(int n, int k, std::vector<int> cells)
    : n_(n), k_(k), cells_(std::move(cells)) {
    if (n < 1 || k < 1) throw InputError("matrix needs at least one row and one column");
    if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(k)) {
        throw InputError("matrix cell count mismatch");
    }
    for (int r = 0; r < n; ++r) {
        if (!is_permutation_row(row(r))) throw InputError("row " + std::to_string(r + 1) + " is not a permutation");
    }
}

RepresentationMatrix RepresentationMatrix::from_rows(std::span<const std::vector<int>> rows) {
    if (rows.empty()) throw InputError("matrix needs at least one row");
    std::vector<int> cells;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw InputError("row " + std::to_string(r + 1) + " has wrong length");
        cells.insert(cells.end(), rows[r].begin(), rows[r].end());
    }
    return RepresentationMatrix(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), std::move(cells));
}

RepresentationMatrix RepresentationMatrix::from_permutations(std::span<const Permutation> rows) {
    std::vector<std::vector<int>> r;
    for (const auto& p : rows) r.push_back(p.one_based());
    return from_rows(r);
}

std::vector<std::vector<int>> RepresentationMatrix::all_rows() const {
    std::vector<std::vector<int>> out;
    for (int r = 0; r < n_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

VerifyReport verify(const Graph& g, const RepresentationMatrix& m) {
    if (g.order() != m.rows()) {
        throw InputError("matrix has " + std::to_string(m.rows()) + " rows but the graph has " +
                         std::to_string(g.order()) + " vertices");
    }
    VerifyReport rep;
    for (int a = 0; a < m.rows(); ++a) {
        for (int b = a + 1; b < m.rows(); ++b) {
            int first_agree = -1;
            int agree = 0;
            for (int c = 0; c < m.width(); ++c) {
                if (m.at(a, c) == m.at(b, c)) {
                    if (first_agree < 0) first_agree = c;
                    ++agree;
                }
            }
            if (agree == m.width()) {
                rep.violations.push_back({Violation::Kind::duplicate_rows, a, b, -1});
            } else if (g.adjacent(a, b) && agree > 0) {
                rep.violations.push_back({Violation::Kind::adjacent_but_agree, a, b, first_agree});
            } else if (!g.adjacent(a, b) && agree == 0) {
                rep.violations.push_back({Violation::Kind::non_adjacent_but_disagree, a, b, -1});
            }
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

std::string describe(const Violation& v) {
    const std::string pair = std::to_string(v.row_a + 1) + "," + std::to_string(v.row_b + 1);
    switch (v.kind) {
        case Violation::Kind::duplicate_rows: return "duplicate rows " + pair;
        case Violation::Kind::adjacent_but_agree:
            return "rows " + pair + " adjacent but agree at position " + std::to_string(v.position + 1);
        case Violation::Kind::non_adjacent_but_disagree: return "rows " + pair + " non-adjacent but disagree everywhere";
    }
    return "?";
}

Graph represented_graph(const RepresentationMatrix& m) {
    Graph g(m.rows());
    for (int a = 0; a < m.rows(); ++a) {
        for (int b = a + 1; b < m.rows(); ++b) {
            bool disjoint = true;
            for (int c = 0; c < m.width() && disjoint; ++c) disjoint = m.at(a, c) != m.at(b, c);
            if (disjoint) g.add_edge(a, b);
        }
    }
    return g;
}

RepresentationMatrix normalize(const RepresentationMatrix& m) {
    const Permutation t = inverse(m.permutation(0));
    std::vector<Permutation> rows;
    for (int r = 0; r < m.rows(); ++r) rows.push_back(compose(t, m.permutation(r)));
    return RepresentationMatrix::from_permutations(rows);
}

RepresentationMatrix permute_columns(const RepresentationMatrix& m, const Permutation& t) {
    if (t.degree() != m.width()) throw InputError("degree mismatch");
    std::vector<int> cells;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.width(); ++c) cells.push_back(m.at(r, t[c]));
    }
    return RepresentationMatrix(m.rows(), m.width(), std::move(cells));
}

RepresentationMatrix relabel_symbols(const RepresentationMatrix& m, const Permutation& t) {
    if (t.degree() != m.width()) throw InputError("degree mismatch");
    std::vector<int> cells;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.width(); ++c) cells.push_back(t[m.at(r, c) - 1] + 1);
    }
    return RepresentationMatrix(m.rows(), m.width(), std::move(cells));
}

RepresentationMatrix permute_rows(const RepresentationMatrix& m, std::span<const int> map) {
    if (static_cast<int>(map.size()) != m.rows()) throw InputError("row map has wrong size");
    std::vector<std::vector<int>> rows(map.size());
    for (int r = 0; r < m.rows(); ++r) {
        const int to = map[static_cast<std::size_t>(r)];
        if (to < 0 || to >= m.rows() || !rows[static_cast<std::size_t>(to)].empty()) {
            throw InputError("row map is not a bijection");
        }
        rows[static_cast<std::size_t>(to)].assign(m.row(r).begin(), m.row(r).end());
    }
    return RepresentationMatrix::from_rows(rows);
}

namespace {

std::vector<int> parse_ints(std::string_view line, int line_no) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        int x = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, x);
        if (ec != std::errc() || ptr != line.data() + j) {
            throw InputError("line " + std::to_string(line_no) + ": bad integer '" +
                             std::string(line.substr(i, j - i)) + "'");
        }
        out.push_back(x);
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

}  // namespace

RepresentationMatrix read_matrix(std::string_view text, ReadOptions options) {
    int line_no = 0;
    std::vector<std::pair<int, std::string_view>> content;
    for (auto line : split_lines(text)) {
        ++line_no;
        if (line.starts_with('#')) continue;
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
        content.emplace_back(line_no, line);
    }
    if (content.empty() || content[0].second != "drnmat 1") throw InputError("line 1: expected 'drnmat 1'");
    if (content.size() < 2) throw InputError("missing '<n> <k>' header");
    const auto header = parse_ints(content[1].second, content[1].first);
    if (header.size() != 2 || header[0] < 1 || header[1] < 1) {
        throw InputError("line " + std::to_string(content[1].first) + ": expected '<n> <k>'");
    }
    const int n = header[0];
    const int k = header[1];
    if (static_cast<int>(content.size()) - 2 != n) {
        throw InputError("expected " + std::to_string(n) + " rows, found " + std::to_string(content.size() - 2));
    }
    std::vector<int> cells;
    std::set<std::vector<int>> seen;
    for (int r = 0; r < n; ++r) {
        auto [no, line] = content[static_cast<std::size_t>(r) + 2];
        auto row = parse_ints(line, no);
        if (static_cast<int>(row.size()) != k) {
            throw InputError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(k));
        }
        if (!is_permutation_row(row)) throw InputError("row " + std::to_string(r + 1) + " is not a permutation");
        if (!seen.insert(row).second && !options.allow_duplicate_rows) {
            throw InputError("row " + std::to_string(r + 1) + " duplicates an earlier row");
        }
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return RepresentationMatrix(n, k, std::move(cells));
}

std::string write_matrix(const RepresentationMatrix& m, std::span<const std::string> comments) {
    std::ostringstream out;
    out << "drnmat 1\n";
    for (const auto& c : comments) out << "# " << c << '\n';
    out << m.rows() << ' ' << m.width() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.width(); ++c) out << (c ? " " : "") << m.at(r, c);
        out << '\n';
    }
    return out.str();
}

std::vector<std::string> read_comments(std::string_view text) {
    std::vector<std::string> out;
    for (auto line : split_lines(text)) {
        if (!line.starts_with('#')) continue;
        line.remove_prefix(1);
        if (line.starts_with(' ')) line.remove_prefix(1);
        out.emplace_back(line);
    }
    return out;
}

}  // namespace drn
