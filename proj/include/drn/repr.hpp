#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drn/graph.hpp"
#include "drn/perm.hpp"

namespace drn {

// n x k array whose rows are one-line permutations of [1..k]; row i is the
// image of vertex i. Distinct rows are not enforced here: verify reports
// duplicates as a violation.
class RepresentationMatrix {
public:
    RepresentationMatrix(int n, int k, std::vector<int> cells);
    static RepresentationMatrix from_rows(std::span<const std::vector<int>> rows);
    static RepresentationMatrix from_permutations(std::span<const Permutation> rows);

    int rows() const { return n_; }
    int width() const { return k_; }
    // 1-based entry.
    int at(int r, int c) const { return cells_[static_cast<std::size_t>(r * k_ + c)]; }
    std::span<const int> row(int r) const {
        return {cells_.data() + static_cast<std::ptrdiff_t>(r) * k_, static_cast<std::size_t>(k_)};
    }
    Permutation permutation(int r) const { return Permutation::from_one_based(row(r)); }
    std::vector<std::vector<int>> all_rows() const;

    friend bool operator==(const RepresentationMatrix&, const RepresentationMatrix&) = default;

private:
    int n_;
    int k_;
    std::vector<int> cells_;
};

struct Violation {
    enum class Kind { adjacent_but_agree, non_adjacent_but_disagree, duplicate_rows };
    Kind kind;
    int row_a;      // 0-based, row_a < row_b
    int row_b;
    int position;   // 0-based agreeing column for adjacent_but_agree, else -1
};

struct VerifyReport {
    bool valid = true;
    std::vector<Violation> violations;
};

VerifyReport verify(const Graph& g, const RepresentationMatrix& m);
// 1-based human form, e.g. "duplicate rows 1,2".
std::string describe(const Violation& v);
// Graph whose edges are exactly the disagree-everywhere row pairs.
Graph represented_graph(const RepresentationMatrix& m);

// Left translation by the inverse of row 1.
RepresentationMatrix normalize(const RepresentationMatrix& m);
// New entry at column j is the old entry at column t(j).
RepresentationMatrix permute_columns(const RepresentationMatrix& m, const Permutation& t);
// Every entry e becomes t(e).
RepresentationMatrix relabel_symbols(const RepresentationMatrix& m, const Permutation& t);
// Row map[i] of the result is row i of m.
RepresentationMatrix permute_rows(const RepresentationMatrix& m, std::span<const int> map);

struct ReadOptions {
    bool allow_duplicate_rows = false;
};

RepresentationMatrix read_matrix(std::string_view text, ReadOptions options = {});
// Comments are written as '#'-lines after the format line.
std::string write_matrix(const RepresentationMatrix& m, std::span<const std::string> comments = {});
// '#'-lines of a drnmat text, '#' and one following space stripped.
std::vector<std::string> read_comments(std::string_view text);

}  // namespace drn
