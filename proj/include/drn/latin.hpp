#pragma once

#include <optional>
#include <span>
#include <vector>

namespace drn {

using Row = std::vector<int>;

// r x n array over an n-element symbol set: rows are permutations of the
// symbol set, columns never repeat a symbol.
class LatinRectangle {
public:
    LatinRectangle(int rows, int cols, std::vector<int> cells);
    static LatinRectangle from_rows(std::span<const Row> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return cells_[static_cast<std::size_t>(r * cols_ + c)]; }
    Row row(int r) const;
    std::vector<Row> all_rows() const;
    // Ascending.
    const std::vector<int>& symbols() const { return symbols_; }

    friend bool operator==(const LatinRectangle&, const LatinRectangle&) = default;

private:
    int rows_;
    int cols_;
    std::vector<int> cells_;
    std::vector<int> symbols_;
};

class LatinSquare : public LatinRectangle {
public:
    explicit LatinSquare(LatinRectangle rect);
    int order() const { return rows(); }
};

// Rows all duplicated from one source row at the positions of duplicates().
struct RowDuplicatedArray {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;
    std::vector<int> duplicates;  // 0-based row positions, ascending

    int at(int r, int c) const { return cells[static_cast<std::size_t>(r * cols + c)]; }
    Row row(int r) const;
};

// cell(i,j) = j-i+1 for j >= i, n+1+j-i otherwise (1-based).
LatinSquare circulant(int n);
// Diagonal (1..n); odd n by formula, even n >= 4 by prolonging order n-1.
LatinSquare idempotent(int n);
// Idempotent square whose wrapped superdiagonal cells (i,i+1 mod n) hold
// distinct symbols; nullopt if the bounded backtracking finds none.
std::optional<LatinSquare> idempotent_with_cyclic_transversal(int n);

// Completes rect row by row with augmenting-path matchings; columns and
// symbols are scanned in ascending order.
LatinSquare hall_extend(const LatinRectangle& rect);
// Pins rows over symbols [1..n] and completes.
LatinSquare prescribe_rows(std::span<const Row> rows, int n);
// count further rows over symbols, each avoiding every symbol that any row
// of fixed (or an earlier added row) holds in that column. The fixed rows
// need not form a latin rectangle.
std::optional<std::vector<Row>> extend_avoiding(std::span<const Row> fixed, std::span<const int> symbols,
                                               int count);

// L(S) for a square L of order n-|S|+1: rows at positions in S (0-based,
// ascending) all copy row S[0]'s source row.
RowDuplicatedArray duplicate_rows(const LatinSquare& L, std::span<const int> S, int n);
LatinRectangle shift_symbols(const LatinRectangle& L, int offset);

}  // namespace drn
