#include "drn/latin.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "drn/error.hpp"

namespace drn {

LatinRectangle::LatinRectangle(int rows, int cols, std::vector<int> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows < 1 || cols < 1 || rows > cols) throw InputError("latin rectangle needs 1 <= rows <= cols");
    if (cells_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw InputError("latin rectangle cell count mismatch");
    }
    symbols_.assign(cells_.begin(), cells_.begin() + cols);
    std::sort(symbols_.begin(), symbols_.end());
    if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
        throw InputError("row 1 repeats a symbol");
    }
    for (int r = 1; r < rows; ++r) {
        Row s = row(r);
        std::sort(s.begin(), s.end());
        if (s != symbols_) throw InputError("row " + std::to_string(r + 1) + " is not a permutation of the symbols");
    }
    for (int c = 0; c < cols; ++c) {
        std::set<int> seen;
        for (int r = 0; r < rows; ++r) {
            if (!seen.insert(at(r, c)).second) throw InputError("column " + std::to_string(c + 1) + " repeats a symbol");
        }
    }
}

LatinRectangle LatinRectangle::from_rows(std::span<const Row> rows) {
    if (rows.empty()) throw InputError("latin rectangle needs at least one row");
    std::vector<int> cells;
    for (const auto& r : rows) {
        if (r.size() != rows[0].size()) throw InputError("ragged latin rectangle rows");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return LatinRectangle(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), std::move(cells));
}

Row LatinRectangle::row(int r) const {
    auto first = cells_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
    return Row(first, first + cols_);
}

std::vector<Row> LatinRectangle::all_rows() const {
    std::vector<Row> out;
    for (int r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

LatinSquare::LatinSquare(LatinRectangle rect) : LatinRectangle(std::move(rect)) {
    if (rows() != cols()) throw InputError("latin square must be square");
}

Row RowDuplicatedArray::row(int r) const {
    auto first = cells.begin() + static_cast<std::ptrdiff_t>(r) * cols;
    return Row(first, first + cols);
}

LatinSquare circulant(int n) {
    if (n < 1) throw InputError("order must be at least 1");
    std::vector<int> cells;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) cells.push_back(j >= i ? j - i + 1 : n + 1 + j - i);
    }
    return LatinSquare(LatinRectangle(n, n, std::move(cells)));
}

namespace {

// Fills an order-n square with the diagonal pinned to (1..n), always picking
// the empty cell with the fewest options. With `transversal`, the cells
// (i, i+1 mod n) must also hold distinct symbols.
constexpr std::uint64_t kIdempotentSearchNodes = 20'000'000;

std::optional<LatinSquare> idempotent_search(int n, bool transversal) {
    if (n > 64) throw InputError("idempotent search supports order at most 64");
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<int> cell(static_cast<std::size_t>(n * n), 0);
    std::vector<std::uint64_t> row_used(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> col_used(static_cast<std::size_t>(n), 0);
    std::uint64_t diag_used = 0;
    auto on_transversal = [&](int i, int j) { return transversal && j == (i + 1) % n; };
    for (int i = 0; i < n; ++i) {
        cell[static_cast<std::size_t>(i * n + i)] = i + 1;
        row_used[static_cast<std::size_t>(i)] |= std::uint64_t{1} << i;
        col_used[static_cast<std::size_t>(i)] |= std::uint64_t{1} << i;
    }
    auto options = [&](int i, int j) {
        std::uint64_t m = full & ~(row_used[static_cast<std::size_t>(i)] | col_used[static_cast<std::size_t>(j)]);
        if (on_transversal(i, j)) m &= ~diag_used;
        return m;
    };
    std::uint64_t nodes = 0;
    std::function<bool(int)> fill = [&](int left) {
        if (left == 0) return true;
        if (++nodes > kIdempotentSearchNodes) return false;
        int bi = -1;
        int bj = -1;
        int best = 65;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (cell[static_cast<std::size_t>(i * n + j)]) continue;
                const int c = std::popcount(options(i, j));
                if (c == 0) return false;
                if (c < best) {
                    best = c;
                    bi = i;
                    bj = j;
                }
            }
        }
        for (std::uint64_t m = options(bi, bj); m; m &= m - 1) {
            const std::uint64_t b = m & -m;
            cell[static_cast<std::size_t>(bi * n + bj)] = std::countr_zero(b) + 1;
            row_used[static_cast<std::size_t>(bi)] |= b;
            col_used[static_cast<std::size_t>(bj)] |= b;
            if (on_transversal(bi, bj)) diag_used |= b;
            if (fill(left - 1)) return true;
            row_used[static_cast<std::size_t>(bi)] ^= b;
            col_used[static_cast<std::size_t>(bj)] ^= b;
            if (on_transversal(bi, bj)) diag_used ^= b;
            cell[static_cast<std::size_t>(bi * n + bj)] = 0;
        }
        return false;
    };
    if (!fill(n * n - n)) return std::nullopt;
    return LatinSquare(LatinRectangle(n, n, std::move(cell)));
}

LatinSquare idempotent_odd(int n) {
    const int h = (n + 1) / 2;
    std::vector<int> cells;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) cells.push_back(((i + j) * h - 1) % n + 1);
    }
    return LatinSquare(LatinRectangle(n, n, std::move(cells)));
}

// Prolongs the odd square of order n-1 along its transversal (i,i+1): those
// cells take the new symbol n and their old symbols move to the new row and
// column. The diagonal is untouched, and (n,n) = n.
LatinSquare idempotent_even(int n) {
    const int m = n - 1;
    const auto base = idempotent_odd(m);
    std::vector<int> cells(static_cast<std::size_t>(n * n));
    auto put = [&](int i, int j, int x) { cells[static_cast<std::size_t>(i * n + j)] = x; };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) put(i, j, base.at(i, j));
    }
    for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        put(i, m, base.at(i, j));
        put(m, j, base.at(i, j));
        put(i, j, n);
    }
    put(m, m, n);
    return LatinSquare(LatinRectangle(n, n, std::move(cells)));
}

}  // namespace

LatinSquare idempotent(int n) {
    if (n < 1) throw InputError("order must be at least 1");
    if (n == 2) throw InputError("no idempotent latin square of order 2");
    if (n % 2) return idempotent_odd(n);
    return idempotent_even(n);
}

std::optional<LatinSquare> idempotent_with_cyclic_transversal(int n) {
    if (n < 1) throw InputError("order must be at least 1");
    if (n == 2) return std::nullopt;
    // In the odd formula cell (i,i+1) = i + (n-1)/2 mod n: already distinct.
    if (n % 2) return idempotent_odd(n);
    return idempotent_search(n, true);
}

namespace {

// One row whose column c takes a symbol from avail[c], all distinct.
std::optional<Row> match_row(const std::vector<std::vector<int>>& avail) {
    const std::size_t n = avail.size();
    Row symbol_of_col(n, -1);
    std::map<int, int> owner;  // symbol -> column
    std::function<bool(int, std::set<int>&)> augment = [&](int c, std::set<int>& seen) {
        for (int s : avail[static_cast<std::size_t>(c)]) {
            if (!seen.insert(s).second) continue;
            const auto it = owner.find(s);
            if (it == owner.end() || augment(it->second, seen)) {
                owner[s] = c;
                symbol_of_col[static_cast<std::size_t>(c)] = s;
                return true;
            }
        }
        return false;
    };
    for (std::size_t c = 0; c < n; ++c) {
        std::set<int> seen;
        if (!augment(static_cast<int>(c), seen)) return std::nullopt;
    }
    return symbol_of_col;
}

}  // namespace

std::optional<std::vector<Row>> extend_avoiding(std::span<const Row> fixed, std::span<const int> symbols,
                                               int count) {
    std::vector<Row> all(fixed.begin(), fixed.end());
    const std::size_t n = symbols.size();
    for (const auto& r : all) {
        if (r.size() != n) throw InputError("row length differs from symbol count");
    }
    std::vector<int> sorted(symbols.begin(), symbols.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Row> added;
    for (int step = 0; step < count; ++step) {
        std::vector<std::vector<int>> avail(n);
        for (std::size_t c = 0; c < n; ++c) {
            for (int s : sorted) {
                bool used = false;
                for (const auto& r : all) used = used || r[c] == s;
                if (!used) avail[c].push_back(s);
            }
        }
        auto row = match_row(avail);
        if (!row) return std::nullopt;
        all.push_back(*row);
        added.push_back(std::move(*row));
    }
    return added;
}

LatinSquare hall_extend(const LatinRectangle& rect) {
    const int n = rect.cols();
    if (rect.rows() >= n) throw InputError("nothing to extend: rectangle is already square");
    auto rows = rect.all_rows();
    auto added = extend_avoiding(rows, rect.symbols(), n - rect.rows());
    if (!added) throw InternalError("Hall extension found no perfect matching");
    rows.insert(rows.end(), added->begin(), added->end());
    return LatinSquare(LatinRectangle::from_rows(rows));
}

LatinSquare prescribe_rows(std::span<const Row> rows, int n) {
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw InputError("prescribed rows conflict: wrong length");
    }
    std::optional<LatinRectangle> rect;
    try {
        rect.emplace(LatinRectangle::from_rows(rows));
    } catch (const InputError& e) {
        throw InputError(std::string("prescribed rows conflict: ") + e.what());
    }
    if (rect->symbols().front() != 1 || rect->symbols().back() != n) {
        throw InputError("prescribed rows conflict: symbols must be 1.." + std::to_string(n));
    }
    if (rect->rows() == n) return LatinSquare(*rect);
    return hall_extend(*rect);
}

RowDuplicatedArray duplicate_rows(const LatinSquare& L, std::span<const int> S, int n) {
    const int k = static_cast<int>(S.size());
    if (k < 2) throw InputError("duplicate set needs at least two rows");
    if (L.order() != n - k + 1) throw InputError("square order must be n-|S|+1");
    for (int i = 0; i < k; ++i) {
        if (S[static_cast<std::size_t>(i)] < 0 || S[static_cast<std::size_t>(i)] >= n ||
            (i && S[static_cast<std::size_t>(i)] <= S[static_cast<std::size_t>(i - 1)])) {
            throw InputError("duplicate set must be ascending within the rows");
        }
    }
    RowDuplicatedArray out;
    out.rows = n;
    out.cols = L.cols();
    out.duplicates.assign(S.begin(), S.end());
    for (int i = 0; i < n; ++i) {
        int source = 0;
        if (std::find(S.begin() + 1, S.end(), i) != S.end()) {
            source = S[0];
        } else {
            int skipped = 0;
            for (int j = 1; j < k; ++j) skipped += S[static_cast<std::size_t>(j)] < i ? 1 : 0;
            source = i - skipped;
        }
        for (int c = 0; c < L.cols(); ++c) out.cells.push_back(L.at(source, c));
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const bool both = std::binary_search(S.begin(), S.end(), a) && std::binary_search(S.begin(), S.end(), b);
            int agree = 0;
            for (int c = 0; c < out.cols; ++c) agree += out.at(a, c) == out.at(b, c) ? 1 : 0;
            if (both ? agree != out.cols : agree != 0) {
                throw InternalError("row duplication broke the agree/differ dichotomy");
            }
        }
    }
    return out;
}

LatinRectangle shift_symbols(const LatinRectangle& L, int offset) {
    if (offset < 0) throw InputError("offset must be non-negative");
    std::vector<int> cells;
    for (int r = 0; r < L.rows(); ++r) {
        for (int c = 0; c < L.cols(); ++c) cells.push_back(L.at(r, c) + offset);
    }
    return LatinRectangle(L.rows(), L.cols(), std::move(cells));
}

}  // namespace drn
