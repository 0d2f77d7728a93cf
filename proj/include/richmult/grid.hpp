#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "core.hpp"
#include "index_tuple.hpp"

namespace richmult {

// The grid attached to a fixed point beta: rows are the complement of beta,
// columns are the entries of beta, both sorted ascending.  In symplectic mode
// the rows are exactly the mirrors of the columns.
struct Grid {
    IndexTuple beta;
    std::vector<int> rows;
    std::vector<int> cols;

    Mode mode() const { return beta.mode(); }
    int d() const { return beta.d(); }
    int ambient() const { return beta.ambient(); }

    int row_index(int r) const {
        auto it = std::lower_bound(rows.begin(), rows.end(), r);
        if (it == rows.end() || *it != r) return -1;
        return static_cast<int>(it - rows.begin());
    }
    int col_index(int c) const {
        auto it = std::lower_bound(cols.begin(), cols.end(), c);
        if (it == cols.end() || *it != c) return -1;
        return static_cast<int>(it - cols.begin());
    }

    bool contains(const Cell& x) const {
        return row_index(x.row) >= 0 && col_index(x.col) >= 0;
    }

    void require_cell(const Cell& x) const {
        if (!contains(x))
            throw domain_error(errc::cell_not_in_grid,
                               "cell " + to_string(x) + " not in grid");
    }

    Sign sign(const Cell& x) const {
        require_cell(x);
        return x.row < x.col ? Sign::negative : Sign::positive;
    }

    int mirror(int j) const {
        if (mode() != Mode::symplectic)
            throw domain_error(errc::unsupported_mode,
                               "mirror is only defined in symplectic mode");
        return mirror_index(j, d());
    }

    bool diagonal(const Cell& x) const {
        require_cell(x);
        if (mode() != Mode::symplectic) return false;
        return x.row == mirror(x.col);
    }

    // Reflection across the antidiagonal: (r, c) -> (mirror(c), mirror(r)).
    // Sign preserving, an involution, fixes exactly the diagonal cells.
    Cell sharp(const Cell& x) const {
        if (mode() != Mode::symplectic)
            throw domain_error(errc::unsupported_mode,
                               "sharp is only defined in symplectic mode");
        require_cell(x);
        return Cell{mirror(x.col), mirror(x.row)};
    }

    // Neighbours in the sorted row/column lists; nullopt at either end.
    std::optional<int> next_row(int r) const { return step(rows, r, +1); }
    std::optional<int> prev_row(int r) const { return step(rows, r, -1); }
    std::optional<int> next_col(int c) const { return step(cols, c, +1); }
    std::optional<int> prev_col(int c) const { return step(cols, c, -1); }

    int cell_ordinal(const Cell& x) const {
        return row_index(x.row) * static_cast<int>(cols.size()) + col_index(x.col);
    }

    std::vector<Cell> all_cells() const {
        std::vector<Cell> out;
        out.reserve(rows.size() * cols.size());
        for (int r : rows)
            for (int c : cols) out.push_back(Cell{r, c});
        return out;
    }

private:
    static std::optional<int> step(const std::vector<int>& xs, int v, int dir) {
        auto it = std::lower_bound(xs.begin(), xs.end(), v);
        if (it == xs.end() || *it != v) return std::nullopt;
        if (dir > 0) {
            ++it;
            if (it == xs.end()) return std::nullopt;
            return *it;
        }
        if (it == xs.begin()) return std::nullopt;
        return *std::prev(it);
    }
};

inline Grid build_grid(const IndexTuple& beta) {
    Grid g;
    g.beta = beta;
    g.cols = beta.entries();
    g.rows = beta.complement();
    return g;
}

struct CellClass {
    Sign sign = Sign::negative;
    bool diagonal = false;       // on the antidiagonal (row == mirror(col))
    bool upper = false;          // row <= mirror(col); the chart region
    bool upper_positive = false; // positive and in the chart region
};

inline CellClass classify_cell(const Cell& x, const Grid& g) {
    CellClass out;
    out.sign = g.sign(x);
    if (g.mode() == Mode::symplectic) {
        int m = g.mirror(x.col);
        out.diagonal = (x.row == m);
        out.upper = (x.row <= m);
        out.upper_positive = out.upper && out.sign == Sign::positive;
    }
    return out;
}

inline Cell sharp_cell(const Cell& x, const Grid& g) { return g.sharp(x); }

} // namespace richmult
