#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <utility>
#include <vector>

#include "core.hpp"

namespace richmult {

// Raw pair relations.  For u = (e,f) and v = (g,h):
//   u precedes v   iff f < h and e > g
//   u dominates-below v (written u <| v)  iff f <= h and e >= g
//   meet(u, v) = (max(e,g), min(f,h))
struct CellRelation {
    bool prec = false;
    bool dom = false;
    Cell meet;
};

inline bool cell_prec(const Cell& u, const Cell& v) {
    return u.col < v.col && u.row > v.row;
}

inline bool cell_dom(const Cell& u, const Cell& v) {
    return u.col <= v.col && u.row >= v.row;
}

inline Cell cell_meet(const Cell& u, const Cell& v) {
    return Cell{std::max(u.row, v.row), std::min(u.col, v.col)};
}

inline CellRelation compare_cells(const Cell& u, const Cell& v) {
    return CellRelation{cell_prec(u, v), cell_dom(u, v), cell_meet(u, v)};
}

inline Sign sign_of(const Cell& x) {
    if (x.row == x.col)
        throw domain_error(errc::mixed_signs,
                           "cell " + to_string(x) + " has no sign");
    return x.row < x.col ? Sign::negative : Sign::positive;
}

inline void require_sign(const std::vector<Cell>& cells, Sign sign) {
    for (const Cell& x : cells)
        if (sign_of(x) != sign)
            throw domain_error(errc::mixed_signs,
                               "cell " + to_string(x) + " does not match the declared sign");
}

inline Cell transpose(const Cell& x) { return Cell{x.col, x.row}; }

// A set of cells of one sign, pairwise either nested or disjoint when read
// as intervals [min(r,c), max(r,c)], with all interval endpoints distinct.
struct TwistedChain {
    Sign sign = Sign::negative;
    std::vector<Cell> cells; // sorted by (row, col)
};

inline bool is_twisted_chain(std::vector<Cell> cells, Sign sign) {
    require_sign(cells, sign);
    if (sign == Sign::positive)
        for (Cell& x : cells) x = transpose(x);
    // completely disjointed: every coordinate value appears exactly once
    std::vector<int> values;
    for (const Cell& x : cells) {
        values.push_back(x.row);
        values.push_back(x.col);
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        return false;
    // trichotomy: comparable either way, or the meet escapes the sign region
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j) {
            const Cell &u = cells[i], &v = cells[j];
            if (cell_prec(u, v) || cell_prec(v, u)) continue;
            Cell m = cell_meet(u, v);
            if (m.row < m.col) return false;
        }
    return true;
}

namespace detail {

// Does a sign-respecting bijection exist between the remaining rows and the
// remaining columns?  Rows below columns is an interval constraint, so the
// sorted componentwise test is exact.
inline bool pairing_feasible(const std::vector<int>& rows_sorted,
                             const std::vector<int>& cols_sorted) {
    for (size_t i = 0; i < rows_sorted.size(); ++i)
        if (rows_sorted[i] >= cols_sorted[i]) return false;
    return true;
}

// Pair each column (ascending) with a smaller row value.  Among all feasible
// bijections, pick the one whose row vector is selected by the rule "at the
// first column where two candidates differ, the larger row value wins".
inline std::vector<Cell> arrange_below(std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() != cols.size())
        throw domain_error(errc::shape_mismatch, "row and column counts differ");
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (!pairing_feasible(rows, cols))
        throw domain_error(errc::no_arrangement,
                           "no sign-respecting pairing of rows and columns exists");
    std::vector<Cell> out;
    out.reserve(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
        int chosen = -1;
        // candidates in descending order; keep the remainder completable
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            if (*it >= cols[i]) continue;
            std::vector<int> rest(rows);
            rest.erase(std::find(rest.begin(), rest.end(), *it));
            std::vector<int> cols_rest(cols.begin() + i + 1, cols.end());
            if (pairing_feasible(rest, cols_rest)) {
                chosen = *it;
                break;
            }
        }
        assert(chosen != -1);
        rows.erase(std::find(rows.begin(), rows.end(), chosen));
        out.push_back(Cell{chosen, cols[i]});
    }
    return out;
}

} // namespace detail

// Lex-minimal sign-respecting pairing of the given row values and column
// values.  Throws NoArrangement when no pairing has the requested sign.
inline TwistedChain lex_min_arrangement(const std::vector<int>& rows,
                                        const std::vector<int>& cols, Sign sign) {
    std::vector<Cell> cells;
    if (sign == Sign::negative) {
        cells = detail::arrange_below(rows, cols);
    } else {
        cells = detail::arrange_below(cols, rows);
        for (Cell& x : cells) x = transpose(x);
    }
    std::sort(cells.begin(), cells.end());
    assert(is_twisted_chain(cells, sign));
    return TwistedChain{sign, cells};
}

// Longest chain in R (under cell_prec) whose top element is dominated-below x.
inline int depth(const std::vector<Cell>& R, const Cell& x) {
    if (R.empty()) return 0;
    std::vector<size_t> order(R.size());
    std::iota(order.begin(), order.end(), size_t{0});
    // any v preceding u has a strictly smaller column, so column order is a
    // linear extension
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return R[a].col < R[b].col; });
    std::vector<int> longest(R.size(), 1);
    int best = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (cell_prec(R[order[j]], R[order[i]]))
                longest[i] = std::max(longest[i], longest[j] + 1);
        if (cell_dom(R[order[i]], x)) best = std::max(best, longest[i]);
    }
    return best;
}

// Cells of either sign share one comparison code path once rewritten as
// (max, min) pairs; under that rewriting, domination is interval containment
// and the reflection across the antidiagonal preserves all relations.
inline Cell oriented(const Cell& x) {
    return Cell{std::max(x.row, x.col), std::min(x.row, x.col)};
}

inline std::vector<Cell> oriented(const std::vector<Cell>& xs) {
    std::vector<Cell> out(xs.size());
    std::transform(xs.begin(), xs.end(), out.begin(),
                   [](const Cell& x) { return oriented(x); });
    return out;
}

// True iff the depth profile of R covers that of S: for every x in S the
// longest chain of S below x is matched by one of R.  Both sets must carry
// the declared sign.
inline bool set_dominates(const std::vector<Cell>& R, const std::vector<Cell>& S,
                          Sign sign) {
    require_sign(R, sign);
    require_sign(S, sign);
    std::vector<Cell> r = oriented(R), s = oriented(S);
    for (const Cell& x : s)
        if (depth(r, x) < depth(s, x)) return false;
    return true;
}

// A multiset-free boundedness test: U's cells of each sign must be depth
// dominated by the chain attached on that side.  Downward closed in U.
inline bool chain_bounded(const std::vector<Cell>& U, const TwistedChain& lower,
                          const TwistedChain& upper) {
    if (lower.sign != Sign::negative || upper.sign != Sign::positive)
        throw domain_error(errc::mixed_signs,
                           "bounding chains must be negative (lower) and positive (upper)");
    std::vector<Cell> neg, pos;
    for (const Cell& x : U)
        (sign_of(x) == Sign::negative ? neg : pos).push_back(x);
    return set_dominates(lower.cells, neg, Sign::negative) &&
           set_dominates(upper.cells, pos, Sign::positive);
}

} // namespace richmult
