#pragma once

// Shared test utilities: exhaustive tuple enumeration and small brute-force
// reference implementations that deliberately avoid the library's algorithms.

#include <richmult/richmult.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace testutil {

using richmult::AttachedChains;
using richmult::Cell;
using richmult::Grid;
using richmult::IndexTuple;
using richmult::Mode;
using richmult::Sign;
using richmult::StarSetCount;
using richmult::TwistedChain;

// All strictly increasing d-tuples with entries in [1, n].
inline std::vector<std::vector<int>> increasing_tuples(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        int need = d - static_cast<int>(cur.size());
        for (int v = next; v + need - 1 <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// All valid symplectic index tuples for a given d.
inline std::vector<IndexTuple> all_symplectic(int d) {
    std::vector<IndexTuple> out;
    for (const auto& t : increasing_tuples(d, 2 * d)) {
        bool iso = true;
        for (int v : t)
            if (std::binary_search(t.begin(), t.end(), richmult::mirror_index(v, d)))
                iso = false;
        if (iso) out.push_back(richmult::validate_tuple(t, d, Mode::symplectic));
    }
    return out;
}

inline std::vector<IndexTuple> all_ordinary(int d, int n) {
    std::vector<IndexTuple> out;
    for (const auto& t : increasing_tuples(d, n))
        out.push_back(richmult::validate_tuple(t, d, Mode::ordinary, n));
    return out;
}

// Reference arrangement search: enumerate every sign-respecting bijection
// between rows and columns via permutations and keep the preferred one.
// Arrangements are compared after sorting by column: at the first position
// where the row values differ, the arrangement with the larger row wins.
inline std::optional<std::vector<Cell>> brute_arrangement(std::vector<int> rows,
                                                          std::vector<int> cols,
                                                          Sign sign) {
    if (sign == Sign::positive) {
        auto t = brute_arrangement(cols, rows, Sign::negative);
        if (!t) return std::nullopt;
        for (Cell& x : *t) x = richmult::transpose(x);
        std::sort(t->begin(), t->end());
        return t;
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (rows.size() != cols.size()) throw std::logic_error("size mismatch");
    std::optional<std::vector<int>> best;  // row values indexed by sorted column
    std::vector<int> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (size_t i = 0; i < cols.size(); ++i)
            if (rows[perm[i]] >= cols[i]) ok = false;
        if (!ok) continue;
        std::vector<int> assigned(cols.size());
        for (size_t i = 0; i < cols.size(); ++i) assigned[i] = rows[perm[i]];
        // larger row at the first difference is preferred
        if (!best || std::lexicographical_compare(best->begin(), best->end(),
                                                  assigned.begin(), assigned.end()))
            best = assigned;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!best) return std::nullopt;
    std::vector<Cell> cells;
    for (size_t i = 0; i < cols.size(); ++i) cells.push_back(Cell{(*best)[i], cols[i]});
    std::sort(cells.begin(), cells.end());
    return cells;
}

// Reference depth: longest chain under the strict relation among elements of R
// whose largest element is dominated by x, computed by plain recursion.
inline int brute_depth(const std::vector<Cell>& r, Cell x) {
    std::function<int(Cell)> ending_at = [&](Cell u) {
        int best = 1;
        for (Cell v : r)
            if (richmult::cell_prec(v, u)) best = std::max(best, 1 + ending_at(v));
        return best;
    };
    int best = 0;
    for (Cell u : r)
        if (richmult::cell_dom(u, x)) best = std::max(best, ending_at(u));
    return best;
}

// Reference path enumeration: try every subset of the rectangle spanned by the
// endpoints and keep those forming a monotone staircase of the right sign.
// Returns traversal-ordered sequences, sorted lexicographically.
inline std::vector<std::vector<Cell>> brute_paths(Cell anchor, const Grid& g,
                                                  bool star_filter) {
    auto ep = richmult::path_endpoints(anchor, g);
    Sign sign = g.sign(anchor);
    std::vector<Cell> box;
    for (int rv : g.rows)
        for (int cv : g.cols) {
            Cell x{rv, cv};
            if (x.row == x.col || g.sign(x) != sign) continue;
            int lo_r = std::min(ep.floor.row, ep.ceil.row);
            int hi_r = std::max(ep.floor.row, ep.ceil.row);
            int lo_c = std::min(ep.floor.col, ep.ceil.col);
            int hi_c = std::max(ep.floor.col, ep.ceil.col);
            if (x.row >= lo_r && x.row <= hi_r && x.col >= lo_c && x.col <= hi_c)
                box.push_back(x);
        }
    std::vector<std::vector<Cell>> found;
    size_t m = box.size();
    if (m > 22) throw std::logic_error("rectangle too large for brute enumeration");
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<Cell> pick;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) pick.push_back(box[i]);
        if (pick.empty()) continue;
        if (std::find(pick.begin(), pick.end(), ep.floor) == pick.end()) continue;
        if (std::find(pick.begin(), pick.end(), ep.ceil) == pick.end()) continue;
        // traversal order: index sums move by one per step
        auto key = [&](Cell x) { return g.row_index(x.row) + g.col_index(x.col); };
        std::sort(pick.begin(), pick.end(), [&](Cell a, Cell b) {
            return sign == Sign::negative ? key(a) < key(b) : key(a) > key(b);
        });
        bool ok = pick.front() == ep.floor && pick.back() == ep.ceil;
        for (size_t i = 0; ok && i + 1 < pick.size(); ++i) {
            int dr = g.row_index(pick[i + 1].row) - g.row_index(pick[i].row);
            int dc = g.col_index(pick[i + 1].col) - g.col_index(pick[i].col);
            if (sign == Sign::positive) {
                dr = -dr;
                dc = -dc;
            }
            if (!((dr == 1 && dc == 0) || (dr == 0 && dc == 1))) ok = false;
        }
        if (!ok) continue;
        if (star_filter) {
            auto mirrored = richmult::sharp_path(pick, g);
            std::vector<Cell> a = pick, b = mirrored;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) continue;
        }
        found.push_back(pick);
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Reference star-set count: enumerate every subset of the grid directly,
// with no orbit structure and no pruning.  Only viable for small grids.
inline StarSetCount brute_star_sets(const AttachedChains& ac, bool list_sets) {
    const Grid& g = ac.grid;
    std::vector<Cell> cells = g.all_cells();
    size_t m = cells.size();
    if (m > 20) throw std::logic_error("grid too large for brute enumeration");
    StarSetCount result;
    result.count = 0;
    result.max_degree = -1;
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<Cell> pick;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) pick.push_back(cells[i]);
        if (!richmult::is_star_set(pick, g)) continue;
        std::vector<Cell> neg, pos;
        for (Cell x : pick)
            (g.sign(x) == Sign::negative ? neg : pos).push_back(x);
        if (!richmult::set_dominates(ac.t_alpha.cells, neg, Sign::negative)) continue;
        if (!richmult::set_dominates(ac.w_gamma.cells, pos, Sign::positive)) continue;
        int degree = static_cast<int>(pick.size());
        if (degree > result.max_degree) {
            result.max_degree = degree;
            result.count = 1;
            result.sets.clear();
        } else if (degree < result.max_degree) {
            continue;
        } else {
            ++result.count;
        }
        if (list_sets) {
            std::sort(pick.begin(), pick.end());
            result.sets.push_back(pick);
        }
    }
    if (list_sets) std::sort(result.sets.begin(), result.sets.end());
    return result;
}

inline std::vector<Cell> cells_of(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<Cell> out;
    for (auto [r, c] : xs) out.push_back(Cell{r, c});
    return out;
}

inline IndexTuple tup(std::vector<int> v, int d, Mode mode = Mode::symplectic,
                      int ambient = 0) {
    return richmult::validate_tuple(v, d, mode, ambient);
}

}  // namespace testutil
