#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "attach.hpp"
#include "chains.hpp"
#include "core.hpp"
#include "grid.hpp"

namespace richmult {

struct PathEndpoints {
    Cell floor;
    Cell ceil;
};

namespace detail {

inline std::optional<int> first_above(const std::vector<int>& xs, int v) {
    auto it = std::upper_bound(xs.begin(), xs.end(), v);
    if (it == xs.end()) return std::nullopt;
    return *it;
}

inline std::optional<int> last_below(const std::vector<int>& xs, int v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it == xs.begin()) return std::nullopt;
    return *std::prev(it);
}

} // namespace detail

// Endpoints of the staircase serving a cell: push the column, respectively
// the row, to the extreme value that keeps the cell in its sign region.
inline PathEndpoints path_endpoints(const Cell& r, const Grid& g) {
    g.require_cell(r);
    if (g.sign(r) == Sign::negative) {
        std::optional<int> fc = detail::first_above(g.cols, r.row);
        std::optional<int> cr = detail::last_below(g.rows, r.col);
        assert(fc && cr); // r.col > r.row supplies a witness for both
        return PathEndpoints{Cell{r.row, *fc}, Cell{*cr, r.col}};
    }
    std::optional<int> fc = detail::last_below(g.cols, r.row);
    std::optional<int> cr = detail::first_above(g.rows, r.col);
    assert(fc && cr);
    return PathEndpoints{Cell{r.row, *fc}, Cell{*cr, r.col}};
}

// No two cells of a staircase are comparable under the chain order.
inline bool is_depth_one(const std::vector<Cell>& cells) {
    std::vector<Cell> o = oriented(cells);
    for (size_t i = 0; i < o.size(); ++i)
        for (size_t j = i + 1; j < o.size(); ++j)
            if (cell_prec(o[i], o[j]) || cell_prec(o[j], o[i])) return false;
    return true;
}

// Image of a path under the antidiagonal reflection, reversed so the result
// again runs floor to ceil (the reflection swaps the two endpoints).
inline std::vector<Cell> sharp_path(const std::vector<Cell>& p, const Grid& g) {
    std::vector<Cell> q(p.size());
    std::transform(p.rbegin(), p.rend(), q.begin(),
                   [&](const Cell& x) { return g.sharp(x); });
    return q;
}

namespace detail {

inline bool set_equal_as_cells(std::vector<Cell> a, std::vector<Cell> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace detail

// All monotone staircases from floor to ceil through cells of the anchor's
// sign, stepping to the adjacent entry of the sorted row or column list:
// negative paths move down or right, positive paths move up or left.  For a
// self-reflective anchor only reflection-symmetric paths are kept.  Output
// in lexicographic order of the cell sequences.
inline std::vector<std::vector<Cell>> enumerate_paths(const Cell& r, const Grid& g) {
    const PathEndpoints ends = path_endpoints(r, g);
    const Sign s = g.sign(r);
    std::vector<std::vector<Cell>> out;
    std::vector<Cell> cur{ends.floor};

    auto dfs = [&](auto&& self, Cell at) -> void {
        if (at == ends.ceil) {
            assert(is_depth_one(cur));
            out.push_back(cur);
            return;
        }
        std::optional<int> row_step =
            s == Sign::negative ? g.next_row(at.row) : g.prev_row(at.row);
        std::optional<int> col_step =
            s == Sign::negative ? g.next_col(at.col) : g.prev_col(at.col);
        bool row_ok, col_ok;
        if (s == Sign::negative) {
            row_ok = row_step && *row_step <= ends.ceil.row && *row_step < at.col;
            col_ok = col_step && *col_step <= ends.ceil.col && at.row < *col_step;
        } else {
            row_ok = row_step && *row_step >= ends.ceil.row && *row_step > at.col;
            col_ok = col_step && *col_step >= ends.ceil.col && at.row > *col_step;
        }
        if (row_ok) {
            cur.push_back(Cell{*row_step, at.col});
            self(self, cur.back());
            cur.pop_back();
        }
        if (col_ok) {
            cur.push_back(Cell{at.row, *col_step});
            self(self, cur.back());
            cur.pop_back();
        }
    };
    dfs(dfs, ends.floor);
    std::sort(out.begin(), out.end());

    if (g.mode() == Mode::symplectic && g.diagonal(r))
        std::erase_if(out, [&](const std::vector<Cell>& p) {
            return !detail::set_equal_as_cells(p, sharp_path(p, g));
        });
    return out;
}

// One choice of path per anchor; anchors kept in sorted order, paths parallel.
struct PathFamily {
    std::vector<Cell> anchors;
    std::vector<std::vector<Cell>> paths;

    std::vector<Cell> union_cells() const {
        std::vector<Cell> out;
        for (const auto& p : paths) out.insert(out.end(), p.begin(), p.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

struct FamilyCount {
    unsigned long long count = 0;
    std::vector<PathFamily> families; // filled only when listing was requested
};

// Count the ways to pick one admissible path per attached-chain cell so that
// all chosen paths are pairwise disjoint.  In symplectic mode the choice for
// a cell fixes the choice for its reflection partner, so the search runs
// over reflection orbits; families come out in lexicographic order of their
// path sequences.
inline FamilyCount count_path_families(const AttachedChains& ac, bool list_families) {
    const Grid& g = ac.grid;
    std::vector<Cell> anchors = ac.t_alpha.cells;
    anchors.insert(anchors.end(), ac.w_gamma.cells.begin(), ac.w_gamma.cells.end());
    std::sort(anchors.begin(), anchors.end());

    struct Orbit {
        std::vector<Cell> anchors;                           // representative first
        std::vector<std::vector<std::vector<Cell>>> options; // option -> one path per orbit anchor
        std::vector<std::vector<int>> footprints;            // option -> cell ordinals, no duplicates
    };
    std::vector<Orbit> orbits;

    auto add_orbit = [&](std::vector<Cell> members) {
        Orbit ob;
        ob.anchors = std::move(members);
        const Cell rep = ob.anchors.front();
        for (const auto& p : enumerate_paths(rep, g)) {
            std::vector<std::vector<Cell>> option{p};
            if (ob.anchors.size() == 2) option.push_back(sharp_path(p, g));
            std::vector<int> footprint;
            for (const auto& path : option)
                for (const Cell& x : path) footprint.push_back(g.cell_ordinal(x));
            std::sort(footprint.begin(), footprint.end());
            if (std::adjacent_find(footprint.begin(), footprint.end()) != footprint.end())
                continue; // the path collides with its own partner
            ob.options.push_back(std::move(option));
            ob.footprints.push_back(std::move(footprint));
        }
        orbits.push_back(std::move(ob));
    };

    if (g.mode() == Mode::symplectic) {
        std::vector<Cell> seen;
        for (const Cell& r : anchors) {
            if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
            const Cell partner = g.sharp(r);
            if (partner == r) {
                add_orbit({r});
            } else {
                assert(std::binary_search(anchors.begin(), anchors.end(), partner));
                seen.push_back(partner);
                add_orbit({r, partner});
            }
        }
    } else {
        for (const Cell& r : anchors) add_orbit({r});
    }

    FamilyCount result;
    std::vector<char> occupied(g.rows.size() * g.cols.size(), 0);
    std::vector<size_t> choice(orbits.size(), 0);

    auto record_family = [&]() {
        PathFamily fam;
        fam.anchors = anchors;
        fam.paths.resize(anchors.size());
        for (size_t k = 0; k < orbits.size(); ++k)
            for (size_t a = 0; a < orbits[k].anchors.size(); ++a) {
                auto it = std::lower_bound(anchors.begin(), anchors.end(),
                                           orbits[k].anchors[a]);
                fam.paths[it - anchors.begin()] = orbits[k].options[choice[k]][a];
            }
        result.families.push_back(std::move(fam));
    };

    auto dfs = [&](auto&& self, size_t k) -> void {
        if (k == orbits.size()) {
            ++result.count;
            if (list_families) record_family();
            return;
        }
        for (size_t oi = 0; oi < orbits[k].options.size(); ++oi) {
            const std::vector<int>& fp = orbits[k].footprints[oi];
            size_t placed = 0;
            bool ok = true;
            for (; placed < fp.size(); ++placed) {
                if (occupied[fp[placed]]) {
                    ok = false;
                    break;
                }
                occupied[fp[placed]] = 1;
            }
            if (ok) {
                choice[k] = oi;
                self(self, k + 1);
            }
            for (size_t i = 0; i < placed; ++i) occupied[fp[i]] = 0;
        }
    };
    dfs(dfs, 0);
    return result;
}

} // namespace richmult
