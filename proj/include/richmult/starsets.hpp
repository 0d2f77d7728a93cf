#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <vector>

#include "attach.hpp"
#include "chains.hpp"
#include "core.hpp"
#include "grid.hpp"

namespace richmult {

struct StarSetCount {
    int max_degree = 0;
    unsigned long long count = 0;
    std::vector<std::vector<Cell>> sets; // maximal sets, filled only when listed
};

// Exhaustive search over reflection-closed subsets of the grid for the ones
// of maximal size among those bounded by the attached chains.  Independent of
// the path counting machinery by design; the two must agree.
inline StarSetCount count_max_bounded_star_sets(const AttachedChains& ac,
                                                bool list_sets,
                                                int orbit_budget = 24) {
    const Grid& g = ac.grid;

    // reflection orbits, ordered by representative; singleton per cell in
    // ordinary mode
    std::vector<std::vector<Cell>> orbits;
    for (const Cell& x : g.all_cells()) {
        if (g.mode() == Mode::symplectic) {
            const Cell y = g.sharp(x);
            if (y < x) continue; // handled at its representative
            if (y == x)
                orbits.push_back({x});
            else
                orbits.push_back({x, y});
        } else {
            orbits.push_back({x});
        }
    }
    if (static_cast<int>(orbits.size()) > orbit_budget)
        throw budget_error("grid has " + std::to_string(orbits.size()) +
                           " reflection orbits, exceeding the budget of " +
                           std::to_string(orbit_budget));

    // a cell whose singleton already violates the bound can never occur
    std::erase_if(orbits, [&](const std::vector<Cell>& orbit) {
        return std::any_of(orbit.begin(), orbit.end(), [&](const Cell& x) {
            return !chain_bounded({x}, ac.t_alpha, ac.w_gamma);
        });
    });

    int remaining_total = 0;
    for (const auto& orbit : orbits) remaining_total += static_cast<int>(orbit.size());
    std::vector<int> remaining_after(orbits.size() + 1, 0);
    for (size_t k = orbits.size(); k-- > 0;)
        remaining_after[k] = remaining_after[k + 1] + static_cast<int>(orbits[k].size());

    StarSetCount result;
    std::vector<Cell> current;
    bool any_seen = false;

    auto dfs = [&](auto&& self, size_t k) -> void {
        const int potential = static_cast<int>(current.size()) + remaining_after[k];
        if (any_seen && potential < result.max_degree) return;
        if (k == orbits.size()) {
            const int degree = static_cast<int>(current.size());
            if (!any_seen || degree > result.max_degree) {
                any_seen = true;
                result.max_degree = degree;
                result.count = 1;
                result.sets.clear();
            } else if (degree < result.max_degree) {
                return;
            } else {
                ++result.count;
            }
            if (list_sets) {
                std::vector<Cell> copy = current;
                std::sort(copy.begin(), copy.end());
                result.sets.push_back(std::move(copy));
            }
            return;
        }
        // include first so large sets are found early and bound the search
        const size_t before = current.size();
        current.insert(current.end(), orbits[k].begin(), orbits[k].end());
        if (chain_bounded(current, ac.t_alpha, ac.w_gamma))
            self(self, k + 1);
        current.resize(before);
        self(self, k + 1);
    };
    dfs(dfs, 0);

    assert(any_seen); // the empty set is always bounded
    return result;
}

// A star set viewed with multiplicities: the reflection image is merged in,
// so self-reflective cells carry multiplicity two and all others one.
inline std::map<Cell, int> expand_to_special(const std::vector<Cell>& star_set,
                                             const Grid& g) {
    if (!is_star_set(star_set, g))
        throw domain_error(errc::bad_request,
                           "input is not closed under the reflection");
    std::map<Cell, int> out;
    for (const Cell& x : star_set)
        out[x] = g.mode() == Mode::symplectic && g.diagonal(x) ? 2 : 1;
    return out;
}

} // namespace richmult
