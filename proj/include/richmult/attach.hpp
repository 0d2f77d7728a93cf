#pragma once

#include <algorithm>
#include <vector>

#include "chains.hpp"
#include "core.hpp"
#include "grid.hpp"
#include "index_tuple.hpp"

namespace richmult {

enum class ChainSide { lower, upper };

// The fixed data of one multiplicity computation: the grid of the middle
// tuple together with the two bounding chains read off from the outer tuples.
struct AttachedChains {
    Grid grid;
    IndexTuple alpha;
    IndexTuple gamma;
    TwistedChain t_alpha; // negative cells, one per entry of beta \ alpha
    TwistedChain w_gamma; // positive cells, one per entry of beta \ gamma
};

namespace detail {

inline std::vector<int> tuple_difference(const IndexTuple& a, const IndexTuple& b) {
    std::vector<int> out;
    std::set_difference(a.entries().begin(), a.entries().end(),
                        b.entries().begin(), b.entries().end(),
                        std::back_inserter(out));
    return out;
}

} // namespace detail

// Chain of the requested sign pairing the entries the target tuple gains
// against the ones it loses, relative to beta.  Lower targets (<= beta) give
// negative chains, upper targets (>= beta) positive ones; a target violating
// that order has no sign-respecting pairing and raises NoArrangement.
inline TwistedChain attach_chain(const IndexTuple& target, const IndexTuple& beta,
                                 ChainSide side) {
    require_same_shape(target, beta);
    std::vector<int> gained = detail::tuple_difference(target, beta);
    std::vector<int> lost = detail::tuple_difference(beta, target);
    if (side == ChainSide::lower)
        return lex_min_arrangement(gained, lost, Sign::negative);
    return lex_min_arrangement(gained, lost, Sign::positive);
}

inline AttachedChains attach(const IndexTuple& alpha, const IndexTuple& beta,
                             const IndexTuple& gamma) {
    AttachedChains out{build_grid(beta), alpha, gamma,
                       attach_chain(alpha, beta, ChainSide::lower),
                       attach_chain(gamma, beta, ChainSide::upper)};
    for (const Cell& x : out.t_alpha.cells) out.grid.require_cell(x);
    for (const Cell& x : out.w_gamma.cells) out.grid.require_cell(x);
    return out;
}

// Conditions characterizing the arrangements produced by the greedy pairing,
// stated for positive cells (r > c); negative inputs are transposed first:
//   (A) all row values distinct and all column values distinct;
//   (B) sorted by row, consecutive cells satisfy c_j > c_{j+1} or r_j < c_{j+1}.
inline bool is_distinguished_pairing(std::vector<Cell> cells, Sign sign) {
    require_sign(cells, sign);
    if (sign == Sign::negative)
        for (Cell& x : cells) x = transpose(x);
    std::sort(cells.begin(), cells.end());
    for (size_t i = 0; i + 1 < cells.size(); ++i) {
        if (cells[i].row == cells[i + 1].row) return false;
        if (!(cells[i].col > cells[i + 1].col || cells[i].row < cells[i + 1].col))
            return false;
    }
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j)
            if (cells[i].col == cells[j].col) return false;
    return true;
}

// A star set is a set of grid cells that is closed under the reflection
// across the antidiagonal.  In ordinary mode every cell set qualifies.
inline bool is_star_set(const std::vector<Cell>& cells, const Grid& grid) {
    for (const Cell& x : cells) grid.require_cell(x);
    if (grid.mode() == Mode::ordinary) return true;
    for (const Cell& x : cells) {
        Cell y = grid.sharp(x);
        if (std::find(cells.begin(), cells.end(), y) == cells.end()) return false;
    }
    return true;
}

} // namespace richmult
