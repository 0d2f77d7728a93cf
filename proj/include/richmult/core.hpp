#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace richmult {

enum class Mode { symplectic, ordinary };

enum class Sign { negative, positive };

// A cell of the grid attached to a fixed point: row value taken from the
// complement of beta, column value taken from beta itself.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

enum class errc {
    not_increasing,
    out_of_range,
    not_isotropic,
    shape_mismatch,
    mixed_signs,
    cell_not_in_grid,
    no_arrangement,
    budget_exceeded,
    unsupported_mode,
    bad_request,
};

inline const char* errc_name(errc e) {
    switch (e) {
    case errc::not_increasing: return "NotIncreasing";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_isotropic: return "NotIsotropic";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::mixed_signs: return "MixedSigns";
    case errc::cell_not_in_grid: return "CellNotInGrid";
    case errc::no_arrangement: return "NoArrangement";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::unsupported_mode: return "UnsupportedMode";
    case errc::bad_request: return "BadRequest";
    }
    return "Unknown";
}

// Invalid input or an operation that is not defined for the given mode.
class domain_error : public std::runtime_error {
public:
    domain_error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Raised when an exhaustive enumeration would exceed the configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg)
        : std::runtime_error("BudgetExceeded: " + msg) {}
};

// Mirror of an index within {1, ..., 2d}: j and mirror_index(j, d) sum to 2d+1.
inline int mirror_index(int j, int d) {
    if (d < 1 || j < 1 || j > 2 * d)
        throw domain_error(errc::out_of_range,
                           "index " + std::to_string(j) + " outside [1, " +
                               std::to_string(2 * d) + "]");
    return 2 * d + 1 - j;
}

} // namespace richmult
