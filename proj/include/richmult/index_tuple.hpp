#pragma once

#include <algorithm>
#include <vector>

#include "core.hpp"

namespace richmult {

// A strictly increasing d-tuple of column indices inside [1, ambient].
// In symplectic mode the ambient is 2d and the tuple must be isotropic:
// it never contains both j and its mirror 2d+1-j.
class IndexTuple {
public:
    IndexTuple() = default;

    const std::vector<int>& entries() const { return entries_; }
    int d() const { return static_cast<int>(entries_.size()); }
    int ambient() const { return ambient_; }
    Mode mode() const { return mode_; }

    bool contains(int j) const {
        return std::binary_search(entries_.begin(), entries_.end(), j);
    }

    // Sorted complement of the entry set within [1, ambient].
    std::vector<int> complement() const {
        std::vector<int> out;
        out.reserve(ambient_ - d());
        for (int j = 1; j <= ambient_; ++j)
            if (!contains(j)) out.push_back(j);
        return out;
    }

    friend IndexTuple validate_tuple(const std::vector<int>&, int, Mode, int);

private:
    std::vector<int> entries_;
    int ambient_ = 0;
    Mode mode_ = Mode::symplectic;
};

// Validates and constructs an IndexTuple.  `ambient` may be 0, which means
// "use the default": 2d in both modes.  Symplectic mode rejects any other
// ambient size.
inline IndexTuple validate_tuple(const std::vector<int>& seq, int d, Mode mode,
                                 int ambient = 0) {
    if (d < 1)
        throw domain_error(errc::out_of_range, "d must be positive");
    if (static_cast<int>(seq.size()) != d)
        throw domain_error(errc::shape_mismatch,
                           "expected " + std::to_string(d) + " entries, got " +
                               std::to_string(seq.size()));
    if (ambient == 0) ambient = 2 * d;
    if (mode == Mode::symplectic && ambient != 2 * d)
        throw domain_error(errc::shape_mismatch,
                           "symplectic ambient must be 2d = " + std::to_string(2 * d));
    if (ambient < d)
        throw domain_error(errc::shape_mismatch, "ambient smaller than d");

    for (int v : seq)
        if (v < 1 || v > ambient)
            throw domain_error(errc::out_of_range,
                               "entry " + std::to_string(v) + " outside [1, " +
                                   std::to_string(ambient) + "]");
    for (int i = 0; i + 1 < d; ++i)
        if (seq[i] >= seq[i + 1])
            throw domain_error(errc::not_increasing,
                               "entries must be strictly increasing");
    if (mode == Mode::symplectic) {
        for (int v : seq) {
            int m = mirror_index(v, d);
            if (std::find(seq.begin(), seq.end(), m) != seq.end())
                throw domain_error(errc::not_isotropic,
                                   "entries " + std::to_string(v) + " and " +
                                       std::to_string(m) + " are mirrors");
        }
    }

    IndexTuple t;
    t.entries_ = seq;
    t.ambient_ = ambient;
    t.mode_ = mode;
    return t;
}

inline void require_same_shape(const IndexTuple& a, const IndexTuple& b) {
    if (a.d() != b.d() || a.ambient() != b.ambient() || a.mode() != b.mode())
        throw domain_error(errc::shape_mismatch,
                           "tuples have different d, ambient, or mode");
}

// Componentwise comparison of the sorted entry vectors.
inline bool bruhat_leq(const IndexTuple& a, const IndexTuple& b) {
    require_same_shape(a, b);
    for (int i = 0; i < a.d(); ++i)
        if (a.entries()[i] > b.entries()[i]) return false;
    return true;
}

} // namespace richmult
