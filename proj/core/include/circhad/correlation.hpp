#pragma once

#include "circhad/bit_sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace circhad {

/// (P_X(0), ..., P_X(n-1)) for one sequence; constant on its rotation orbit.
struct AutocorrelationVector {
    std::size_t n = 0;
    std::vector<std::int64_t> values;

    std::int64_t sum() const noexcept;
    /// True when every off-peak value is zero.
    bool is_perfect() const noexcept;

    friend bool operator==(const AutocorrelationVector&, const AutocorrelationVector&) = default;
};

/// sum_i X[i] * Y[(i + k) mod n] for +/-1 sequences of equal length.
std::int64_t periodic_correlation(const BitSequence& x, const BitSequence& y, std::int64_t k);

/// P_X(k) via 2 * weight(X * C^k X) - n.
std::int64_t autocorrelation_at(const BitSequence& x, std::int64_t k);

/// Full vector. Computed by the popcount path and by a direct signed sum;
/// throws InvariantViolation if the two disagree.
AutocorrelationVector autocorrelation_vector(const BitSequence& x);

/// i_k = (P_X(k) - n + 4a) / 4 with a = weight(X). Always an integer in [0, a];
/// anything else throws InvariantViolation.
std::size_t shift_index(const BitSequence& x, std::int64_t k);

struct PlaneCheck {
    std::int64_t lhs = 0;  // sum_k P_X(k)
    std::int64_t rhs = 0;  // (2a - n)^2

    bool holds() const noexcept { return lhs == rhs; }
};

PlaneCheck theta_plane_check(const BitSequence& x);

}  // namespace circhad
