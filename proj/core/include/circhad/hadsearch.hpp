#pragma once

// Circulant Hadamard search over Z_2^n with n = 4m^2.
//
// A circulant +/-1 matrix is Hadamard exactly when its first row X has every
// off-peak periodic autocorrelation equal to zero. Only two weights survive
// the weight-class argument, 2m^2 - m and 2m^2 + m, and each is searched as
// X = (B, C) over half-weight pairs drawn from a restricted band.

#include "circhad/bigint.hpp"
#include "circhad/bit_sequence.hpp"
#include "circhad/correlation.hpp"

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace circhad {

/// Which admissible weight: minus is 2m^2 - m, plus is 2m^2 + m.
enum class Sign { minus, plus, both };

const char* to_string(Sign s) noexcept;
Sign parse_sign(std::string_view text);

/// One product G_{2m^2}(first) x G_{2m^2}(second) to enumerate.
///
/// `a` and `b` are the family parameters: for the minus family the half
/// weights are (a, b) with a + b = 2m^2 - m; the plus family is the symbol
/// flip of the minus family, giving half weights (2m^2 - a, b) with b = m + a.
struct SplitConstraint {
    Sign family = Sign::minus;
    std::size_t m = 1;
    std::size_t a = 0;
    std::size_t b = 0;

    std::size_t half_length() const noexcept { return 2 * m * m; }
    std::size_t first_weight() const noexcept { return family == Sign::plus ? half_length() - a : a; }
    std::size_t second_weight() const noexcept { return b; }
    std::size_t total_weight() const noexcept { return first_weight() + second_weight(); }

    friend bool operator==(const SplitConstraint&, const SplitConstraint&) = default;
};

/// {2m^2 - m, 2m^2 + m}. Even m is rejected unless allow_even_m.
std::pair<std::size_t, std::size_t> admissible_weights(std::size_t m, bool allow_even_m = false);

/// Splits inside the restricted band (m^2 - m)/2 <= a <= (3m^2 - m)/2.
std::vector<SplitConstraint> admissible_splits(std::size_t m, Sign sign, bool allow_even_m = false);

/// Every half-weight pair of the target weight, without the band restriction.
std::vector<SplitConstraint> full_splits(std::size_t m, Sign sign, bool allow_even_m = false);

bool is_circulant_hadamard(const BitSequence& x);

/// Result of checking omega(X * C^{2m^2} X) against 2m^2 for even-weight X.
struct HalfShiftWitness {
    std::size_t shift = 0;           // 2m^2
    std::size_t product_weight = 0;  // omega(X * C^{2m^2} X)
    std::int64_t correlation = 0;    // P_X(2m^2), nonzero
};

/// Witness that an even-weight X of length 4m^2 (m odd) is not a circulant
/// Hadamard row. Throws InvalidArgument for odd weight or a bad length, and
/// InvariantViolation if the product weight ever equals 2m^2.
HalfShiftWitness excluded_by_theorem2(const BitSequence& x);

struct SearchSpaceSize {
    BigInt reduced;    // 2 * sum over the band of C(2m^2, a) C(2m^2, 2m^2 - m - a)
    BigInt unreduced;  // 2 * C(4m^2, 2m^2 - m)
};

SearchSpaceSize search_space_size(std::size_t m, bool allow_even_m = false);

// ---------------------------------------------------------------------------
// Search driver
// ---------------------------------------------------------------------------

/// i-th of `total` equal colex-rank intervals of every split's first half.
struct Chunk {
    std::uint64_t index = 0;
    std::uint64_t total = 1;

    friend bool operator==(const Chunk&, const Chunk&) = default;
};

struct SearchFilters {
    bool restrict_splits = true;   // band-limited splits instead of all half-weight pairs
    bool half_shift_first = true;  // test P_X(2m^2) before the other shifts
};

struct SearchConfig {
    std::size_t m = 1;
    Sign sign = Sign::both;
    Chunk chunk{};
    SearchFilters filters{};
    bool use_negation_symmetry = false;  // search minus only and add flipped orbits
    bool allow_even_m = false;
    std::vector<SplitConstraint> splits;  // overrides the derived splits when nonempty
    std::uint64_t resume_from = 0;        // work units already completed in this chunk
    std::optional<std::uint64_t> stop_after;  // process at most this many units, then stop
    const std::atomic<bool>* cancel = nullptr;
    unsigned jobs = 1;
};

struct FoundOrbit {
    BitSequence canonical;
    std::size_t weight = 0;
    std::size_t orbit_size = 0;
    AutocorrelationVector autocorrelation;
};

/// A work unit is one (split, first-half rank) pair; units are ordered by
/// split, then by rank. Checkpoints record how many units of the chunk are done.
struct SearchReport {
    std::size_t m = 0;
    std::size_t n = 0;
    Sign sign = Sign::both;
    Chunk chunk{};
    std::vector<SplitConstraint> splits;
    std::uint64_t candidates_tested = 0;
    std::vector<FoundOrbit> found;  // sorted by canonical form, one entry per orbit
    std::uint64_t units_done = 0;
    std::uint64_t units_total = 0;
    bool completed = false;
    double elapsed_seconds = 0.0;
};

/// Validates a config; throws InvalidArgument with the reason.
void validate(const SearchConfig& config);

SearchReport search(const SearchConfig& config);

/// Union of found orbits and sum of counts. Reports must share m and sign.
SearchReport merge_reports(std::span<const SearchReport> reports);

/// One JSON object per line, keys in the order
/// n, m, weight, sequence, autocorrelation, orbit_size, chunk.
std::string to_json_record(const FoundOrbit& orbit, const SearchReport& report);
std::string to_json_summary(const SearchReport& report);
std::string to_text_record(const FoundOrbit& orbit);

/// Checkpoint file: decimal unit count, newline-terminated.
std::optional<std::uint64_t> read_checkpoint(const std::filesystem::path& path);
void write_checkpoint(const std::filesystem::path& path, std::uint64_t units_done);

// ---------------------------------------------------------------------------
// Difference sets in Z_v
// ---------------------------------------------------------------------------

struct DifferenceSetClaim {
    std::size_t v = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
    std::vector<std::size_t> elements;  // residues mod v, ascending

    /// k(k - 1) = lambda (v - 1)
    bool parameters_consistent() const noexcept { return k * (k - 1) == lambda * (v - 1); }
};

/// D from the '+' positions when weight is 2m^2 - m, from the '-' positions
/// when it is 2m^2 + m. Claims (4m^2, 2m^2 - m, m^2 - m).
DifferenceSetClaim hadamard_to_difference_set(const BitSequence& x);

struct DifferenceSetVerdict {
    bool valid = false;
    bool parameters_consistent = false;
    std::vector<std::uint64_t> histogram;  // histogram[g] = #{(d1, d2) : d1 - d2 = g mod v}
};

DifferenceSetVerdict verify_difference_set(const DifferenceSetClaim& claim);

}  // namespace circhad
