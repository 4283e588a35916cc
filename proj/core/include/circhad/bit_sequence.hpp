#pragma once

#include "circhad/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circhad {

/// A length-n sequence over {+1, -1}, packed little-endian into 64-bit words.
///
/// Bit i of word j holds index 64j + i; a set bit is '+' (+1), a clear bit
/// is '-' (-1). Bits at positions >= n are always zero. Values are immutable
/// once constructed; every operation below returns a new sequence.
class BitSequence {
public:
    static constexpr std::size_t kWordBits = 64;

    /// All-minus sequence of length n (n >= 1).
    explicit BitSequence(std::size_t n);

    static BitSequence all_plus(std::size_t n);
    static BitSequence all_minus(std::size_t n) { return BitSequence(n); }
    /// Takes ownership of packed words; bits past n are cleared.
    static BitSequence from_words(std::size_t n, std::vector<std::uint64_t> words);
    /// '+' exactly at the listed positions.
    static BitSequence from_support(std::size_t n, std::span<const std::size_t> plus_positions);

    std::size_t size() const noexcept { return n_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool is_plus(std::size_t i) const noexcept {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    int value(std::size_t i) const noexcept { return is_plus(i) ? 1 : -1; }

    /// Positions holding '+', ascending.
    std::vector<std::size_t> support() const;

    friend bool operator==(const BitSequence&, const BitSequence&) = default;

    /// Lexicographic from index 0 with '+' < '-'; matches the ordering of the
    /// text encodings because '+' sorts before '-' in ASCII.
    friend std::strong_ordering operator<=>(const BitSequence& a, const BitSequence& b);

private:
    BitSequence(std::size_t n, std::vector<std::uint64_t> words);
    void mask_tail() noexcept;

    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

/// Hamming weight: the number of '+' symbols.
std::size_t weight(const BitSequence& x) noexcept;

/// Symbolwise product of +/-1 entries (XNOR of the encodings).
std::vector<std::uint64_t> pointwise_mul_words(const BitSequence& x, const BitSequence& y);
BitSequence pointwise_mul(const BitSequence& x, const BitSequence& y);

/// Flips every symbol (multiplication by the all-minus sequence).
BitSequence negate(const BitSequence& x);

/// result[i] = x[(i + k) mod n]; k may be negative or exceed n.
BitSequence cyclic_shift(const BitSequence& x, std::int64_t k);

/// (B, C): B occupies indices 0..|B|-1.
BitSequence concat(const BitSequence& first, const BitSequence& second);

/// Inverse of concat for even length.
std::pair<BitSequence, BitSequence> split_halves(const BitSequence& x);

struct WeightClass {
    std::size_t n = 0;
    std::size_t k = 0;

    BigInt cardinality() const { return binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)); }
    bool contains(const BitSequence& x) const noexcept { return x.size() == n && weight(x) == k; }
};

/// The cyclic orbit of a sequence under rotation.
struct Orbit {
    BitSequence canonical;  // minimal rotation under operator<=>
    std::size_t size = 1;   // number of distinct rotations; divides n
};

Orbit orbit_of(const BitSequence& x);

/// Smallest p > 0 with cyclic_shift(x, p) == x.
std::size_t period(const BitSequence& x);

// ---------------------------------------------------------------------------
// Weight-class enumeration in colexicographic order of the '+' support.
//
// Colex order on k-subsets of {0..n-1} coincides with numeric order of the
// packed words read as a single integer, so the successor is Gosper's step
// generalized to arbitrary length. Ranks are 64-bit; classes whose
// cardinality does not fit are rejected.
// ---------------------------------------------------------------------------

/// Colex rank of x within its weight class.
std::uint64_t rank(const BitSequence& x);

/// Sequence at colex rank r of the weight-k class of length n.
BitSequence unrank(std::size_t n, std::size_t k, std::uint64_t r);

/// Cardinality of the weight class as a 64-bit count; throws when it overflows.
std::uint64_t weight_class_size(std::size_t n, std::size_t k);

/// Single-consumer stream over ranks [first, last) of a weight class.
class WeightClassEnumerator {
public:
    WeightClassEnumerator(std::size_t n, std::size_t k);
    WeightClassEnumerator(std::size_t n, std::size_t k, std::uint64_t first, std::uint64_t last);

    /// Next sequence, or nullopt once the interval is exhausted.
    std::optional<BitSequence> next();

    std::uint64_t position() const noexcept { return rank_; }
    std::uint64_t end_rank() const noexcept { return last_; }

private:
    void advance_support();

    std::size_t n_;
    std::size_t k_;
    std::uint64_t rank_;
    std::uint64_t last_;
    std::vector<std::size_t> support_;
};

// ---------------------------------------------------------------------------
// Text encodings.
//   "+-++"           index 0 is leftmost
//   "n=70:ff:3f"     length, then each 64-bit word (word 0 first) in lowercase hex
// ---------------------------------------------------------------------------

std::string format(const BitSequence& x);
BitSequence parse(std::string_view text);

std::string format_hex(const BitSequence& x);
BitSequence parse_hex(std::string_view text);

/// Accepts either encoding.
BitSequence parse_any(std::string_view text);

}  // namespace circhad
