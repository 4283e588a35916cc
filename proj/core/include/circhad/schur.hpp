#pragma once

// The Schur ring of Z_2^n whose basic sets are the Hamming-weight classes.
//
// Two index conventions are in play. Weights count '+' symbols: G_n(a) is the
// set of length-n sequences with weight a. Basic-set indices count '-'
// symbols: T_i = G_n(n - i), so T_0 = {all-plus} is the identity cell.

#include "circhad/bigint.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace circhad {

/// Coefficient of any fixed element of T_k in the group-algebra product
/// T_i * T_j. Zero when i + j - k is odd.
BigInt structure_constant(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

/// Same constant in weight coordinates: the number of pairs
/// (X, Y) in G_n(a) x G_n(b) with X * Y equal to a fixed Z in G_n(c).
BigInt structure_constant_by_weights(std::size_t n, std::size_t a, std::size_t b, std::size_t c);

/// Weights c with G_n(c) contained in the set product G_n(a) G_n(b).
struct ProductSupport {
    std::size_t n = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<std::size_t> weights;  // ascending, common parity, step 2

    bool contains(std::size_t c) const noexcept;
};

ProductSupport product_support(std::size_t n, std::size_t a, std::size_t b);

/// Weight pairs (i, j) whose products G_n(i) x G_n(j) partition G_{2n}(a).
/// Takes the ambient (even) length 2n.
std::vector<std::pair<std::size_t, std::size_t>> lemma1_split(std::size_t ambient_length, std::size_t a);

struct ParityPartition {
    std::size_t n = 0;
    std::vector<std::size_t> even_weights;
    std::vector<std::size_t> odd_weights;
    BigInt even_order;  // |E_n|
    BigInt odd_order;   // |O_n|
};

ParityPartition partition_parity_sets(std::size_t n);

// ---------------------------------------------------------------------------
// Complete maximal S-sets over Z_2^{4t}.
// ---------------------------------------------------------------------------

enum class Parity { even, odd };

/// Condition 1 of the definition quantifies either over the members of the
/// candidate (the default) or over every basic set of the ring.
enum class MaximalMode { members, all_basic_sets };

struct MaximalSSet {
    std::size_t n = 0;
    Parity parity = Parity::even;
    std::vector<std::size_t> members;  // ascending weights

    std::size_t order() const noexcept { return members.size(); }
};

/// Inclusive weight band [t, 3t] for n = 4t.
std::pair<std::size_t, std::size_t> admissible_weight_band(std::size_t n);

/// Weights of the largest basic sets (all maximum-cardinality classes).
std::vector<std::size_t> largest_basic_set_weights(std::size_t n);

/// Every nonempty union of basic sets drawn from the given parity within the
/// band that satisfies both conditions of the definition.
std::vector<MaximalSSet> complete_maximal_ssets(std::size_t n, Parity parity,
                                                MaximalMode mode = MaximalMode::members);

/// Drops sets strictly contained in another set of the list.
std::vector<MaximalSSet> inclusion_maximal(const std::vector<MaximalSSet>& sets);

const char* to_string(Parity p) noexcept;

}  // namespace circhad
