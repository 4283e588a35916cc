#include "circhad/errors.hpp"
#include "circhad/schur.hpp"

#include <algorithm>

namespace circhad {

namespace {

constexpr std::size_t kMaxCandidates = 24;

void require_multiple_of_four(std::size_t n) {
    if (n == 0 || n % 4 != 0) {
        throw InvalidArgument("ambient length must be a positive multiple of 4, got " + std::to_string(n));
    }
}

bool contains_all(const ProductSupport& s, const std::vector<std::size_t>& weights) {
    return std::all_of(weights.begin(), weights.end(), [&](std::size_t w) { return s.contains(w); });
}

// Condition 1: every product of two basic sets from `pool` covers max S.
bool covers_largest(std::size_t n, const std::vector<std::size_t>& pool, const std::vector<std::size_t>& largest) {
    for (std::size_t x : pool) {
        for (std::size_t y : pool) {
            if (y < x) {
                continue;
            }
            if (!contains_all(product_support(n, x, y), largest)) {
                return false;
            }
        }
    }
    return true;
}

// Condition 2: no outside G(c) with G(c)G(a) >= G(b) and G(c)^2 >= G(a).
bool no_outside_absorber(std::size_t n, const std::vector<std::size_t>& members) {
    for (std::size_t c = 0; c <= n; ++c) {
        if (std::binary_search(members.begin(), members.end(), c)) {
            continue;
        }
        const ProductSupport square = product_support(n, c, c);
        for (std::size_t a : members) {
            if (!square.contains(a)) {
                continue;
            }
            const ProductSupport with_a = product_support(n, c, a);
            for (std::size_t b : members) {
                if (with_a.contains(b)) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

std::pair<std::size_t, std::size_t> admissible_weight_band(std::size_t n) {
    require_multiple_of_four(n);
    const std::size_t t = n / 4;
    return {t, 3 * t};
}

std::vector<std::size_t> largest_basic_set_weights(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("length must be positive");
    }
    // binomial(n, w) peaks at floor(n/2) and ceil(n/2).
    if (n % 2 == 0) {
        return {n / 2};
    }
    return {n / 2, n / 2 + 1};
}

std::vector<MaximalSSet> complete_maximal_ssets(std::size_t n, Parity parity, MaximalMode mode) {
    const auto [lo, hi] = admissible_weight_band(n);
    const std::size_t want = parity == Parity::even ? 0 : 1;
    std::vector<std::size_t> candidates;
    for (std::size_t w = lo; w <= hi; ++w) {
        if (w % 2 == want) {
            candidates.push_back(w);
        }
    }
    if (candidates.size() > kMaxCandidates) {
        throw InvalidArgument("complete_maximal_ssets: " + std::to_string(candidates.size()) +
                              " candidate basic sets exceeds the exhaustive limit");
    }

    const auto largest = largest_basic_set_weights(n);
    std::vector<std::size_t> all_weights(n + 1);
    for (std::size_t w = 0; w <= n; ++w) {
        all_weights[w] = w;
    }
    const bool ring_wide = mode == MaximalMode::all_basic_sets;
    const bool ring_condition = ring_wide && covers_largest(n, all_weights, largest);

    std::vector<MaximalSSet> out;
    const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if ((mask >> i) & 1u) {
                members.push_back(candidates[i]);
            }
        }
        const bool cond1 = ring_wide ? ring_condition : covers_largest(n, members, largest);
        if (cond1 && no_outside_absorber(n, members)) {
            out.push_back(MaximalSSet{n, parity, std::move(members)});
        }
    }
    std::sort(out.begin(), out.end(), [](const MaximalSSet& x, const MaximalSSet& y) {
        return std::pair(x.order(), x.members) < std::pair(y.order(), y.members);
    });
    return out;
}

std::vector<MaximalSSet> inclusion_maximal(const std::vector<MaximalSSet>& sets) {
    std::vector<MaximalSSet> out;
    for (const auto& s : sets) {
        const bool dominated = std::any_of(sets.begin(), sets.end(), [&](const MaximalSSet& other) {
            return other.order() > s.order() &&
                   std::includes(other.members.begin(), other.members.end(), s.members.begin(), s.members.end());
        });
        if (!dominated) {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace circhad
