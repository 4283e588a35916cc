#include "circhad/bit_sequence.hpp"

#include "circhad/errors.hpp"

#include <limits>

namespace circhad {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binom_saturating(std::size_t m, std::size_t t) {
    return binomial_u64(static_cast<std::int64_t>(m), static_cast<std::int64_t>(t)).value_or(kSaturated);
}

void require_weight(std::size_t n, std::size_t k) {
    if (n == 0) {
        throw InvalidArgument("sequence length must be positive");
    }
    if (k > n) {
        throw InvalidArgument("weight " + std::to_string(k) + " out of range for length " + std::to_string(n));
    }
}

std::vector<std::size_t> unrank_support(std::size_t n, std::size_t k, std::uint64_t r) {
    std::vector<std::size_t> support(k);
    std::size_t c = n;  // exclusive upper bound for the next position
    for (std::size_t i = k; i >= 1; --i) {
        --c;
        while (binom_saturating(c, i) > r) {
            --c;
        }
        r -= binom_saturating(c, i);
        support[i - 1] = c;
    }
    return support;
}

}  // namespace

std::uint64_t weight_class_size(std::size_t n, std::size_t k) {
    require_weight(n, k);
    auto size = binomial_u64(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    if (!size) {
        throw InvalidArgument("weight class (" + std::to_string(n) + ", " + std::to_string(k) +
                              ") is too large for 64-bit ranks");
    }
    return *size;
}

std::uint64_t rank(const BitSequence& x) {
    const auto support = x.support();
    weight_class_size(x.size(), support.size());
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        r += binom_saturating(support[i], i + 1);
    }
    return r;
}

BitSequence unrank(std::size_t n, std::size_t k, std::uint64_t r) {
    const std::uint64_t total = weight_class_size(n, k);
    if (r >= total) {
        throw InvalidArgument("rank " + std::to_string(r) + " out of range [0, " + std::to_string(total) + ")");
    }
    const auto support = unrank_support(n, k, r);
    return BitSequence::from_support(n, support);
}

WeightClassEnumerator::WeightClassEnumerator(std::size_t n, std::size_t k)
    : WeightClassEnumerator(n, k, 0, weight_class_size(n, k)) {}

WeightClassEnumerator::WeightClassEnumerator(std::size_t n, std::size_t k, std::uint64_t first, std::uint64_t last)
    : n_(n), k_(k), rank_(first), last_(last) {
    const std::uint64_t total = weight_class_size(n, k);
    if (first > last || last > total) {
        throw InvalidArgument("rank interval [" + std::to_string(first) + ", " + std::to_string(last) +
                              ") not within [0, " + std::to_string(total) + "]");
    }
    if (first < last) {
        support_ = unrank_support(n, k, first);
    }
}

std::optional<BitSequence> WeightClassEnumerator::next() {
    if (rank_ >= last_) {
        return std::nullopt;
    }
    BitSequence out = BitSequence::from_support(n_, support_);
    ++rank_;
    if (rank_ < last_) {
        advance_support();
    }
    return out;
}

void WeightClassEnumerator::advance_support() {
    // Bump the lowest position that can move up by one without colliding,
    // then pack everything below it down to 0, 1, 2, ...
    std::size_t j = 0;
    while (j + 1 < k_ && support_[j] + 1 == support_[j + 1]) {
        ++j;
    }
    if (support_[j] + 1 >= n_) {
        throw InvariantViolation("colex successor ran past the last combination");
    }
    ++support_[j];
    for (std::size_t i = 0; i < j; ++i) {
        support_[i] = i;
    }
}

}  // namespace circhad
