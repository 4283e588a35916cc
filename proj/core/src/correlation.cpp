#include "circhad/correlation.hpp"

#include "circhad/errors.hpp"

#include <algorithm>
#include <bit>

namespace circhad {

namespace {

std::int64_t signed_sum(const BitSequence& x, const BitSequence& y, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(x.size());
    const std::int64_t shift = ((k % n) + n) % n;
    std::int64_t total = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        total += x.value(static_cast<std::size_t>(i)) * y.value(static_cast<std::size_t>((i + shift) % n));
    }
    return total;
}

std::int64_t popcount_correlation(const BitSequence& x, const BitSequence& y, std::int64_t k) {
    const BitSequence product = pointwise_mul(x, cyclic_shift(y, k));
    std::int64_t agree = 0;
    for (std::uint64_t w : product.words()) {
        agree += std::popcount(w);
    }
    return 2 * agree - static_cast<std::int64_t>(x.size());
}

}  // namespace

std::int64_t AutocorrelationVector::sum() const noexcept {
    std::int64_t total = 0;
    for (auto v : values) {
        total += v;
    }
    return total;
}

bool AutocorrelationVector::is_perfect() const noexcept {
    return std::all_of(values.begin() + (values.empty() ? 0 : 1), values.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t periodic_correlation(const BitSequence& x, const BitSequence& y, std::int64_t k) {
    if (x.size() != y.size()) {
        throw InvalidArgument("periodic_correlation: sequence lengths differ");
    }
    return popcount_correlation(x, y, k);
}

std::int64_t autocorrelation_at(const BitSequence& x, std::int64_t k) { return popcount_correlation(x, x, k); }

AutocorrelationVector autocorrelation_vector(const BitSequence& x) {
    AutocorrelationVector out{x.size(), std::vector<std::int64_t>(x.size())};
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto sk = static_cast<std::int64_t>(k);
        const std::int64_t fast = popcount_correlation(x, x, sk);
        const std::int64_t direct = signed_sum(x, x, sk);
        if (fast != direct) {
            throw InvariantViolation("autocorrelation paths disagree at k=" + std::to_string(k) + " for " + format(x));
        }
        out.values[k] = fast;
    }
    return out;
}

std::size_t shift_index(const BitSequence& x, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(x.size());
    const auto a = static_cast<std::int64_t>(weight(x));
    const std::int64_t numerator = autocorrelation_at(x, k) - n + 4 * a;
    if (numerator % 4 != 0) {
        throw InvariantViolation("shift index is not integral for " + format(x) + " at k=" + std::to_string(k));
    }
    const std::int64_t i = numerator / 4;
    if (i < 0 || i > a) {
        throw InvariantViolation("shift index " + std::to_string(i) + " outside [0, " + std::to_string(a) + "]");
    }
    return static_cast<std::size_t>(i);
}

PlaneCheck theta_plane_check(const BitSequence& x) {
    const auto n = static_cast<std::int64_t>(x.size());
    const auto a = static_cast<std::int64_t>(weight(x));
    return PlaneCheck{autocorrelation_vector(x).sum(), (2 * a - n) * (2 * a - n)};
}

}  // namespace circhad
