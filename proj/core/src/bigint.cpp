#include "circhad/bigint.hpp"

#include "wide_int.hpp"

#include <algorithm>
#include <limits>

namespace circhad {

BigInt binomial(std::int64_t m, std::int64_t t) {
    if (m < 0 || t < 0 || t > m) {
        return 0;
    }
    t = std::min(t, m - t);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= t; ++i) {
        result *= m - t + i;
        result /= i;
    }
    return result;
}

std::optional<std::uint64_t> binomial_u64(std::int64_t m, std::int64_t t) {
    if (m < 0 || t < 0 || t > m) {
        return 0;
    }
    t = std::min(t, m - t);
    // C(m-t+i, i) grows monotonically in i, so the first overflow is final.
    detail::u128 result = 1;
    for (std::int64_t i = 1; i <= t; ++i) {
        result = result * static_cast<detail::u128>(m - t + i) / static_cast<detail::u128>(i);
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(result);
}

}  // namespace circhad
