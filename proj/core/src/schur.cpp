#include "circhad/schur.hpp"

#include "circhad/errors.hpp"

#include <algorithm>
#include <string>

namespace circhad {

namespace {

void require_index(std::size_t n, std::size_t v, const char* name) {
    if (v > n) {
        throw InvalidArgument(std::string(name) + " = " + std::to_string(v) + " out of range [0, " +
                              std::to_string(n) + "]");
    }
}

BigInt binom(std::int64_t m, std::int64_t t) { return binomial(m, t); }

}  // namespace

BigInt structure_constant(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    require_index(n, i, "i");
    require_index(n, j, "j");
    require_index(n, k, "k");
    const auto si = static_cast<std::int64_t>(i);
    const auto sj = static_cast<std::int64_t>(j);
    const auto sk = static_cast<std::int64_t>(k);
    const auto sn = static_cast<std::int64_t>(n);
    if ((si + sj - sk) % 2 != 0) {
        return 0;
    }
    return binom(sk, (sj - si + sk) / 2) * binom(sn - sk, (sj + si - sk) / 2);
}

BigInt structure_constant_by_weights(std::size_t n, std::size_t a, std::size_t b, std::size_t c) {
    require_index(n, a, "a");
    require_index(n, b, "b");
    require_index(n, c, "c");
    return structure_constant(n, n - a, n - b, n - c);
}

bool ProductSupport::contains(std::size_t c) const noexcept {
    return std::binary_search(weights.begin(), weights.end(), c);
}

ProductSupport product_support(std::size_t n, std::size_t a, std::size_t b) {
    require_index(n, a, "a");
    require_index(n, b, "b");
    ProductSupport out{n, a, b, {}};

    // The two closed-form branches cover (a, b) after at most a swap:
    // a + b <= n lands in the first with the smaller operand first, a + b > n
    // in the second with the larger operand first.
    std::size_t x = a;
    std::size_t y = b;
    const bool first_branch = [&] {
        if (x <= n / 2 && x <= y && y <= n - x) {
            return true;
        }
        if (x >= n / 2 + 1 && n - x <= y && y <= x) {
            return false;
        }
        std::swap(x, y);
        if (x <= n / 2 && x <= y && y <= n - x) {
            return true;
        }
        if (x >= n / 2 + 1 && n - x <= y && y <= x) {
            return false;
        }
        throw InvariantViolation("product_support: operands (" + std::to_string(a) + ", " + std::to_string(b) +
                                 ") not covered by either branch");
    }();

    if (first_branch) {
        for (std::size_t i = 0; i <= x; ++i) {
            out.weights.push_back(n - x - y + 2 * i);
        }
    } else {
        for (std::size_t i = 0; i <= n - x; ++i) {
            out.weights.push_back(x + y - n + 2 * i);
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> lemma1_split(std::size_t ambient_length, std::size_t a) {
    if (ambient_length == 0 || ambient_length % 2 != 0) {
        throw InvalidArgument("lemma1_split needs a positive even ambient length, got " +
                              std::to_string(ambient_length));
    }
    require_index(ambient_length, a, "a");
    const std::size_t n = ambient_length / 2;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (a <= n) {
        for (std::size_t i = 0; i <= a; ++i) {
            out.emplace_back(i, a - i);
        }
        return out;
    }
    // Complement of the decomposition of G_{2n}(2n - a), where 2n - a < n.
    for (auto [i, j] : lemma1_split(ambient_length, ambient_length - a)) {
        out.emplace_back(n - i, n - j);
    }
    return out;
}

ParityPartition partition_parity_sets(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("partition_parity_sets needs n >= 1");
    }
    ParityPartition out;
    out.n = n;
    out.even_order = 0;
    out.odd_order = 0;
    for (std::size_t w = 0; w <= n; ++w) {
        const BigInt size = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(w));
        if (w % 2 == 0) {
            out.even_weights.push_back(w);
            out.even_order += size;
        } else {
            out.odd_weights.push_back(w);
            out.odd_order += size;
        }
    }
    return out;
}

const char* to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

}  // namespace circhad
