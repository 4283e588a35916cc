#include "circhad/errors.hpp"
#include "circhad/hadsearch.hpp"

#include <cmath>

namespace circhad {

namespace {

void require_m(std::size_t m, bool allow_even_m) {
    if (m == 0) {
        throw InvalidArgument("m must be positive");
    }
    if (m % 2 == 0 && !allow_even_m) {
        throw InvalidArgument("m must be odd (got " + std::to_string(m) + ")");
    }
}

std::vector<SplitConstraint> splits_over(std::size_t m, Sign sign, std::size_t lo, std::size_t hi) {
    std::vector<SplitConstraint> out;
    const std::size_t h = 2 * m * m;
    for (Sign family : {Sign::minus, Sign::plus}) {
        if (sign != Sign::both && sign != family) {
            continue;
        }
        for (std::size_t a = lo; a <= hi; ++a) {
            const std::size_t b = family == Sign::minus ? h - m - a : m + a;
            SplitConstraint s{family, m, a, b};
            if (s.first_weight() <= h && s.second_weight() <= h) {
                out.push_back(s);
            }
        }
    }
    return out;
}

// m with n = 4m^2, or nullopt.
std::optional<std::size_t> order_root(std::size_t n) {
    if (n == 0 || n % 4 != 0) {
        return std::nullopt;
    }
    auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n / 4))));
    if (m * m != n / 4) {
        return std::nullopt;
    }
    return m;
}

}  // namespace

const char* to_string(Sign s) noexcept {
    switch (s) {
    case Sign::minus:
        return "minus";
    case Sign::plus:
        return "plus";
    case Sign::both:
        return "both";
    }
    return "?";
}

Sign parse_sign(std::string_view text) {
    if (text == "minus") {
        return Sign::minus;
    }
    if (text == "plus") {
        return Sign::plus;
    }
    if (text == "both") {
        return Sign::both;
    }
    throw InvalidArgument("unknown sign '" + std::string(text) + "' (expected minus, plus or both)");
}

std::pair<std::size_t, std::size_t> admissible_weights(std::size_t m, bool allow_even_m) {
    require_m(m, allow_even_m);
    return {2 * m * m - m, 2 * m * m + m};
}

std::vector<SplitConstraint> admissible_splits(std::size_t m, Sign sign, bool allow_even_m) {
    require_m(m, allow_even_m);
    return splits_over(m, sign, (m * m - m) / 2, (3 * m * m - m) / 2);
}

std::vector<SplitConstraint> full_splits(std::size_t m, Sign sign, bool allow_even_m) {
    require_m(m, allow_even_m);
    return splits_over(m, sign, 0, 2 * m * m - m);
}

bool is_circulant_hadamard(const BitSequence& x) {
    const std::size_t n = x.size();
    if (n % 2 != 0 && n > 1) {
        return false;  // P_X(k) has the parity of n
    }
    for (std::size_t k = 1; k < n; ++k) {
        if (autocorrelation_at(x, static_cast<std::int64_t>(k)) != 0) {
            return false;
        }
    }
    return true;
}

HalfShiftWitness excluded_by_theorem2(const BitSequence& x) {
    const auto m = order_root(x.size());
    if (!m || *m % 2 == 0) {
        throw InvalidArgument("length " + std::to_string(x.size()) + " is not 4m^2 with m odd");
    }
    if (weight(x) % 2 != 0) {
        throw InvalidArgument("half-shift exclusion applies to even weight only");
    }
    HalfShiftWitness w;
    w.shift = 2 * *m * *m;
    w.product_weight = weight(pointwise_mul(x, cyclic_shift(x, static_cast<std::int64_t>(w.shift))));
    w.correlation = 2 * static_cast<std::int64_t>(w.product_weight) - static_cast<std::int64_t>(x.size());
    if (w.product_weight == w.shift) {
        throw InvariantViolation("even-weight sequence " + format(x) + " has omega(X C^{2m^2} X) = 2m^2");
    }
    return w;
}

SearchSpaceSize search_space_size(std::size_t m, bool allow_even_m) {
    require_m(m, allow_even_m);
    const auto mm = static_cast<std::int64_t>(m);
    const std::int64_t h = 2 * mm * mm;
    SearchSpaceSize out;
    out.reduced = 0;
    for (std::int64_t a = (mm * mm - mm) / 2; a <= (3 * mm * mm - mm) / 2; ++a) {
        out.reduced += binomial(h, a) * binomial(h, h - mm - a);
    }
    out.reduced *= 2;
    out.unreduced = 2 * binomial(2 * h, h - mm);
    return out;
}

DifferenceSetClaim hadamard_to_difference_set(const BitSequence& x) {
    const auto m = order_root(x.size());
    if (!m) {
        throw InvalidArgument("length " + std::to_string(x.size()) + " is not of the form 4m^2");
    }
    const std::size_t mm = *m;
    const std::size_t w = weight(x);
    if (w != 2 * mm * mm - mm && w != 2 * mm * mm + mm) {
        throw InvalidArgument("weight " + std::to_string(w) + " is not 2m^2 -/+ m");
    }
    if (!is_circulant_hadamard(x)) {
        throw InvalidArgument(format(x) + " is not a circulant Hadamard row");
    }
    DifferenceSetClaim claim{4 * mm * mm, 2 * mm * mm - mm, mm * mm - mm, {}};
    const bool use_plus = w == 2 * mm * mm - mm;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.is_plus(i) == use_plus) {
            claim.elements.push_back(i);
        }
    }
    return claim;
}

DifferenceSetVerdict verify_difference_set(const DifferenceSetClaim& claim) {
    if (claim.v == 0) {
        throw InvalidArgument("difference set needs v >= 1");
    }
    if (claim.elements.size() != claim.k) {
        throw InvalidArgument("|D| = " + std::to_string(claim.elements.size()) + " but k = " + std::to_string(claim.k));
    }
    for (std::size_t d : claim.elements) {
        if (d >= claim.v) {
            throw InvalidArgument("element " + std::to_string(d) + " is not a residue mod " + std::to_string(claim.v));
        }
    }
    DifferenceSetVerdict out;
    out.parameters_consistent = claim.parameters_consistent();
    out.histogram.assign(claim.v, 0);
    for (std::size_t d1 : claim.elements) {
        for (std::size_t d2 : claim.elements) {
            ++out.histogram[(d1 + claim.v - d2) % claim.v];
        }
    }
    out.valid = true;
    for (std::size_t g = 1; g < claim.v; ++g) {
        if (out.histogram[g] != claim.lambda) {
            out.valid = false;
        }
    }
    return out;
}

}  // namespace circhad
