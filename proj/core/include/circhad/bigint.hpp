#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace circhad {

using BigInt = boost::multiprecision::cpp_int;

// binomial(m, t) with the convention binomial(m, t) = 0 for t < 0 or t > m.
BigInt binomial(std::int64_t m, std::int64_t t);

// Same, but nullopt when the value does not fit in 64 bits.
std::optional<std::uint64_t> binomial_u64(std::int64_t m, std::int64_t t);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace circhad
