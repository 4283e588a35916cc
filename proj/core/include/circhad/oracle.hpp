#pragma once

// Brute-force reference implementations. Sequences are plain arrays of +1/-1
// ints and every quantity is computed by explicit enumeration; nothing here
// touches the packed-word code paths it is used to check.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace circhad::oracle {

using Signs = std::vector<int>;

constexpr std::size_t kMaxAlgebraLength = 12;
constexpr std::size_t kMaxSweepLength = 24;

/// Every +/-1 vector of length n, in odometer order.
std::vector<Signs> all_sequences(std::size_t n);

/// Sequences with exactly `plus` entries equal to +1.
std::vector<Signs> weight_class(std::size_t n, std::size_t plus);

int count_plus(const Signs& x);
Signs multiply(const Signs& x, const Signs& y);
std::string to_text(const Signs& x);

/// Direct signed sum of x[i] * x[(i + k) mod n].
std::int64_t autocorrelation(const Signs& x, std::size_t k);

/// Coefficient of a fixed element of T_k in T_i * T_j by explicit
/// convolution, where T_i holds the sequences with i minus signs. Throws if
/// the coefficient is not the same for every element of T_k.
std::uint64_t bf_structure_constant(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

/// { weight(X * Y) : X in G_n(a), Y in G_n(b) }.
std::set<std::size_t> bf_product_support(std::size_t n, std::size_t a, std::size_t b);

/// All circulant Hadamard rows of length n, as +/- text.
std::vector<std::string> bf_exhaustive_hadamard(std::size_t n);

/// Checks sum_k P_X(k) == (2a - n)^2 exhaustively up to length 14 and on
/// `sample_count` seeded random sequences above it.
bool bf_verify_theorem3(std::size_t n, std::uint64_t sample_count, std::uint64_t seed = 1);

/// Number of distinct rotation classes of +/-1 strings of length n.
std::size_t bf_orbit_count(std::size_t n);

}  // namespace circhad::oracle
