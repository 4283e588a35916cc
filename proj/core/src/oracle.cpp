#include "circhad/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace circhad::oracle {

namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
    if (n == 0 || n > limit) {
        throw std::invalid_argument(std::string(what) + ": length " + std::to_string(n) + " outside [1, " +
                                    std::to_string(limit) + "]");
    }
}

// Advances an odometer over {-1, +1}^n; false after the last vector.
bool step(Signs& x) {
    for (int& v : x) {
        if (v == -1) {
            v = 1;
            return true;
        }
        v = -1;
    }
    return false;
}

std::int64_t plane_gap(const Signs& x) {
    const auto n = static_cast<std::int64_t>(x.size());
    std::int64_t lhs = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        lhs += autocorrelation(x, k);
    }
    const std::int64_t a = count_plus(x);
    return lhs - (2 * a - n) * (2 * a - n);
}

}  // namespace

std::vector<Signs> all_sequences(std::size_t n) {
    guard(n, kMaxSweepLength, "all_sequences");
    std::vector<Signs> out;
    Signs x(n, -1);
    do {
        out.push_back(x);
    } while (step(x));
    return out;
}

std::vector<Signs> weight_class(std::size_t n, std::size_t plus) {
    guard(n, kMaxSweepLength, "weight_class");
    std::vector<Signs> out;
    Signs x(n, -1);
    do {
        if (static_cast<std::size_t>(count_plus(x)) == plus) {
            out.push_back(x);
        }
    } while (step(x));
    return out;
}

int count_plus(const Signs& x) {
    int c = 0;
    for (int v : x) {
        if (v == 1) {
            ++c;
        }
    }
    return c;
}

Signs multiply(const Signs& x, const Signs& y) {
    Signs out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] * y[i];
    }
    return out;
}

std::string to_text(const Signs& x) {
    std::string s;
    for (int v : x) {
        s += v == 1 ? '+' : '-';
    }
    return s;
}

std::int64_t autocorrelation(const Signs& x, std::size_t k) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        total += x[i] * x[(i + k) % x.size()];
    }
    return total;
}

std::uint64_t bf_structure_constant(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    guard(n, kMaxAlgebraLength, "bf_structure_constant");
    if (i > n || j > n || k > n) {
        throw std::invalid_argument("bf_structure_constant: index out of range");
    }
    const auto ti = weight_class(n, n - i);
    const auto tj = weight_class(n, n - j);
    std::map<Signs, std::uint64_t> coefficient;
    for (const auto& x : ti) {
        for (const auto& y : tj) {
            Signs z = multiply(x, y);
            if (static_cast<std::size_t>(count_plus(z)) == n - k) {
                ++coefficient[z];
            }
        }
    }
    const auto tk = weight_class(n, n - k);
    const std::uint64_t first = coefficient.count(tk.front()) ? coefficient[tk.front()] : 0;
    for (const auto& z : tk) {
        const std::uint64_t c = coefficient.count(z) ? coefficient[z] : 0;
        if (c != first) {
            throw std::logic_error("coefficient differs across T_k: not a Schur ring partition");
        }
    }
    return first;
}

std::set<std::size_t> bf_product_support(std::size_t n, std::size_t a, std::size_t b) {
    guard(n, kMaxAlgebraLength, "bf_product_support");
    std::set<std::size_t> out;
    for (const auto& x : weight_class(n, a)) {
        for (const auto& y : weight_class(n, b)) {
            out.insert(static_cast<std::size_t>(count_plus(multiply(x, y))));
        }
    }
    return out;
}

std::vector<std::string> bf_exhaustive_hadamard(std::size_t n) {
    guard(n, kMaxSweepLength, "bf_exhaustive_hadamard");
    std::vector<std::string> out;
    Signs x(n, -1);
    do {
        bool perfect = true;
        for (std::size_t k = 1; k < n && perfect; ++k) {
            perfect = autocorrelation(x, k) == 0;
        }
        if (perfect) {
            out.push_back(to_text(x));
        }
    } while (step(x));
    std::sort(out.begin(), out.end());
    return out;
}

bool bf_verify_theorem3(std::size_t n, std::uint64_t sample_count, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("bf_verify_theorem3: length must be positive");
    }
    if (n <= 14) {
        Signs x(n, -1);
        do {
            if (plane_gap(x) != 0) {
                return false;
            }
        } while (step(x));
        return true;
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    Signs x(n);
    for (std::uint64_t s = 0; s < sample_count; ++s) {
        for (int& v : x) {
            v = coin(rng) ? 1 : -1;
        }
        if (plane_gap(x) != 0) {
            return false;
        }
    }
    return true;
}

std::size_t bf_orbit_count(std::size_t n) {
    guard(n, kMaxSweepLength, "bf_orbit_count");
    std::set<std::string> classes;
    Signs x(n, -1);
    do {
        std::string best = to_text(x);
        std::string s = best;
        for (std::size_t r = 1; r < n; ++r) {
            std::rotate(s.begin(), s.begin() + 1, s.end());
            best = std::min(best, s);
        }
        classes.insert(best);
    } while (step(x));
    return classes.size();
}

}  // namespace circhad::oracle
