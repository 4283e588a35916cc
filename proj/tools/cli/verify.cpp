#include "cli/commands.hpp"

#include "circhad/correlation.hpp"
#include "circhad/hadsearch.hpp"
#include "circhad/oracle.hpp"
#include "circhad/schur.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace circhad::cli {

namespace {

std::size_t or_default(std::size_t v, std::size_t fallback) { return v == 0 ? fallback : v; }

std::string set_text(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "}";
}

BitSequence from_signs(const oracle::Signs& x) {
    std::vector<std::size_t> plus;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 1) {
            plus.push_back(i);
        }
    }
    return BitSequence::from_support(x.size(), plus);
}

VerifyResult verify_eq1(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    const std::size_t max_n = or_default(o.max_n, 8);
    std::uint64_t checked = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                for (std::size_t k = 0; k <= n; ++k) {
                    const BigInt fast = structure_constant(n, i, j, k);
                    const std::uint64_t slow = oracle::bf_structure_constant(n, i, j, k);
                    ++checked;
                    if (fast != slow) {
                        r.pass = false;
                        r.lines.push_back("mismatch n=" + std::to_string(n) + " (i,j,k)=(" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) + "): formula " + fast.str() +
                                          " vs convolution " + std::to_string(slow));
                    }
                }
            }
        }
    }
    r.lines.push_back(std::to_string(checked) + " structure constants checked, n <= " + std::to_string(max_n));
    return r;
}

VerifyResult verify_eq2(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    const std::size_t max_n = or_default(o.max_n, 10);
    std::uint64_t checked = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t a = 0; a <= n; ++a) {
            for (std::size_t b = 0; b <= n; ++b) {
                const auto fast = product_support(n, a, b).weights;
                const auto slow = oracle::bf_product_support(n, a, b);
                ++checked;
                if (std::set<std::size_t>(fast.begin(), fast.end()) != slow) {
                    r.pass = false;
                    r.lines.push_back("mismatch n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                      " b=" + std::to_string(b) + ": " + set_text(fast));
                }
            }
        }
    }
    r.lines.push_back(std::to_string(checked) + " product supports checked, n <= " + std::to_string(max_n));
    return r;
}

VerifyResult verify_parity(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    const std::size_t max_n = or_default(o.max_n, 10);
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                for (std::size_t k = 0; k <= n; ++k) {
                    if ((i + j + k) % 2 == 1 && structure_constant(n, i, j, k) != 0) {
                        r.pass = false;
                        r.lines.push_back("nonzero constant with i+j-k odd at n=" + std::to_string(n));
                    }
                }
            }
        }
    }
    r.lines.push_back("parity vanishing checked, n <= " + std::to_string(max_n));
    return r;
}

VerifyResult verify_lemma1(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    const std::size_t max_ambient = or_default(o.max_n, 12);
    for (std::size_t ambient = 2; ambient <= max_ambient; ambient += 2) {
        const std::size_t h = ambient / 2;
        for (std::size_t a = 0; a <= ambient; ++a) {
            // Every sequence of the class falls in exactly one listed product.
            const auto pairs = lemma1_split(ambient, a);
            for (const auto& x : oracle::weight_class(ambient, a)) {
                const oracle::Signs first(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(h));
                const oracle::Signs second(x.begin() + static_cast<std::ptrdiff_t>(h), x.end());
                const std::pair<std::size_t, std::size_t> key{static_cast<std::size_t>(oracle::count_plus(first)),
                                                              static_cast<std::size_t>(oracle::count_plus(second))};
                if (std::count(pairs.begin(), pairs.end(), key) != 1) {
                    r.pass = false;
                    r.lines.push_back("uncovered sequence " + oracle::to_text(x));
                }
            }
            BigInt total = 0;
            for (auto [i, j] : pairs) {
                total += binomial(static_cast<std::int64_t>(h), static_cast<std::int64_t>(i)) *
                         binomial(static_cast<std::int64_t>(h), static_cast<std::int64_t>(j));
            }
            if (total != binomial(static_cast<std::int64_t>(ambient), static_cast<std::int64_t>(a))) {
                r.pass = false;
                r.lines.push_back("cardinality mismatch at 2n=" + std::to_string(ambient) + " a=" + std::to_string(a));
            }
        }
    }
    r.lines.push_back("half-split partition checked, 2n <= " + std::to_string(max_ambient));
    return r;
}

VerifyResult verify_eq6(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    const std::size_t max_n = or_default(o.max_n, 14);
    std::uint64_t checked = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (const auto& signs : oracle::all_sequences(n)) {
            const BitSequence x = from_signs(signs);
            for (std::size_t k = 0; k < n; ++k) {
                shift_index(x, static_cast<std::int64_t>(k));  // throws on failure
                ++checked;
            }
        }
    }
    r.lines.push_back(std::to_string(checked) + " shift indices integral and in [0, a], n <= " +
                      std::to_string(max_n));
    return r;
}

VerifyResult verify_thm2(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    std::uint64_t exhaustive = 0;
    for (const auto& signs : oracle::all_sequences(4)) {
        if (oracle::count_plus(signs) % 2 == 0) {
            excluded_by_theorem2(from_signs(signs));
            ++exhaustive;
        }
    }
    std::mt19937_64 rng(o.seed);
    std::uint64_t sampled = 0;
    while (sampled < o.samples) {
        std::vector<std::uint64_t> words{rng() & ((std::uint64_t{1} << 36) - 1)};
        const BitSequence x = BitSequence::from_words(36, words);
        if (weight(x) % 2 == 0) {
            excluded_by_theorem2(x);
            ++sampled;
        }
    }
    r.lines.push_back(std::to_string(exhaustive) + " even-weight sequences at n=4, " + std::to_string(sampled) +
                      " sampled at n=36: none has omega(X C^{2m^2} X) = 2m^2");
    return r;
}

VerifyResult verify_thm3(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    const std::size_t max_n = or_default(o.max_n, 14);
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (!oracle::bf_verify_theorem3(n, 0)) {
            r.pass = false;
            r.lines.push_back("oracle plane identity fails at n=" + std::to_string(n));
        }
        for (const auto& signs : oracle::all_sequences(n)) {
            if (!theta_plane_check(from_signs(signs)).holds()) {
                r.pass = false;
                r.lines.push_back("plane identity fails for " + oracle::to_text(signs));
            }
        }
    }
    std::mt19937_64 rng(o.seed);
    for (std::uint64_t s = 0; s < o.samples; ++s) {
        const BitSequence x = BitSequence::from_words(36, {rng()});
        if (!theta_plane_check(x).holds()) {
            r.pass = false;
            r.lines.push_back("plane identity fails for " + format(x));
        }
    }
    r.lines.push_back("sum of autocorrelations = (2a-n)^2 for all sequences n <= " + std::to_string(max_n) + " and " +
                      std::to_string(o.samples) + " samples at n=36");
    return r;
}

VerifyResult verify_maximal(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    for (std::size_t t = 1; t <= o.max_t; ++t) {
        const std::size_t n = 4 * t;
        for (Parity p : {Parity::even, Parity::odd}) {
            for (MaximalMode mode : {MaximalMode::members, MaximalMode::all_basic_sets}) {
                const auto sets = complete_maximal_ssets(n, p, mode);
                std::ostringstream os;
                os << "n=" << n << " " << to_string(p)
                   << (mode == MaximalMode::members ? " (condition 1 over members)" : " (condition 1 over all of S)")
                   << ": " << sets.size() << " set(s)";
                for (const auto& s : sets) {
                    os << " " << set_text(s.members);
                }
                const auto maximal = inclusion_maximal(sets);
                os << "; inclusion-maximal:";
                for (const auto& s : maximal) {
                    os << " " << set_text(s.members);
                }
                r.lines.push_back(os.str());
            }
        }
        // Two even sets of orders t and t + 1 are expected.
        const auto even = complete_maximal_ssets(n, Parity::even);
        std::multiset<std::size_t> orders;
        for (const auto& s : even) {
            orders.insert(s.order());
        }
        const bool matches = even.size() == 2 && orders == std::multiset<std::size_t>{t, t + 1};
        if (!matches) {
            r.pass = false;
            r.lines.push_back("FINDING n=" + std::to_string(n) + ": expected two even sets of orders " +
                              std::to_string(t) + " and " + std::to_string(t + 1) + ", found " +
                              std::to_string(even.size()));
        }
    }
    return r;
}

VerifyResult verify_diffset(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    SearchConfig config;
    config.m = o.m;
    const SearchReport report = search(config);
    for (const auto& f : report.found) {
        const auto claim = hadamard_to_difference_set(f.canonical);
        const auto verdict = verify_difference_set(claim);
        r.pass = r.pass && verdict.valid;
        r.lines.push_back(format(f.canonical) + " -> " + set_text(claim.elements) + " (" + std::to_string(claim.v) +
                          "," + std::to_string(claim.k) + "," + std::to_string(claim.lambda) + ") " +
                          (verdict.valid ? "verified" : "NOT a difference set"));
    }
    r.lines.push_back(std::to_string(report.found.size()) + " orbit(s) at m=" + std::to_string(o.m));
    return r;
}

VerifyResult verify_sweep(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    const auto rows = oracle::bf_exhaustive_hadamard(o.n);
    std::set<std::string> orbits;
    std::set<std::size_t> weights;
    for (const auto& row : rows) {
        const BitSequence x = parse(row);
        if (!is_circulant_hadamard(x)) {
            r.pass = false;
            r.lines.push_back("oracle row rejected by the packed predicate: " + row);
        }
        orbits.insert(format(orbit_of(x).canonical));
        weights.insert(weight(x));
    }
    r.lines.push_back(std::to_string(rows.size()) + " sequences / " + std::to_string(orbits.size()) +
                      " orbits, weights " + set_text({weights.begin(), weights.end()}));
    return r;
}

VerifyResult verify_count(const VerifyOptions& o) {
    VerifyResult r{true, {}};
    const SearchSpaceSize s = search_space_size(o.m);
    BigInt full = 0;
    const auto m = static_cast<std::int64_t>(o.m);
    for (std::int64_t a = 0; a <= 2 * m * m; ++a) {
        full += binomial(2 * m * m, a) * binomial(2 * m * m, 2 * m * m - m - a);
    }
    r.pass = 2 * full == s.unreduced && s.reduced <= s.unreduced;
    r.lines.push_back("reduced=" + s.reduced.str() + " unreduced=" + s.unreduced.str() +
                      (r.pass ? "" : " (Vandermonde check failed)"));
    return r;
}

const std::map<std::string, std::function<VerifyResult(const VerifyOptions&)>>& registry() {
    static const std::map<std::string, std::function<VerifyResult(const VerifyOptions&)>> suites{
        {"eq1", verify_eq1},         {"eq2", verify_eq2},       {"parity", verify_parity},
        {"lemma1", verify_lemma1},   {"eq6", verify_eq6},       {"thm2", verify_thm2},
        {"thm3", verify_thm3},       {"maximal", verify_maximal}, {"diffset", verify_diffset},
        {"hadamard-sweep", verify_sweep}, {"count", verify_count},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) {
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

VerifyResult run_verify(const VerifyOptions& options) { return registry().at(options.suite)(options); }

}  // namespace circhad::cli
