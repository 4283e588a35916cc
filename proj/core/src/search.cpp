#include "circhad/errors.hpp"
#include "circhad/hadsearch.hpp"

#include "wide_int.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace circhad {

namespace {

using detail::u128;

constexpr std::size_t kMaxKernelLength = 128;

template <typename Word>
int popcount_word(Word w) noexcept {
    if constexpr (sizeof(Word) == sizeof(std::uint64_t)) {
        return std::popcount(w);
    } else {
        return std::popcount(static_cast<std::uint64_t>(w)) + std::popcount(static_cast<std::uint64_t>(w >> 64));
    }
}

// Off-peak autocorrelation test on a sequence packed into one machine word.
// P_X(k) = n - 2 * popcount(X ^ C^k X), so a zero needs exactly n/2
// disagreements. P_X(k) = P_X(n - k) for real sequences, so k <= n/2 suffices.
template <typename Word>
class PackedKernel {
public:
    PackedKernel(std::size_t n, bool half_first)
        : n_(n), half_(n / 2), half_first_(half_first),
          mask_(n == sizeof(Word) * 8 ? ~Word{0} : (Word{1} << n) - 1) {}

    Word rotate(Word x, std::size_t k) const noexcept { return ((x >> k) | (x << (n_ - k))) & mask_; }

    bool disagrees_by_half(Word x, std::size_t k) const noexcept {
        return static_cast<std::size_t>(popcount_word(x ^ rotate(x, k))) == half_;
    }

    bool perfect(Word x) const noexcept {
        if (half_first_ && !disagrees_by_half(x, half_)) {
            return false;
        }
        for (std::size_t k = 1; k <= half_; ++k) {
            if (half_first_ && k == half_) {
                continue;
            }
            if (!disagrees_by_half(x, k)) {
                return false;
            }
        }
        return true;
    }

private:
    std::size_t n_;
    std::size_t half_;
    bool half_first_;
    Word mask_;
};

// Next word with the same popcount; this is the colex successor of the support.
inline std::uint64_t gosper_next(std::uint64_t x) noexcept {
    const std::uint64_t u = x & (~x + 1);
    const std::uint64_t v = x + u;
    return v | (((v ^ x) / u) >> 2);
}

inline std::uint64_t lowest_bits(std::size_t k) noexcept {
    return k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

struct UnitRange {
    std::size_t split = 0;
    std::uint64_t lo = 0;  // first-half colex ranks [lo, hi)
    std::uint64_t hi = 0;
};

struct Plan {
    std::vector<SplitConstraint> splits;
    std::vector<UnitRange> ranges;
    std::uint64_t total = 0;

    std::pair<std::size_t, std::uint64_t> locate(std::uint64_t unit) const {
        for (const auto& r : ranges) {
            const std::uint64_t len = r.hi - r.lo;
            if (unit < len) {
                return {r.split, r.lo + unit};
            }
            unit -= len;
        }
        throw InvariantViolation("work unit out of range");
    }
};

std::vector<SplitConstraint> derive_splits(const SearchConfig& c) {
    if (!c.splits.empty()) {
        return c.splits;
    }
    const Sign sign = c.use_negation_symmetry && c.sign == Sign::both ? Sign::minus : c.sign;
    return c.filters.restrict_splits ? admissible_splits(c.m, sign, c.allow_even_m)
                                     : full_splits(c.m, sign, c.allow_even_m);
}

Plan make_plan(const SearchConfig& c) {
    Plan plan;
    plan.splits = derive_splits(c);
    for (std::size_t s = 0; s < plan.splits.size(); ++s) {
        const auto& split = plan.splits[s];
        const std::uint64_t size = weight_class_size(split.half_length(), split.first_weight());
        const auto lo = static_cast<std::uint64_t>(u128{size} * c.chunk.index / c.chunk.total);
        const auto hi = static_cast<std::uint64_t>(u128{size} * (c.chunk.index + 1) / c.chunk.total);
        plan.ranges.push_back(UnitRange{s, lo, hi});
        plan.total += hi - lo;
    }
    return plan;
}

template <typename Word>
struct UnitResult {
    std::uint64_t tested = 0;
    std::vector<Word> hits;
};

template <typename Word>
void run_unit(const PackedKernel<Word>& kernel, const SplitConstraint& split, std::uint64_t first_rank,
              UnitResult<Word>& out) {
    const std::size_t h = split.half_length();
    const std::uint64_t first = unrank(h, split.first_weight(), first_rank).words()[0];
    const std::uint64_t count = weight_class_size(h, split.second_weight());
    std::uint64_t second = lowest_bits(split.second_weight());
    for (std::uint64_t i = 0; i < count; ++i) {
        const Word x = Word{first} | (Word{second} << h);
        if (kernel.perfect(x)) {
            out.hits.push_back(x);
        }
        if (i + 1 < count) {
            second = gosper_next(second);
        }
    }
    out.tested += count;
}

template <typename Word>
BitSequence unpack(Word x, std::size_t n) {
    std::vector<std::uint64_t> words((n + 63) / 64);
    words[0] = static_cast<std::uint64_t>(x);
    if constexpr (sizeof(Word) > sizeof(std::uint64_t)) {
        if (words.size() > 1) {
            words[1] = static_cast<std::uint64_t>(x >> 64);
        }
    }
    return BitSequence::from_words(n, std::move(words));
}

bool cancelled(const SearchConfig& c) { return c.cancel != nullptr && c.cancel->load(std::memory_order_relaxed); }

template <typename Word>
std::vector<BitSequence> drive(const SearchConfig& config, const Plan& plan, std::size_t n, SearchReport& report) {
    const PackedKernel<Word> kernel(n, config.filters.half_shift_first);
    std::uint64_t processed = config.resume_from;
    const std::uint64_t budget_end =
        config.stop_after ? std::min(plan.total, processed + *config.stop_after) : plan.total;
    const unsigned jobs = std::max(1u, config.jobs);
    const std::uint64_t round_size = jobs == 1 ? 64 : std::uint64_t{jobs} * 16;

    std::vector<BitSequence> hits;
    while (processed < budget_end && !cancelled(config)) {
        const std::uint64_t round_begin = processed;
        const std::uint64_t round_len = std::min(round_size, budget_end - round_begin);
        std::vector<char> done(round_len, 0);
        std::atomic<std::uint64_t> next{0};
        std::vector<UnitResult<Word>> results(jobs);

        auto worker = [&](unsigned id) {
            for (;;) {
                if (cancelled(config)) {
                    return;
                }
                const std::uint64_t offset = next.fetch_add(1, std::memory_order_relaxed);
                if (offset >= round_len) {
                    return;
                }
                const auto [split, rank] = plan.locate(round_begin + offset);
                run_unit(kernel, plan.splits[split], rank, results[id]);
                done[offset] = 1;
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(jobs);
            for (unsigned id = 0; id < jobs; ++id) {
                pool.emplace_back(worker, id);
            }
        }

        for (auto& r : results) {
            report.candidates_tested += r.tested;
            for (Word x : r.hits) {
                hits.push_back(unpack(x, n));
            }
        }
        const auto prefix = static_cast<std::uint64_t>(std::find(done.begin(), done.end(), 0) - done.begin());
        processed = round_begin + prefix;
        if (prefix < round_len) {
            break;
        }
    }
    report.units_done = processed;
    return hits;
}

FoundOrbit describe(const BitSequence& canonical, std::size_t orbit_size) {
    FoundOrbit f{canonical, weight(canonical), orbit_size, autocorrelation_vector(canonical)};
    const auto n = static_cast<std::int64_t>(canonical.size());
    const auto a = static_cast<std::int64_t>(f.weight);
    if (!f.autocorrelation.is_perfect() || f.autocorrelation.values[0] != n) {
        throw InvariantViolation("search kernel accepted a non-Hadamard row " + format(canonical));
    }
    // Sum of the vector is (2a - n)^2; for a perfect row it is exactly n.
    if (f.autocorrelation.sum() != (2 * a - n) * (2 * a - n) || f.autocorrelation.sum() != n) {
        throw InvariantViolation("plane checksum failed for " + format(canonical));
    }
    return f;
}

}  // namespace

void validate(const SearchConfig& c) {
    admissible_weights(c.m, c.allow_even_m);
    if (c.chunk.total == 0 || c.chunk.index >= c.chunk.total) {
        throw InvalidArgument("chunk " + std::to_string(c.chunk.index) + "/" + std::to_string(c.chunk.total) +
                              " is out of range");
    }
    if (c.jobs == 0) {
        throw InvalidArgument("jobs must be at least 1");
    }
    const std::size_t n = 4 * c.m * c.m;
    if (n > kMaxKernelLength) {
        throw InvalidArgument("order 4m^2 = " + std::to_string(n) + " exceeds the supported search length " +
                              std::to_string(kMaxKernelLength));
    }
    for (const auto& s : c.splits) {
        if (s.m != c.m || s.family == Sign::both || s.first_weight() > s.half_length() ||
            s.second_weight() > s.half_length()) {
            throw InvalidArgument("split override does not describe halves of length 2m^2");
        }
    }
}

SearchReport search(const SearchConfig& config) {
    validate(config);
    const auto started = std::chrono::steady_clock::now();
    const Plan plan = make_plan(config);
    if (config.resume_from > plan.total) {
        throw InvalidArgument("checkpoint " + std::to_string(config.resume_from) + " exceeds the chunk's " +
                              std::to_string(plan.total) + " work units");
    }

    SearchReport report;
    report.m = config.m;
    report.n = 4 * config.m * config.m;
    report.sign = config.sign;
    report.chunk = config.chunk;
    report.splits = plan.splits;
    report.units_total = plan.total;

    std::vector<BitSequence> hits = report.n <= 64 ? drive<std::uint64_t>(config, plan, report.n, report)
                                                   : drive<u128>(config, plan, report.n, report);
    report.completed = report.units_done == report.units_total;

    const bool add_negations = config.use_negation_symmetry && config.sign == Sign::both && config.splits.empty();
    std::map<BitSequence, std::size_t> orbits;
    for (const auto& x : hits) {
        Orbit o = orbit_of(x);
        orbits.emplace(std::move(o.canonical), o.size);
        if (add_negations) {
            Orbit flipped = orbit_of(negate(x));
            orbits.emplace(std::move(flipped.canonical), flipped.size);
        }
    }
    for (const auto& [canonical, size] : orbits) {
        report.found.push_back(describe(canonical, size));
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

SearchReport merge_reports(std::span<const SearchReport> reports) {
    if (reports.empty()) {
        throw InvalidArgument("merge_reports needs at least one report");
    }
    SearchReport out;
    out.m = reports.front().m;
    out.n = reports.front().n;
    out.sign = reports.front().sign;
    out.chunk = Chunk{0, 1};
    out.splits = reports.front().splits;
    out.completed = true;
    std::map<BitSequence, FoundOrbit> merged;
    for (const auto& r : reports) {
        if (r.m != out.m || r.sign != out.sign) {
            throw InvalidArgument("cannot merge reports for different searches");
        }
        out.candidates_tested += r.candidates_tested;
        out.units_done += r.units_done;
        out.units_total += r.units_total;
        out.completed = out.completed && r.completed;
        out.elapsed_seconds += r.elapsed_seconds;
        for (const auto& f : r.found) {
            merged.emplace(f.canonical, f);
        }
    }
    for (auto& [key, f] : merged) {
        out.found.push_back(std::move(f));
    }
    return out;
}

std::string to_json_record(const FoundOrbit& orbit, const SearchReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["weight"] = orbit.weight;
    j["sequence"] = format(orbit.canonical);
    j["autocorrelation"] = orbit.autocorrelation.values;
    j["orbit_size"] = orbit.orbit_size;
    j["chunk"] = {report.chunk.index, report.chunk.total};
    return j.dump();
}

std::string to_json_summary(const SearchReport& report) {
    nlohmann::ordered_json s;
    s["m"] = report.m;
    s["n"] = report.n;
    s["sign"] = to_string(report.sign);
    s["chunk"] = {report.chunk.index, report.chunk.total};
    s["splits"] = report.splits.size();
    s["candidates_tested"] = report.candidates_tested;
    s["orbits_found"] = report.found.size();
    s["units_done"] = report.units_done;
    s["units_total"] = report.units_total;
    s["completed"] = report.completed;
    nlohmann::ordered_json j;
    j["summary"] = std::move(s);
    return j.dump();
}

std::string to_text_record(const FoundOrbit& orbit) {
    std::ostringstream os;
    os << format(orbit.canonical) << " weight=" << orbit.weight << " orbit_size=" << orbit.orbit_size
       << " autocorrelation=";
    for (std::size_t k = 0; k < orbit.autocorrelation.values.size(); ++k) {
        os << (k ? " " : "") << orbit.autocorrelation.values[k];
    }
    return os.str();
}

std::optional<std::uint64_t> read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (text.empty() || text.back() != '\n') {
        throw InvalidArgument("checkpoint " + path.string() + " is not newline-terminated");
    }
    text.pop_back();
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw InvalidArgument("checkpoint " + path.string() + " does not hold a decimal unit count");
    }
    return std::stoull(text);
}

void write_checkpoint(const std::filesystem::path& path, std::uint64_t units_done) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << units_done << '\n';
        if (!out) {
            throw InvalidArgument("cannot write checkpoint " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace circhad
