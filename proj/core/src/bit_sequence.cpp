#include "circhad/bit_sequence.hpp"

#include "circhad/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace circhad {

namespace {

constexpr std::size_t kBits = BitSequence::kWordBits;

std::size_t words_for(std::size_t n) { return (n + kBits - 1) / kBits; }

void require_length(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("sequence length must be positive");
    }
}

void require_same_length(const BitSequence& x, const BitSequence& y) {
    if (x.size() != y.size()) {
        throw InvalidArgument("sequence lengths differ: " + std::to_string(x.size()) + " vs " +
                              std::to_string(y.size()));
    }
}

// len <= 64 bits starting at pos, with pos + len <= 64 * words.size().
std::uint64_t read_linear(std::span<const std::uint64_t> words, std::size_t pos, std::size_t len) {
    const std::size_t w = pos / kBits;
    const std::size_t off = pos % kBits;
    std::uint64_t v = words[w] >> off;
    if (off != 0 && w + 1 < words.size()) {
        v |= words[w + 1] << (kBits - off);
    }
    return len == kBits ? v : v & ((std::uint64_t{1} << len) - 1);
}

// len <= min(64, n) bits starting at pos, wrapping at n.
std::uint64_t read_cyclic(std::span<const std::uint64_t> words, std::size_t n, std::size_t pos, std::size_t len) {
    const std::size_t first = std::min(len, n - pos);
    std::uint64_t v = read_linear(words, pos, first);
    if (len > first) {
        v |= read_linear(words, 0, len - first) << first;
    }
    return v;
}

}  // namespace

BitSequence::BitSequence(std::size_t n) : n_(n), words_() {
    require_length(n);
    words_.assign(words_for(n), 0);
}

BitSequence::BitSequence(std::size_t n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
    mask_tail();
}

void BitSequence::mask_tail() noexcept {
    const std::size_t rem = n_ % kBits;
    if (rem != 0) {
        words_.back() &= (std::uint64_t{1} << rem) - 1;
    }
}

BitSequence BitSequence::all_plus(std::size_t n) {
    require_length(n);
    return BitSequence(n, std::vector<std::uint64_t>(words_for(n), ~std::uint64_t{0}));
}

BitSequence BitSequence::from_words(std::size_t n, std::vector<std::uint64_t> words) {
    require_length(n);
    if (words.size() != words_for(n)) {
        throw InvalidArgument("expected " + std::to_string(words_for(n)) + " words for length " + std::to_string(n));
    }
    return BitSequence(n, std::move(words));
}

BitSequence BitSequence::from_support(std::size_t n, std::span<const std::size_t> plus_positions) {
    BitSequence out(n);
    for (std::size_t p : plus_positions) {
        if (p >= n) {
            throw InvalidArgument("support position " + std::to_string(p) + " out of range");
        }
        out.words_[p / kBits] |= std::uint64_t{1} << (p % kBits);
    }
    return out;
}

std::vector<std::size_t> BitSequence::support() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < words_.size(); ++j) {
        for (std::uint64_t w = words_[j]; w != 0; w &= w - 1) {
            out.push_back(j * kBits + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }
    return out;
}

std::strong_ordering operator<=>(const BitSequence& a, const BitSequence& b) {
    const std::size_t common = std::min(a.n_, b.n_);
    for (std::size_t j = 0; j * kBits < common; ++j) {
        std::uint64_t diff = a.words_[j] ^ b.words_[j];
        const std::size_t remaining = common - j * kBits;
        if (remaining < kBits) {
            diff &= (std::uint64_t{1} << remaining) - 1;
        }
        if (diff != 0) {
            const auto bit = std::countr_zero(diff);
            // '+' (set bit) sorts first.
            return ((a.words_[j] >> bit) & 1u) ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return a.n_ <=> b.n_;
}

std::size_t weight(const BitSequence& x) noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : x.words()) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<std::uint64_t> pointwise_mul_words(const BitSequence& x, const BitSequence& y) {
    require_same_length(x, y);
    std::vector<std::uint64_t> out(x.word_count());
    const auto xw = x.words();
    const auto yw = y.words();
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = ~(xw[j] ^ yw[j]);
    }
    return out;
}

BitSequence pointwise_mul(const BitSequence& x, const BitSequence& y) {
    return BitSequence::from_words(x.size(), pointwise_mul_words(x, y));
}

BitSequence negate(const BitSequence& x) {
    std::vector<std::uint64_t> out(x.words().begin(), x.words().end());
    for (auto& w : out) {
        w = ~w;
    }
    return BitSequence::from_words(x.size(), std::move(out));
}

BitSequence cyclic_shift(const BitSequence& x, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(x.size());
    const auto shift = static_cast<std::size_t>(((k % n) + n) % n);
    if (shift == 0) {
        return x;
    }
    std::vector<std::uint64_t> out(x.word_count());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::size_t len = std::min(kBits, x.size() - j * kBits);
        const std::size_t src = (j * kBits + shift) % x.size();
        out[j] = read_cyclic(x.words(), x.size(), src, len);
    }
    return BitSequence::from_words(x.size(), std::move(out));
}

BitSequence concat(const BitSequence& first, const BitSequence& second) {
    const std::size_t n = first.size() + second.size();
    std::vector<std::uint64_t> out(words_for(n), 0);
    auto fw = first.words();
    std::copy(fw.begin(), fw.end(), out.begin());
    const std::size_t base = first.size();
    for (std::size_t j = 0; j < second.word_count(); ++j) {
        const std::uint64_t w = second.words()[j];
        const std::size_t pos = base + j * kBits;
        out[pos / kBits] |= w << (pos % kBits);
        if (pos % kBits != 0 && pos / kBits + 1 < out.size()) {
            out[pos / kBits + 1] |= w >> (kBits - pos % kBits);
        }
    }
    return BitSequence::from_words(n, std::move(out));
}

std::pair<BitSequence, BitSequence> split_halves(const BitSequence& x) {
    if (x.size() % 2 != 0) {
        throw InvalidArgument("split_halves requires even length, got " + std::to_string(x.size()));
    }
    const std::size_t h = x.size() / 2;
    std::vector<std::uint64_t> lo(words_for(h));
    std::vector<std::uint64_t> hi(words_for(h));
    for (std::size_t j = 0; j < lo.size(); ++j) {
        const std::size_t len = std::min(kBits, h - j * kBits);
        lo[j] = read_linear(x.words(), j * kBits, len);
        hi[j] = read_linear(x.words(), h + j * kBits, len);
    }
    return {BitSequence::from_words(h, std::move(lo)), BitSequence::from_words(h, std::move(hi))};
}

std::size_t period(const BitSequence& x) {
    const std::size_t n = x.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p == 0 && cyclic_shift(x, static_cast<std::int64_t>(p)) == x) {
            return p;
        }
    }
    return n;
}

Orbit orbit_of(const BitSequence& x) {
    const std::size_t p = period(x);
    BitSequence best = x;
    for (std::size_t k = 1; k < p; ++k) {
        BitSequence r = cyclic_shift(x, static_cast<std::int64_t>(k));
        if (r < best) {
            best = std::move(r);
        }
    }
    return Orbit{std::move(best), p};
}

std::string format(const BitSequence& x) {
    std::string out(x.size(), '-');
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.is_plus(i)) {
            out[i] = '+';
        }
    }
    return out;
}

BitSequence parse(std::string_view text) {
    if (text.empty()) {
        throw SequenceParseError("empty sequence", 0);
    }
    std::vector<std::size_t> plus;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '+':
            plus.push_back(i);
            break;
        case '-':
            break;
        default:
            throw SequenceParseError(std::string("illegal character '") + text[i] + "'", i);
        }
    }
    return BitSequence::from_support(text.size(), plus);
}

std::string format_hex(const BitSequence& x) {
    std::string out = "n=" + std::to_string(x.size());
    char buf[17];
    for (std::uint64_t w : x.words()) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w, 16);
        out += ':';
        out.append(buf, end);
    }
    return out;
}

BitSequence parse_hex(std::string_view text) {
    if (!text.starts_with("n=")) {
        throw SequenceParseError("hex sequence must start with 'n='", 0);
    }
    std::size_t pos = 2;
    std::size_t n = 0;
    {
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), n);
        if (ec != std::errc{} || n == 0) {
            throw SequenceParseError("bad length in hex sequence", pos);
        }
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    std::vector<std::uint64_t> words;
    while (pos < text.size()) {
        if (text[pos] != ':') {
            throw SequenceParseError("expected ':'", pos);
        }
        ++pos;
        std::uint64_t w = 0;
        const char* begin = text.data() + pos;
        auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), w, 16);
        if (ec != std::errc{} || ptr == begin) {
            throw SequenceParseError("bad hex word", pos);
        }
        for (const char* c = begin; c != ptr; ++c) {
            if (*c >= 'A' && *c <= 'F') {
                throw SequenceParseError("hex digits must be lowercase", static_cast<std::size_t>(c - text.data()));
            }
        }
        words.push_back(w);
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (words.size() != words_for(n)) {
        throw SequenceParseError("expected " + std::to_string(words_for(n)) + " hex words", text.size());
    }
    const std::size_t rem = n % kBits;
    if (rem != 0 && (words.back() >> rem) != 0) {
        throw SequenceParseError("bits set beyond sequence length", text.size());
    }
    return BitSequence::from_words(n, std::move(words));
}

BitSequence parse_any(std::string_view text) {
    return text.starts_with("n=") ? parse_hex(text) : parse(text);
}

}  // namespace circhad
