#pragma once

#include <cstdint>
#include <fstream>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhsp/bits.hpp"

namespace bhsp {

inline constexpr int kMinBits = 1;
inline constexpr int kMaxBits = 28;

// Parse failure with the 0-based byte offset of the offending input byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// A Boolean function on Z_2^n as a packed bit array of length 2^n.
class TruthTable {
public:
    explicit TruthTable(int n) : n_(check_n(n)), words_(word_count(n_), 0) {}

    TruthTable(int n, const std::string& bits) : TruthTable(n) {
        if (bits.size() != size())
            throw std::invalid_argument("bit string length does not match 2^n");
        for (std::size_t x = 0; x < bits.size(); ++x) {
            if (bits[x] == '1')
                set(static_cast<std::uint32_t>(x), true);
            else if (bits[x] != '0')
                throw std::invalid_argument("bit string may contain only '0'/'1'");
        }
    }

    int n() const { return n_; }
    std::size_t size() const { return std::size_t{1} << n_; }

    bool bit(std::uint32_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }

    void set(std::uint32_t x, bool v) {
        std::uint64_t m = std::uint64_t{1} << (x & 63);
        if (v)
            words_[x >> 6] |= m;
        else
            words_[x >> 6] &= ~m;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    std::string bit_string() const {
        std::string s(size(), '0');
        for (std::size_t x = 0; x < size(); ++x)
            if (bit(static_cast<std::uint32_t>(x))) s[x] = '1';
        return s;
    }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    static int check_n(int n) {
        if (n < kMinBits || n > kMaxBits)
            throw std::invalid_argument("n must be in [1, 28]");
        return n;
    }

    static std::size_t word_count(int n) {
        std::size_t bits = std::size_t{1} << n;
        return (bits + 63) / 64;
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

// f(x0) = 1, zero elsewhere.
inline TruthTable make_delta(int n, std::uint32_t x0) {
    TruthTable t(n);
    if (x0 >= t.size()) throw std::invalid_argument("x0 out of range");
    t.set(x0, true);
    return t;
}

// 2^n independent fair bits from the seeded deterministic stream.
inline TruthTable make_random(int n, std::uint64_t seed) {
    TruthTable t(n);
    Rng rng(seed);
    for (std::size_t x = 0; x < t.size(); ++x)
        t.set(static_cast<std::uint32_t>(x), rng.coin());
    return t;
}

/*
 * Maiorana-McFarland construction on Z_2^{n/2} x Z_2^{n/2}:
 *   f(x, y) = <x, pi(y)> + h(y)
 * with x the low n/2 coordinates and y the high n/2 coordinates.
 * variant 0 is the canonical member (pi = identity, h = 0); any other
 * variant seeds a Fisher-Yates shuffle for pi and random bits for h.
 * Every output has |F^(u)| = 2^{-n/2} for all u.
 */
inline TruthTable make_bent(int n, std::uint64_t variant = 0) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("bent construction needs even n >= 2");
    if (n > kMaxBits) throw std::invalid_argument("n must be in [1, 28]");
    int half = n / 2;
    std::uint32_t m = std::uint32_t{1} << half;

    std::vector<std::uint32_t> pi(m);
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<std::uint8_t> h(m, 0);
    if (variant != 0) {
        Rng rng(mix64(variant));
        for (std::uint32_t i = m - 1; i > 0; --i) {
            std::uint32_t j = static_cast<std::uint32_t>(rng.below(i + 1));
            std::swap(pi[i], pi[j]);
        }
        for (std::uint32_t y = 0; y < m; ++y) h[y] = rng.coin() ? 1 : 0;
    }

    TruthTable t(n);
    for (std::uint32_t y = 0; y < m; ++y) {
        for (std::uint32_t x = 0; x < m; ++x) {
            int v = dot(x, pi[y]) ^ h[y];
            if (v) t.set((y << half) | x, true);
        }
    }
    return t;
}

/*
 * Truth-table file format:
 *   line 1: n=<int>
 *   line 2: 2^n characters '0'/'1', index 0 first
 * '#'-prefixed comment lines may appear anywhere. Parse errors carry the
 * byte offset of the first offending byte.
 */
inline TruthTable parse_truth_table(const std::string& text) {
    std::size_t pos = 0;
    auto next_line = [&](std::size_t& line_start) -> std::string {
        while (pos < text.size()) {
            line_start = pos;
            std::size_t end = text.find('\n', pos);
            std::string line = text.substr(pos, end == std::string::npos ? std::string::npos
                                                                         : end - pos);
            pos = end == std::string::npos ? text.size() : end + 1;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] != '#') return line;
        }
        line_start = text.size();
        return {};
    };

    std::size_t header_at = 0;
    std::string header = next_line(header_at);
    if (header.rfind("n=", 0) != 0)
        throw ParseError("expected header line 'n=<int>'", header_at);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(header.substr(2), &used);
        if (used != header.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("malformed bit count in header", header_at + 2);
    }
    if (n < kMinBits || n > kMaxBits)
        throw ParseError("n must be in [1, 28]", header_at + 2);

    std::size_t bits_at = 0;
    std::string bits = next_line(bits_at);
    if (bits.empty()) throw ParseError("missing truth-table line", text.size());
    std::size_t want = std::size_t{1} << n;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] != '0' && bits[i] != '1')
            throw ParseError("truth-table line may contain only '0'/'1'", bits_at + i);
    if (bits.size() != want)
        throw ParseError("truth-table line has " + std::to_string(bits.size()) +
                             " bits, expected " + std::to_string(want),
                         bits_at + bits.size());

    std::size_t extra_at = 0;
    if (!next_line(extra_at).empty())
        throw ParseError("unexpected content after truth-table line", extra_at);

    return TruthTable(n, bits);
}

inline TruthTable truth_table_from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_truth_table(text);
}

inline void write_truth_table(const TruthTable& t, std::ostream& out) {
    out << "n=" << t.n() << "\n" << t.bit_string() << "\n";
}

}  // namespace bhsp
