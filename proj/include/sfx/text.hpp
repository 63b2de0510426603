/*
 * text.hpp
 *
 * Indexed text and query pattern types. The text owns its bytes plus a
 * single trailing sentinel that compares below every valid symbol; all
 * positions in the public interface are 1-based.
 */
#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sfx {

using pos_t = std::uint64_t;

// Reserved terminator byte. Inputs containing it are rejected rather
// than escaped, so suffix order conventions stay simple.
inline constexpr std::uint8_t SENTINEL = 0;

/* Byte membership set plus the sorted list of member symbols. */
class alphabet {
public:
    alphabet() : mask_{} {}

    explicit alphabet(std::string_view s) : mask_{} {
        for (unsigned char c : s) mask_[c] = true;
        mask_[SENTINEL] = false;
        rebuild();
    }

    static alphabet from_symbols(const std::vector<std::uint8_t>& syms) {
        alphabet a;
        for (std::uint8_t c : syms) a.mask_[c] = true;
        a.mask_[SENTINEL] = false;
        a.rebuild();
        return a;
    }

    bool contains(std::uint8_t c) const { return mask_[c]; }
    std::uint32_t sigma() const { return static_cast<std::uint32_t>(symbols_.size()); }
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

private:
    void rebuild() {
        symbols_.clear();
        for (int c = 0; c < 256; ++c)
            if (mask_[c]) symbols_.push_back(static_cast<std::uint8_t>(c));
    }

    std::array<bool, 256> mask_;
    std::vector<std::uint8_t> symbols_;
};

/*
 * Text of length n, sentinel included as the last symbol. Immutable
 * after construction, so concurrent readers need no synchronization.
 */
class text {
public:
    explicit text(std::string_view raw) {
        if (raw.empty())
            throw std::invalid_argument("text: empty input, index would be degenerate");
        if (raw.find(static_cast<char>(SENTINEL)) != std::string_view::npos)
            throw std::invalid_argument("text: input contains the reserved sentinel byte");
        data_.reserve(raw.size() + 1);
        data_.assign(raw);
        data_.push_back(static_cast<char>(SENTINEL));
        alpha_ = alphabet(raw);
    }

    // n, sentinel included
    pos_t size() const { return data_.size(); }

    std::uint8_t at(pos_t i) const {
        assert(i >= 1 && i <= size());
        return static_cast<std::uint8_t>(data_[i - 1]);
    }

    // whole text including the sentinel
    std::string_view bytes() const { return data_; }

    // text without the sentinel
    std::string_view raw() const { return std::string_view(data_.data(), data_.size() - 1); }

    // T[i..j], inclusive; empty view when i > j
    std::string_view slice(pos_t i, pos_t j) const {
        if (i > j) return {};
        assert(i >= 1 && j <= size());
        return std::string_view(data_.data() + (i - 1), j - i + 1);
    }

    const alphabet& alpha() const { return alpha_; }
    std::uint32_t sigma() const { return alpha_.sigma(); }

private:
    std::string data_;
    alphabet alpha_;
};

class pattern {
public:
    pattern() = default;

    explicit pattern(std::string_view bytes) : data_(bytes) {
        if (data_.find(static_cast<char>(SENTINEL)) != std::string::npos)
            throw std::invalid_argument("pattern: contains the reserved sentinel byte");
    }

    pos_t size() const { return data_.size(); }

    std::uint8_t at(pos_t i) const {
        assert(i >= 1 && i <= size());
        return static_cast<std::uint8_t>(data_[i - 1]);
    }

    std::string_view bytes() const { return data_; }

    std::string_view slice(pos_t i, pos_t j) const {
        if (i > j) return {};
        assert(i >= 1 && j <= size());
        return std::string_view(data_.data() + (i - 1), j - i + 1);
    }

private:
    std::string data_;
};

/*
 * Pattern interval (start, end), 1-based inclusive, in the frame of the
 * original pattern the query was asked for.
 */
struct mem {
    pos_t start = 0;
    pos_t end = 0;

    pos_t length() const { return end - start + 1; }
    bool operator==(const mem&) const = default;
    bool operator<(const mem& o) const {
        return start != o.start ? start < o.start : end < o.end;
    }
};

/* Maximal run of pattern symbols that all occur in the indexed text. */
struct pattern_chunk {
    pos_t offset = 0;   // 1-based start in the original pattern
    std::string bytes;
};

inline std::vector<pattern_chunk> split_pattern(const pattern& p, const alphabet& a) {
    std::vector<pattern_chunk> chunks;
    const pos_t m = p.size();
    pos_t i = 1;
    while (i <= m) {
        while (i <= m && !a.contains(p.at(i))) ++i;
        if (i > m) break;
        pos_t j = i;
        while (j <= m && a.contains(p.at(j))) ++j;
        chunks.push_back({i, std::string(p.slice(i, j - 1))});
        i = j;
    }
    return chunks;
}

inline std::vector<pattern_chunk> split_pattern(const pattern& p, const text& t) {
    return split_pattern(p, t.alpha());
}

}  // namespace sfx
