/*
 * kr_hash.hpp
 *
 * Karp-Rabin hashing over the Mersenne prime 2^61 - 1. A string of
 * symbols s[1..L] maps to sum s[k] * base^(L-k) mod p, so the hash of a
 * concatenation can be composed from the hashes of the parts. Pattern
 * prefixes are preprocessed once to answer substring hashes in O(1).
 */
#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "sfx/text.hpp"

namespace sfx {

inline constexpr std::uint64_t MERSENNE61 = (std::uint64_t(1) << 61) - 1;

struct hash_config {
    std::uint64_t modulus = MERSENNE61;
    std::uint64_t base = 0;
    std::uint64_t seed = 0;
};

namespace krdetail {

// a, b < 2^61; reduction uses 2^61 = 1 (mod p)
inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z & MERSENNE61);
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t r = lo + hi;
    r = (r & MERSENNE61) + (r >> 61);
    if (r >= MERSENNE61) r -= MERSENNE61;
    return r;
}

inline std::uint64_t addmod61(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    if (r >= MERSENNE61) r -= MERSENNE61;
    return r;
}

inline std::uint64_t submod61(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + MERSENNE61 - b;
}

}  // namespace krdetail

// The base is drawn uniformly from [2, p-2]; the seed is kept so index
// files rebuilt with the same seed are byte-identical.
inline hash_config make_hash_config(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(2, MERSENNE61 - 2);
    return hash_config{MERSENNE61, dist(rng), seed};
}

inline std::uint64_t pow_base(const hash_config& cfg, std::uint64_t e) {
    std::uint64_t r = 1, b = cfg.base;
    while (e) {
        if (e & 1) r = krdetail::mulmod61(r, b);
        b = krdetail::mulmod61(b, b);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t hash_of(std::string_view seq, const hash_config& cfg) {
    std::uint64_t h = 0;
    for (unsigned char c : seq)
        h = krdetail::addmod61(krdetail::mulmod61(h, cfg.base), c);
    return h;
}

// hash of the concatenation left ++ right, given |right|
inline std::uint64_t concat_hash(std::uint64_t h_left, std::uint64_t h_right,
                                 std::uint64_t len_right, const hash_config& cfg) {
    return krdetail::addmod61(krdetail::mulmod61(h_left, pow_base(cfg, len_right)), h_right);
}

/*
 * Prefix hashes of a pattern. substring(i, j) returns the hash of
 * P[i..j] in constant time; the pattern bytes are kept alongside so
 * query code can read single symbols without a second object.
 */
class pattern_hashes {
public:
    pattern_hashes() = default;

    pattern_hashes(const pattern& p, const hash_config& cfg) : bytes_(p.bytes()), cfg_(cfg) {
        const std::size_t m = bytes_.size();
        prefix_.resize(m + 1);
        power_.resize(m + 1);
        prefix_[0] = 0;
        power_[0] = 1;
        for (std::size_t k = 0; k < m; ++k) {
            prefix_[k + 1] = krdetail::addmod61(
                krdetail::mulmod61(prefix_[k], cfg_.base),
                static_cast<unsigned char>(bytes_[k]));
            power_[k + 1] = krdetail::mulmod61(power_[k], cfg_.base);
        }
    }

    pos_t size() const { return bytes_.size(); }

    std::uint8_t at(pos_t i) const {
        assert(i >= 1 && i <= size());
        return static_cast<std::uint8_t>(bytes_[i - 1]);
    }

    std::string_view bytes() const { return bytes_; }
    const hash_config& config() const { return cfg_; }

    // hash of P[i..j]; empty ranges (i > j) hash to 0
    std::uint64_t substring(pos_t i, pos_t j) const {
        if (i > j) return 0;
        assert(i >= 1 && j <= size());
        return krdetail::submod61(prefix_[j],
                                  krdetail::mulmod61(prefix_[i - 1], power_[j - i + 1]));
    }

private:
    std::string bytes_;
    hash_config cfg_;
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> power_;
};

inline pattern_hashes preprocess_pattern(const pattern& p, const hash_config& cfg) {
    return pattern_hashes(p, cfg);
}

}  // namespace sfx
