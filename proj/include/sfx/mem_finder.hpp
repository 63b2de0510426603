/*
 * mem_finder.hpp
 *
 * The compressed index and its MEM-finding loop. Per in-alphabet chunk
 * of the pattern: look up the suffixient position whose text prefix has
 * the longest common suffix with P[1..i], report a MEM when that length
 * does not grow past the running match, then jump forward by an LCP
 * against the following text suffix. Reported intervals land in the
 * original pattern's frame.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sfx/colex_index.hpp"
#include "sfx/grammar.hpp"
#include "sfx/kr_hash.hpp"
#include "sfx/lcp_engine.hpp"
#include "sfx/suffixient.hpp"
#include "sfx/text.hpp"

namespace sfx {

inline constexpr std::uint64_t DEFAULT_SEED = 0x73667874;   // "sfxt"

struct query_stats {
    std::uint64_t iterations = 0;
    std::uint64_t zft_calls = 0;
    std::uint64_t lcs_calls = 0;
    std::uint64_t lcp_calls = 0;
    std::uint64_t zft_engine_lcs_calls = 0;
    std::optional<std::uint64_t> d_reference;
};

/* One pass of the main loop, recorded for diagnostics and goldens. */
struct iteration_trace {
    pos_t chunk_offset = 0;
    pos_t i = 0;          // chunk-local loop position
    pos_t j = 0;          // suffixient position the lookup returned
    pos_t b = 0;          // LCS(P[1..i], T[1..j])
    pos_t f = 0;          // LCP(P[i+1..m], T[j+1..n])
    pos_t ell_before = 0;
    pos_t ell_after = 0;
    bool reported = false;
};

struct compressed_index {
    slp grammar;
    suffixient_set suffixient;
    colex_index colex;
    alphabet alpha;
    std::uint64_t n = 0;
    std::uint32_t sigma = 0;
    std::uint64_t r_bar = 0;
    std::uint32_t separator = 0;   // first synthetic record separator byte, 0 if none

    std::uint64_t g() const { return grammar.g(); }
    std::uint32_t height() const { return grammar.height; }
    const hash_config& cfg() const { return grammar.cfg; }
};

/* Full build from text: run-boundary suffixient set, colex order, SLP. */
inline compressed_index build_index(const text& t, std::uint64_t seed = DEFAULT_SEED) {
    compressed_index idx;
    const hash_config cfg = make_hash_config(seed);
    auto [s, stats] = suffixient_from_bwt_runs(t);
    idx.suffixient = std::move(s);
    idx.colex = build_colex(t, idx.suffixient);
    idx.grammar = build_balanced_slp(t, cfg);
    idx.alpha = t.alpha();
    idx.n = t.size();
    idx.sigma = t.sigma();
    idx.r_bar = stats.r_bar;
    return idx;
}

// Same, but over a caller-supplied suffixient set. The caller vouches
// for the set actually being suffixient; is_suffixient() checks it.
inline compressed_index build_index(const text& t, std::uint64_t seed, suffixient_set s) {
    compressed_index idx;
    const hash_config cfg = make_hash_config(seed);
    auto [ls, stats] = suffixient_from_bwt_runs(t);
    idx.suffixient = std::move(s);
    idx.colex = build_colex(t, idx.suffixient);
    idx.grammar = build_balanced_slp(t, cfg);
    idx.alpha = t.alpha();
    idx.n = t.size();
    idx.sigma = t.sigma();
    idx.r_bar = stats.r_bar;
    return idx;
}

struct mem_result {
    std::vector<mem> mems;
    query_stats stats;
};

inline mem_result find_mems(const compressed_index& idx, const pattern& p,
                            std::vector<iteration_trace>* trace = nullptr) {
    mem_result out;

    for (const pattern_chunk& chunk : split_pattern(p, idx.alpha)) {
        const pattern pc(chunk.bytes);
        const pattern_hashes ph(pc, idx.cfg());
        const pos_t mc = pc.size();
        const pos_t shift = chunk.offset - 1;

        pos_t i = 1;
        pos_t ell = 0;
        while (i <= mc) {
            const zft_result z = zft(idx.colex, idx.grammar, ph, i);
            out.stats.zft_calls++;
            out.stats.lcs_calls++;
            out.stats.zft_engine_lcs_calls += z.engine_calls;
            const pos_t b = z.lcs_len;

            bool reported = false;
            if (b <= ell && ell >= 1) {   // empty intervals are suppressed
                out.mems.push_back({shift + i - ell, shift + i - 1});
                reported = true;
            }

            const pos_t f = lcp(idx.grammar, ph, i + 1, z.pos + 1);
            out.stats.lcp_calls++;
            out.stats.iterations++;

            if (trace)
                trace->push_back({chunk.offset, i, z.pos, b, f, ell, b + f, reported});

            i = i + f + 1;
            ell = b + f;
        }
        if (ell >= 1)
            out.mems.push_back({shift + i - ell, shift + i - 1});
    }

    return out;
}

}  // namespace sfx
