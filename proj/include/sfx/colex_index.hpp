/*
 * colex_index.hpp
 *
 * Prefixes of T ending at suffixient positions, ordered by their
 * reverses (colexicographic order). A query P[1..i] binary-searches the
 * reversed prefix among them with one LCS call and one extracted symbol
 * per probe; the prefix sharing the longest common suffix with P[1..i]
 * is always adjacent to the insertion point, so the two neighbours are
 * probed and the better one returned. Ties on the LCS length pick the
 * smaller text position.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sfx/grammar.hpp"
#include "sfx/lcp_engine.hpp"
#include "sfx/suffixient.hpp"
#include "sfx/text.hpp"

namespace sfx {

class colex_index {
public:
    std::vector<pos_t> positions;    // suffixient positions, ascending
    std::vector<std::uint32_t> perm; // perm[k] = index into positions, colex order of T[1..s]

    std::size_t size() const { return positions.size(); }

    pos_t order(std::size_t k) const { return positions[perm[k]]; }
};

inline colex_index build_colex(const text& t, const suffixient_set& s) {
    if (s.positions.empty())
        throw std::invalid_argument("build_colex: empty suffixient set");

    colex_index ci;
    ci.positions = s.positions;
    assert(std::is_sorted(ci.positions.begin(), ci.positions.end()));
    assert(ci.positions.back() <= t.size());

    ci.perm.resize(ci.positions.size());
    for (std::size_t k = 0; k < ci.perm.size(); ++k)
        ci.perm[k] = static_cast<std::uint32_t>(k);

    // reversed-prefix comparison, scanning backwards from the endpoints
    auto colex_less = [&](std::uint32_t a, std::uint32_t b) {
        const pos_t pa = ci.positions[a];
        const pos_t pb = ci.positions[b];
        const pos_t lim = std::min(pa, pb);
        for (pos_t k = 0; k < lim; ++k) {
            const std::uint8_t ca = t.at(pa - k);
            const std::uint8_t cb = t.at(pb - k);
            if (ca != cb) return ca < cb;
        }
        return pa < pb;   // the shorter prefix is a suffix of the longer one
    };
    std::sort(ci.perm.begin(), ci.perm.end(), colex_less);
    return ci;
}

struct zft_result {
    pos_t pos = 0;                    // element of S attaining the maximum
    pos_t lcs_len = 0;                // LCS(P[1..i], T[1..pos])
    std::uint64_t engine_calls = 0;   // LCS engine invocations spent
};

/*
 * Element of S whose prefix T[1..s] has the longest common suffix with
 * P[1..i], plus that length. Correct for 1 <= i <= m.
 */
inline zft_result zft(const colex_index& ci, const slp& s, const pattern_hashes& ph, pos_t i) {
    assert(i >= 1 && i <= ph.size());
    const std::size_t sz = ci.size();
    zft_result out;

    // probe once: common suffix length, and whether rev(P[1..i]) orders
    // before rev(T[1..sp]) at the insertion point sense
    auto probe = [&](std::size_t k, pos_t& l) {
        const pos_t sp = ci.order(k);
        l = lcs(s, ph, i, sp);
        ++out.engine_calls;
        if (l == i) return true;               // pattern side exhausted: <=
        if (l == sp) return false;             // prefix side exhausted: >
        return ph.at(i - l) < extract_symbol(s, sp - l);
    };

    // insertion point: first k with rev(T[1..order(k)]) >= rev(P[1..i])
    std::size_t lo = 0, hi = sz;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        pos_t l = 0;
        if (probe(mid, l))
            hi = mid;
        else
            lo = mid + 1;
    }

    bool have = false;
    for (std::size_t k : {lo == 0 ? sz : lo - 1, lo}) {
        if (k >= sz) continue;
        const pos_t sp = ci.order(k);
        const pos_t l = lcs(s, ph, i, sp);
        ++out.engine_calls;
        if (!have || l > out.lcs_len || (l == out.lcs_len && sp < out.pos)) {
            out.pos = sp;
            out.lcs_len = l;
            have = true;
        }
    }
    assert(have);
    return out;
}

}  // namespace sfx
