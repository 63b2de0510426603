/*
 * lcp_engine.hpp
 *
 * LCP and LCS queries between pattern and text intervals, answered on
 * the grammar parse tree in O(log n) symbol visits. A comparison that
 * covers a whole expansion is settled by hash equality; otherwise the
 * interval is pushed into the child that contains it, or split at the
 * child boundary. In the split case the side nearer the anchored end is
 * resolved first and short-circuits on a mismatch, which keeps the
 * visit count deterministic.
 *
 * Hash collisions are accepted silently in normal operation; paranoid
 * mode re-extracts every hash-matched expansion and is meant for tests.
 */
#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "sfx/grammar.hpp"
#include "sfx/kr_hash.hpp"

namespace sfx {

struct lce_stats {
    std::uint64_t nodes_visited = 0;
};

namespace lcedetail {

struct ctx {
    const slp& s;
    const pattern_hashes& ph;
    lce_stats* st;
    bool paranoid;

    void visit() const {
        if (st) ++st->nodes_visited;
    }

    void check_shortcut(std::uint32_t sym, pos_t p_lo, pos_t p_hi) const {
        if (!paranoid) return;
        if (extract_expansion(s, sym) != ph.bytes().substr(p_lo - 1, p_hi - p_lo + 1))
            throw std::logic_error("kr hash collision detected in paranoid mode");
    }
};

// LCP(P[pi..pi+len-1], exp(sym)[xj..xj+len-1]), len >= 1
inline pos_t lcp_rec(const ctx& c, std::uint32_t sym, pos_t pi, pos_t xj, pos_t len) {
    c.visit();
    assert(len >= 1 && xj >= 1 && xj + len - 1 <= c.s.exp_len[sym]);

    if (c.s.is_terminal(sym))
        return c.ph.at(pi) == c.s.terminals[sym] ? 1 : 0;

    if (len == c.s.exp_len[sym] &&
        c.ph.substring(pi, pi + len - 1) == c.s.exp_hash[sym]) {
        c.check_shortcut(sym, pi, pi + len - 1);
        return len;
    }

    const slp::rule& r = c.s.rule_of(sym);
    const pos_t left_len = c.s.exp_len[r.left];

    if (xj + len - 1 <= left_len)
        return lcp_rec(c, r.left, pi, xj, len);
    if (xj > left_len)
        return lcp_rec(c, r.right, pi, xj - left_len, len);

    // straddles the child boundary: resolve the left part first
    const pos_t head = left_len - xj + 1;
    const pos_t got = lcp_rec(c, r.left, pi, xj, head);
    if (got < head) return got;
    return head + lcp_rec(c, r.right, pi + head, 1, len - head);
}

// LCS(P[pe-len+1..pe], exp(sym)[xe-len+1..xe]), len >= 1
inline pos_t lcs_rec(const ctx& c, std::uint32_t sym, pos_t pe, pos_t xe, pos_t len) {
    c.visit();
    assert(len >= 1 && xe >= len && xe <= c.s.exp_len[sym]);

    if (c.s.is_terminal(sym))
        return c.ph.at(pe) == c.s.terminals[sym] ? 1 : 0;

    if (len == c.s.exp_len[sym] &&
        c.ph.substring(pe - len + 1, pe) == c.s.exp_hash[sym]) {
        c.check_shortcut(sym, pe - len + 1, pe);
        return len;
    }

    const slp::rule& r = c.s.rule_of(sym);
    const pos_t left_len = c.s.exp_len[r.left];

    if (xe <= left_len)
        return lcs_rec(c, r.left, pe, xe, len);
    if (xe - len >= left_len)
        return lcs_rec(c, r.right, pe, xe - left_len, len);

    // straddles the child boundary: resolve the right part first
    const pos_t tail = xe - left_len;
    const pos_t got = lcs_rec(c, r.right, pe, tail, tail);
    if (got < tail) return got;
    return tail + lcs_rec(c, r.left, pe - tail, left_len, len - tail);
}

}  // namespace lcedetail

/*
 * LCP(P[i..m], T[j..n]). Empty sides (i = m+1, j = n+1) answer 0. The
 * compared length is clamped to the shorter remaining interval, which
 * cannot change the answer.
 */
inline pos_t lcp(const slp& s, const pattern_hashes& ph, pos_t i, pos_t j,
                 lce_stats* st = nullptr, bool paranoid = false) {
    const pos_t m = ph.size();
    const pos_t n = s.text_length();
    if (i < 1 || i > m + 1 || j < 1 || j > n + 1)
        throw std::out_of_range("lcp: position out of range");
    const pos_t len = std::min(m - i + 1, n - j + 1);
    if (len == 0) return 0;
    lcedetail::ctx c{s, ph, st, paranoid};
    return lcedetail::lcp_rec(c, s.start, i, j, len);
}

/* LCS(P[1..i], T[1..j]); i and j are prefix lengths, 0 allowed. */
inline pos_t lcs(const slp& s, const pattern_hashes& ph, pos_t i, pos_t j,
                 lce_stats* st = nullptr, bool paranoid = false) {
    const pos_t m = ph.size();
    const pos_t n = s.text_length();
    if (i > m || j > n)
        throw std::out_of_range("lcs: position out of range");
    const pos_t len = std::min(i, j);
    if (len == 0) return 0;
    lcedetail::ctx c{s, ph, st, paranoid};
    return lcedetail::lcs_rec(c, s.start, i, j, len);
}

/* LCP answer plus the number of parse tree symbols the query visited. */
inline std::pair<pos_t, std::uint64_t> recursion_depth_probe(
    const slp& s, const pattern_hashes& ph, pos_t i, pos_t j) {
    lce_stats st;
    const pos_t len = lcp(s, ph, i, j, &st);
    return {len, st.nodes_visited};
}

}  // namespace sfx
