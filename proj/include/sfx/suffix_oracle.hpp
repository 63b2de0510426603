/*
 * suffix_oracle.hpp
 *
 * Reference structures built the slow, obvious way: suffix array, BWT,
 * an explicit suffix tree with suffix links, naive LCP/LCS, a suffix
 * tree MEM walk that counts edge descents, and brute-force checks for
 * the suffixient and string-attractor properties. Everything here is
 * either a construction input or a ground-truth oracle for tests and
 * the verify command; none of it is a query-time structure.
 */
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sfx/text.hpp"

namespace sfx {

/* sa[k] = 1-based start of the (k+1)-th smallest suffix. */
struct suffix_array {
    std::vector<pos_t> sa;
};

// Prefix doubling, O(n log^2 n). The sentinel byte is 0, so it sorts
// below every valid symbol without special casing.
inline suffix_array build_suffix_array(const text& t) {
    const std::size_t n = t.size();
    std::vector<std::uint32_t> idx(n);
    std::vector<std::int64_t> rank(n), next(n);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::size_t i = 0; i < n; ++i) rank[i] = t.at(i + 1);

    for (std::size_t k = 1;; k <<= 1) {
        auto key = [&](std::uint32_t i) {
            return std::pair<std::int64_t, std::int64_t>(
                rank[i], i + k < n ? rank[i + k] : -1);
        };
        std::sort(idx.begin(), idx.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
        next[idx[0]] = 0;
        for (std::size_t i = 1; i < n; ++i)
            next[idx[i]] = next[idx[i - 1]] + (key(idx[i - 1]) < key(idx[i]) ? 1 : 0);
        rank = next;
        if (rank[idx[n - 1]] == static_cast<std::int64_t>(n) - 1) break;
    }

    suffix_array out;
    out.sa.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.sa[i] = idx[i] + 1;
    return out;
}

/* Maximal run of one symbol in the BWT, 1-based inclusive interval. */
struct bwt_run {
    pos_t start = 0;
    pos_t end = 0;
    std::uint8_t symbol = 0;
};

struct bwt_result {
    std::string chars;
    std::vector<bwt_run> runs;
};

inline bwt_result build_bwt(const text& t, const suffix_array& sa) {
    const pos_t n = t.size();
    bwt_result out;
    out.chars.resize(n);
    for (pos_t k = 1; k <= n; ++k) {
        pos_t p = sa.sa[k - 1];
        out.chars[k - 1] = static_cast<char>(p == 1 ? t.at(n) : t.at(p - 1));
    }
    pos_t run_start = 1;
    for (pos_t k = 2; k <= n + 1; ++k) {
        if (k == n + 1 || out.chars[k - 1] != out.chars[run_start - 1]) {
            out.runs.push_back({run_start, k - 1,
                                static_cast<std::uint8_t>(out.chars[run_start - 1])});
            run_start = k;
        }
    }
    return out;
}

// lcp[k] = length of the common prefix of the suffixes at sa[k-1] and
// sa[k]; lcp[0] = 0. Kasai's algorithm.
inline std::vector<pos_t> lcp_array(const text& t, const suffix_array& sa) {
    const std::size_t n = t.size();
    std::vector<pos_t> rank(n), lcp(n, 0);
    for (std::size_t k = 0; k < n; ++k) rank[sa.sa[k] - 1] = k;
    pos_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) { h = 0; continue; }
        std::size_t j = sa.sa[rank[i] - 1] - 1;
        while (i + h < n && j + h < n && t.at(i + h + 1) == t.at(j + h + 1)) ++h;
        lcp[rank[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

/*
 * Explicit suffix tree. Built from the suffix array plus LCP array by
 * inserting suffixes in lexicographic order and keeping the rightmost
 * path on a stack; suffix links are filled in afterwards by rescanning
 * from the root. Node 0 is the root.
 */
class suffix_tree {
public:
    struct edge {
        std::uint32_t child = 0;
        pos_t lbl_start = 0;   // 1-based text position of the label's first symbol
        pos_t lbl_len = 0;
    };

    struct node {
        pos_t depth = 0;            // path label length
        std::uint32_t parent = 0;
        std::uint32_t suffix_link = 0;
        pos_t occ_end = 0;          // text position where one occurrence of the path label ends
        pos_t suffix_start = 0;     // leaves: start of the suffix they spell
        std::map<std::uint8_t, edge> children;

        bool leaf() const { return children.empty(); }
    };

    std::vector<node> nodes;

    const node& root() const { return nodes[0]; }

    pos_t occ_start(std::uint32_t v) const {
        return nodes[v].occ_end - nodes[v].depth + 1;
    }
};

inline suffix_tree build_suffix_tree(const text& t) {
    const pos_t n = t.size();
    suffix_array sa = build_suffix_array(t);
    std::vector<pos_t> lcp = lcp_array(t, sa);

    suffix_tree st;
    st.nodes.reserve(2 * n + 1);
    st.nodes.emplace_back();   // root

    std::vector<std::uint32_t> stack{0};
    auto& nodes = st.nodes;

    for (pos_t k = 0; k < n; ++k) {
        const pos_t s = sa.sa[k];
        const pos_t suf_len = n - s + 1;
        const pos_t h = (k == 0) ? 0 : lcp[k];

        std::uint32_t last = UINT32_MAX;
        while (nodes[stack.back()].depth > h) {
            last = stack.back();
            stack.pop_back();
        }
        std::uint32_t u = stack.back();

        if (nodes[u].depth < h) {
            // split the edge from u to `last` at depth h
            assert(last != UINT32_MAX);
            const std::uint32_t v = static_cast<std::uint32_t>(nodes.size());
            nodes.emplace_back();
            nodes[v].depth = h;
            nodes[v].parent = u;
            nodes[v].occ_end = s + h - 1;
            const pos_t last_occ = st.occ_start(last);
            const std::uint8_t key_u = t.at(last_occ + nodes[u].depth);
            const std::uint8_t key_v = t.at(last_occ + h);
            nodes[v].children[key_v] = {last, last_occ + h, nodes[last].depth - h};
            nodes[last].parent = v;
            nodes[u].children[key_u] = {v, s + nodes[u].depth, h - nodes[u].depth};
            stack.push_back(v);
            u = v;
        }

        const std::uint32_t leaf = static_cast<std::uint32_t>(nodes.size());
        nodes.emplace_back();
        nodes[leaf].depth = suf_len;
        nodes[leaf].parent = u;
        nodes[leaf].occ_end = n;
        nodes[leaf].suffix_start = s;
        nodes[u].children[t.at(s + nodes[u].depth)] = {leaf, s + nodes[u].depth, suf_len - nodes[u].depth};
        stack.push_back(leaf);
    }

    // suffix links: the target of an internal node at depth d is the node
    // spelling symbols 2..d of its path label, found by skipping whole
    // edges from the root (the target is guaranteed to be a node)
    auto walk_node = [&](pos_t a, pos_t len) -> std::uint32_t {
        std::uint32_t v = 0;
        while (len > 0) {
            const suffix_tree::edge& e = nodes[v].children.at(t.at(a));
            assert(e.lbl_len <= len);
            a += e.lbl_len;
            len -= e.lbl_len;
            v = e.child;
        }
        return v;
    };
    for (std::uint32_t v = 1; v < nodes.size(); ++v) {
        if (nodes[v].leaf() || nodes[v].depth == 0) continue;
        nodes[v].suffix_link = walk_node(st.occ_start(v) + 1, nodes[v].depth - 1);
    }

    return st;
}

/* Result of the classical suffix tree MEM walk. */
struct descent_trace {
    std::uint64_t d = 0;       // edges fully or partially descended
    std::vector<mem> mems;
};

/*
 * Find MEMs by the classical walk: descend from the root while the next
 * pattern symbol matches, and when stuck follow suffix links until
 * descending becomes possible again. d counts every edge entered while
 * consuming fresh pattern symbols; relocations after a suffix link skip
 * whole edges by their lengths and are not descents.
 *
 * Requires every pattern symbol to occur in the text (split the pattern
 * into chunks first).
 */
inline descent_trace mems_by_suffix_tree(const text& t, const suffix_tree& st, const pattern& p) {
    const pos_t m = p.size();
    for (pos_t i = 1; i <= m; ++i)
        if (!t.alpha().contains(p.at(i)))
            throw std::invalid_argument("mems_by_suffix_tree: pattern symbol not in text");

    descent_trace out;
    if (m == 0) return out;

    const auto& nodes = st.nodes;

    // location: at `node`, or `off` symbols into the edge from `node`
    // labelled `key` when inside is true
    std::uint32_t node = 0;
    std::uint8_t key = 0;
    pos_t off = 0;
    bool inside = false;

    auto canonicalize = [&]() {
        if (inside) {
            const suffix_tree::edge& e = nodes[node].children.at(key);
            if (off == e.lbl_len) {
                node = e.child;
                inside = false;
                off = 0;
            }
        }
    };

    // relocate to `len` symbols of T starting at a, descending from v
    auto rescan = [&](std::uint32_t v, pos_t a, pos_t len) {
        while (len > 0) {
            const suffix_tree::edge& e = nodes[v].children.at(t.at(a));
            if (len >= e.lbl_len) {
                a += e.lbl_len;
                len -= e.lbl_len;
                v = e.child;
            } else {
                node = v;
                key = t.at(a);
                off = len;
                inside = true;
                return;
            }
        }
        node = v;
        inside = false;
        off = 0;
    };

    pos_t consumed = 0;     // pattern symbols matched so far
    pos_t last_end = 0;     // end of the last reported MEM

    while (true) {
        // descend while the next pattern symbol matches
        while (consumed < m) {
            const std::uint8_t c = p.at(consumed + 1);
            if (!inside) {
                auto it = nodes[node].children.find(c);
                if (it == nodes[node].children.end()) break;
                ++out.d;
                key = c;
                off = 1;
                inside = true;
            } else {
                const suffix_tree::edge& e = nodes[node].children.at(key);
                if (t.at(e.lbl_start + off) != c) break;
                ++off;
            }
            ++consumed;
            canonicalize();
        }

        const pos_t match_len = nodes[node].depth + off;
        if (consumed > last_end && match_len >= 1) {
            out.mems.push_back({consumed - match_len + 1, consumed});
            last_end = consumed;
        }
        if (consumed == m) break;

        // shrink the match by one symbol and try again
        assert(match_len >= 1);
        if (!inside) {
            node = nodes[node].suffix_link;
        } else {
            const suffix_tree::edge e = nodes[node].children.at(key);
            if (node == 0)
                rescan(0, e.lbl_start + 1, off - 1);
            else
                rescan(nodes[node].suffix_link, e.lbl_start, off);
        }
    }

    return out;
}

inline descent_trace mems_by_suffix_tree(const text& t, const pattern& p) {
    suffix_tree st = build_suffix_tree(t);
    return mems_by_suffix_tree(t, st, p);
}

// Sum of suffix tree walk descents over the pattern's chunks; used as
// the d reference for query statistics.
inline std::uint64_t reference_descents(const text& t, const suffix_tree& st, const pattern& p) {
    std::uint64_t d = 0;
    for (const pattern_chunk& c : split_pattern(p, t))
        d += mems_by_suffix_tree(t, st, pattern(c.bytes)).d;
    return d;
}

/*
 * MEMs straight from the definition: for each start position compute
 * the longest match against every text position, then keep the matches
 * that cannot be extended to the left. O(n m^2) worst case.
 */
inline std::vector<mem> mems_naive(const text& t, const pattern& p) {
    const pos_t n = t.size();
    const pos_t m = p.size();
    if (m == 0) return {};

    std::vector<pos_t> ms(m + 1, 0);   // ms[i] = longest match of P[i..] in T
    for (pos_t i = 1; i <= m; ++i) {
        pos_t best = 0;
        for (pos_t a = 1; a <= n; ++a) {
            pos_t l = 0;
            while (i + l <= m && a + l <= n && p.at(i + l) == t.at(a + l)) ++l;
            best = std::max(best, l);
        }
        ms[i] = best;
    }

    std::vector<mem> out;
    for (pos_t i = 1; i <= m; ++i) {
        if (ms[i] == 0) continue;
        if (i == 1 || ms[i - 1] <= ms[i]) out.push_back({i, i + ms[i] - 1});
    }
    return out;
}

inline pos_t lcp_naive(std::string_view a, std::string_view b) {
    pos_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
}

inline pos_t lcs_naive(std::string_view a, std::string_view b) {
    pos_t k = 0;
    while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[b.size() - 1 - k]) ++k;
    return k;
}

/* One uncovered (right-maximal substring, following symbol) pair. */
struct suffixient_violation {
    std::string alpha;
    std::uint8_t next = 0;
};

struct suffixient_check {
    bool ok = true;
    std::vector<suffixient_violation> violations;
};

/*
 * Check the defining property of a suffixient set: for every
 * right-maximal substring alpha of T (the path label of an internal
 * suffix tree node, the empty label of a branching root included) and
 * every symbol c following an occurrence of alpha, some s in S must
 * have alpha.c as a suffix of T[1..s].
 */
inline suffixient_check is_suffixient(const text& t, const std::vector<pos_t>& positions) {
    suffix_tree st = build_suffix_tree(t);
    suffixient_check out;

    for (std::uint32_t v = 0; v < st.nodes.size(); ++v) {
        const auto& nd = st.nodes[v];
        if (nd.children.size() < 2) continue;
        const pos_t depth = nd.depth;
        const std::string_view alpha =
            depth == 0 ? std::string_view{} : t.slice(st.occ_start(v), nd.occ_end);
        for (const auto& [c, e] : nd.children) {
            bool covered = false;
            for (pos_t s : positions) {
                if (s < depth + 1 || s > t.size()) continue;
                if (t.at(s) != c) continue;
                if (t.slice(s - depth, s - 1) == alpha) { covered = true; break; }
            }
            if (!covered) {
                out.ok = false;
                out.violations.push_back({std::string(alpha), c});
            }
        }
    }
    return out;
}

/*
 * Brute-force string attractor check: every distinct substring class of
 * T must have an occurrence that contains some position of S. Substring
 * classes are visited at their leftmost occurrence; occurrence lists
 * shrink incrementally as the substring grows.
 */
inline bool is_string_attractor(const text& t, const std::vector<pos_t>& positions) {
    const pos_t n = t.size();
    std::vector<pos_t> sorted(positions);
    std::sort(sorted.begin(), sorted.end());

    auto covered = [&](pos_t a, pos_t b) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
        return it != sorted.end() && *it <= b;
    };

    std::vector<pos_t> occ;
    for (pos_t i = 1; i <= n; ++i) {
        occ.clear();
        for (pos_t a = 1; a <= n; ++a)
            if (t.at(a) == t.at(i)) occ.push_back(a);
        for (pos_t j = i; j <= n; ++j) {
            if (j > i) {
                std::vector<pos_t> kept;
                for (pos_t a : occ)
                    if (a + (j - i) <= n && t.at(a + (j - i)) == t.at(j)) kept.push_back(a);
                occ.swap(kept);
            }
            assert(!occ.empty() && occ.front() <= i);
            if (occ.front() < i) continue;   // class already checked at its leftmost start
            bool ok = false;
            for (pos_t a : occ)
                if (covered(a, a + (j - i))) { ok = true; break; }
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace sfx
