/*
 * suffixient.hpp
 *
 * Suffixient set construction. The main route takes the positions of
 * run boundaries in the BWT of the reversed text, giving at most
 * 2 * r_bar positions; a greedy reducer can shrink any suffixient set
 * by keeping one covering position per (right-maximal substring,
 * following symbol) pair.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfx/suffix_oracle.hpp"
#include "sfx/text.hpp"

namespace sfx {

enum class suffixient_source : std::uint32_t {
    run_boundary = 0,
    greedy = 1,
    user_supplied = 2,
};

struct suffixient_set {
    std::vector<pos_t> positions;   // strictly increasing, within [1, n]
    suffixient_source source = suffixient_source::user_supplied;
};

struct rbar_stats {
    std::uint64_t r_bar = 0;            // runs in the BWT of the reversed text
    std::uint64_t boundary_count = 0;   // boundary indices extracted before dedup
};

inline suffixient_set make_user_set(std::vector<pos_t> positions) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    return suffixient_set{std::move(positions), suffixient_source::user_supplied};
}

/*
 * Positions in T of the symbols at run boundaries in the BWT of the
 * reverse of T. The sentinel is stripped before reversing and appended
 * again, so the reversed text is a well-formed text of the same length;
 * BWT index k maps back to T position n - sa_R[k] + 1, or to the
 * sentinel position n when sa_R[k] = 1.
 */
inline std::pair<suffixient_set, rbar_stats> suffixient_from_bwt_runs(const text& t) {
    const pos_t n = t.size();
    std::string reversed(t.raw());
    std::reverse(reversed.begin(), reversed.end());
    const text rev(reversed);

    const suffix_array sa = build_suffix_array(rev);
    const bwt_result bw = build_bwt(rev, sa);

    std::vector<pos_t> boundary_idx;
    for (const bwt_run& r : bw.runs) {
        boundary_idx.push_back(r.start);
        if (r.end != r.start) boundary_idx.push_back(r.end);
    }

    rbar_stats stats;
    stats.r_bar = bw.runs.size();
    stats.boundary_count = boundary_idx.size();

    std::vector<pos_t> positions;
    positions.reserve(boundary_idx.size());
    for (pos_t k : boundary_idx) {
        const pos_t sr = sa.sa[k - 1];
        positions.push_back(sr == 1 ? n : n - sr + 1);
    }
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

    return {suffixient_set{std::move(positions), suffixient_source::run_boundary}, stats};
}

/*
 * Keep, for every (right-maximal alpha, following symbol) pair, the
 * largest input position covering it. The result is suffixient whenever
 * the input is; inputs that are not suffixient are rejected. No
 * minimality claim: this only discards positions no pair needs.
 */
inline suffixient_set greedy_reduce(const text& t, const suffixient_set& s) {
    if (!is_suffixient(t, s.positions).ok)
        throw std::invalid_argument("greedy_reduce: input set is not suffixient");

    const suffix_tree st = build_suffix_tree(t);
    std::vector<pos_t> kept;

    for (std::uint32_t v = 0; v < st.nodes.size(); ++v) {
        const auto& nd = st.nodes[v];
        if (nd.children.size() < 2) continue;
        const pos_t depth = nd.depth;
        const std::string_view alpha =
            depth == 0 ? std::string_view{} : t.slice(st.occ_start(v), nd.occ_end);
        for (const auto& [c, e] : nd.children) {
            pos_t best = 0;
            for (pos_t p : s.positions) {
                if (p < depth + 1 || t.at(p) != c) continue;
                if (t.slice(p - depth, p - 1) == alpha) best = std::max(best, p);
            }
            assert(best != 0);
            kept.push_back(best);
        }
    }

    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return suffixient_set{std::move(kept), suffixient_source::greedy};
}

}  // namespace sfx
