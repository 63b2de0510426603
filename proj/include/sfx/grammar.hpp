/*
 * grammar.hpp
 *
 * Balanced straight-line program over the text. Symbol ids below
 * terminals.size() are terminals; the rest are binary rules in
 * topological order (children precede parents). Every symbol carries
 * the length and Karp-Rabin hash of its expansion so substring
 * comparisons can be settled without expanding anything.
 *
 * The builder splits the text in halves recursively, which yields
 * height exactly ceil(log2 n). Externally produced grammars can be
 * imported as long as they respect the documented balance bound;
 * rebalancing arbitrary grammars is out of scope here.
 */
#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfx/kr_hash.hpp"
#include "sfx/text.hpp"

namespace sfx {

inline std::uint32_t ceil_log2(std::uint64_t n) {
    assert(n >= 1);
    return n <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

// Imported grammars must satisfy height <= 2 ceil(log2 n) + 2; the
// built grammar stays well inside this.
inline std::uint32_t balance_height_limit(std::uint64_t n) {
    return 2 * ceil_log2(n) + 2;
}

class slp {
public:
    struct rule {
        std::uint32_t left = 0;
        std::uint32_t right = 0;
        bool operator==(const rule&) const = default;
    };

    std::vector<std::uint8_t> terminals;   // symbol value per terminal id
    std::vector<rule> rules;               // nonterminal k has id terminals.size() + k
    std::uint32_t start = 0;
    std::vector<std::uint64_t> exp_len;    // per symbol id
    std::vector<std::uint64_t> exp_hash;
    std::uint32_t height = 0;              // rule depth of the start symbol
    hash_config cfg;

    bool is_terminal(std::uint32_t id) const { return id < terminals.size(); }
    const rule& rule_of(std::uint32_t id) const {
        return rules[id - terminals.size()];
    }
    std::uint64_t num_symbols() const { return terminals.size() + rules.size(); }
    std::uint64_t g() const { return rules.size(); }
    std::uint64_t text_length() const { return exp_len[start]; }
};

struct grammar_stats {
    std::uint64_t g = 0;
    std::uint32_t height = 0;
    std::uint64_t n = 0;
};

inline grammar_stats stats_of(const slp& s) {
    return {s.g(), s.height, s.text_length()};
}

/* Plain rule list, the exchange format for import/export. */
struct slp_rules {
    std::vector<std::uint8_t> terminals;
    std::vector<slp::rule> rules;
    std::uint32_t start = 0;
};

namespace slpdetail {

// Annotates lengths, hashes and heights; validates topological order.
// Used by both the builder and the importer.
inline void annotate(slp& s, std::vector<std::uint32_t>& heights) {
    const std::uint64_t nt = s.terminals.size();
    const std::uint64_t total = nt + s.rules.size();
    s.exp_len.assign(total, 0);
    s.exp_hash.assign(total, 0);
    heights.assign(total, 0);
    for (std::uint64_t id = 0; id < nt; ++id) {
        s.exp_len[id] = 1;
        s.exp_hash[id] = s.terminals[id] % s.cfg.modulus;
    }
    for (std::uint64_t k = 0; k < s.rules.size(); ++k) {
        const std::uint64_t id = nt + k;
        const slp::rule& r = s.rules[k];
        if (r.left >= id || r.right >= id)
            throw std::invalid_argument(
                "slp: rule children must precede the rule (cyclic or out-of-order grammar)");
        s.exp_len[id] = s.exp_len[r.left] + s.exp_len[r.right];
        s.exp_hash[id] = concat_hash(s.exp_hash[r.left], s.exp_hash[r.right],
                                     s.exp_len[r.right], s.cfg);
        heights[id] = 1 + std::max(heights[r.left], heights[r.right]);
    }
}

}  // namespace slpdetail

inline slp build_balanced_slp(const text& t, const hash_config& cfg) {
    const pos_t n = t.size();
    if (n >= (pos_t(1) << 31))
        throw std::invalid_argument("slp: text too large for 32-bit symbol ids");
    slp s;
    s.cfg = cfg;

    // terminal per distinct symbol, sentinel included
    std::array<std::int32_t, 256> term_id;
    term_id.fill(-1);
    {
        std::array<bool, 256> seen{};
        for (pos_t i = 1; i <= n; ++i) seen[t.at(i)] = true;
        for (int c = 0; c < 256; ++c)
            if (seen[c]) {
                term_id[c] = static_cast<std::int32_t>(s.terminals.size());
                s.terminals.push_back(static_cast<std::uint8_t>(c));
            }
    }

    std::vector<std::uint64_t> len;
    std::vector<std::uint64_t> hsh;
    std::vector<std::uint32_t> hts;
    const std::uint64_t nt = s.terminals.size();
    for (std::uint64_t id = 0; id < nt; ++id) {
        len.push_back(1);
        hsh.push_back(s.terminals[id] % cfg.modulus);
        hts.push_back(0);
    }

    // identical (left, right) pairs share one rule; ids stay in creation
    // order so rebuilding with the same seed is byte-identical
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> memo;
    auto make_rule = [&](std::uint32_t l, std::uint32_t r) -> std::uint32_t {
        auto [it, fresh] = memo.try_emplace({l, r}, 0);
        if (!fresh) return it->second;
        const std::uint32_t id = static_cast<std::uint32_t>(nt + s.rules.size());
        s.rules.push_back({l, r});
        len.push_back(len[l] + len[r]);
        hsh.push_back(concat_hash(hsh[l], hsh[r], len[r], cfg));
        hts.push_back(1 + std::max(hts[l], hts[r]));
        it->second = id;
        return id;
    };

    auto build = [&](auto&& self, pos_t lo, pos_t hi) -> std::uint32_t {
        if (lo == hi) return static_cast<std::uint32_t>(term_id[t.at(lo)]);
        const pos_t mid = lo + (hi - lo) / 2;
        const std::uint32_t l = self(self, lo, mid);
        const std::uint32_t r = self(self, mid + 1, hi);
        return make_rule(l, r);
    };
    s.start = build(build, 1, n);

    s.exp_len = std::move(len);
    s.exp_hash = std::move(hsh);
    s.height = hts[s.start];
    assert(s.height == ceil_log2(n));
    return s;
}

inline slp_rules export_rules(const slp& s) {
    return slp_rules{s.terminals, s.rules, s.start};
}

inline slp import_slp(const slp_rules& r, const hash_config& cfg) {
    if (r.terminals.empty())
        throw std::invalid_argument("slp: grammar without terminals");
    slp s;
    s.cfg = cfg;
    s.terminals = r.terminals;
    s.rules = r.rules;
    s.start = r.start;
    if (s.start >= s.num_symbols())
        throw std::invalid_argument("slp: start symbol out of range");

    std::vector<std::uint32_t> heights;
    slpdetail::annotate(s, heights);
    s.height = heights[s.start];

    const std::uint64_t n = s.text_length();
    if (s.height > balance_height_limit(n))
        throw std::invalid_argument(
            "slp: grammar height " + std::to_string(s.height) +
            " exceeds the balance bound 2*ceil(log2 n)+2 = " +
            std::to_string(balance_height_limit(n)) + "; rebalance before importing");
    return s;
}

/* exp(start)[i..j], 1-based inclusive. */
inline std::string extract(const slp& s, pos_t i, pos_t j) {
    const std::uint64_t n = s.text_length();
    if (i < 1 || j > n || i > j)
        throw std::out_of_range("slp extract: interval out of range");

    std::string out;
    out.reserve(j - i + 1);
    // descend with the absolute interval [lo..hi] of the current symbol
    auto rec = [&](auto&& self, std::uint32_t sym, pos_t lo, pos_t hi) -> void {
        if (hi < i || lo > j) return;
        if (s.is_terminal(sym)) {
            out.push_back(static_cast<char>(s.terminals[sym]));
            return;
        }
        const slp::rule& r = s.rule_of(sym);
        const pos_t mid = lo + s.exp_len[r.left] - 1;
        self(self, r.left, lo, mid);
        self(self, r.right, mid + 1, hi);
    };
    rec(rec, s.start, 1, n);
    return out;
}

inline std::uint8_t extract_symbol(const slp& s, pos_t i) {
    assert(i >= 1 && i <= s.text_length());
    std::uint32_t sym = s.start;
    pos_t off = i;
    while (!s.is_terminal(sym)) {
        const slp::rule& r = s.rule_of(sym);
        if (off <= s.exp_len[r.left]) {
            sym = r.left;
        } else {
            off -= s.exp_len[r.left];
            sym = r.right;
        }
    }
    return s.terminals[sym];
}

// expansion of an arbitrary symbol, used by the paranoid hash check
inline std::string extract_expansion(const slp& s, std::uint32_t sym) {
    std::string out;
    out.reserve(s.exp_len[sym]);
    auto rec = [&](auto&& self, std::uint32_t x) -> void {
        if (s.is_terminal(x)) {
            out.push_back(static_cast<char>(s.terminals[x]));
            return;
        }
        const slp::rule& r = s.rule_of(x);
        self(self, r.left);
        self(self, r.right);
    };
    rec(rec, sym);
    return out;
}

}  // namespace sfx
