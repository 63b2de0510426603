/*
 * index_io.hpp
 *
 * Index file format: a fixed header followed by a section table and the
 * sections themselves. All integers are fixed-width little-endian.
 *
 *   magic "SFXT", version u32
 *   n u64, sigma u32, separator u32, r_bar u64, g u64, |S| u64,
 *   seed u64, modulus u64
 *   section table: count u32, then (id u32, pad u32, offset u64, len u64)
 *
 * Sections: suffixient positions (with source tag), colex permutation,
 * grammar rules, per-symbol expansion lengths and hashes. The loader
 * recomputes the annotations from the rules and refuses files where the
 * stored arrays disagree.
 */
#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfx/mem_finder.hpp"

namespace sfx {

inline constexpr char INDEX_MAGIC[4] = {'S', 'F', 'X', 'T'};
inline constexpr std::uint32_t INDEX_VERSION = 1;

namespace iodetail {

inline void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int k = 0; k < 4; ++k) b[k] = static_cast<unsigned char>(v >> (8 * k));
    os.write(reinterpret_cast<const char*>(b), 4);
}

inline void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>(v >> (8 * k));
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4))
        throw std::runtime_error("index file: truncated");
    std::uint32_t v = 0;
    for (int k = 3; k >= 0; --k) v = (v << 8) | b[k];
    return v;
}

inline std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8))
        throw std::runtime_error("index file: truncated");
    std::uint64_t v = 0;
    for (int k = 7; k >= 0; --k) v = (v << 8) | b[k];
    return v;
}

enum section_id : std::uint32_t {
    SEC_SUFFIXIENT = 1,
    SEC_COLEX = 2,
    SEC_GRAMMAR = 3,
    SEC_ANNOTATIONS = 4,
};

struct section_entry {
    std::uint32_t id = 0;
    std::uint64_t offset = 0;
    std::uint64_t length = 0;
};

}  // namespace iodetail

inline void save_index(const compressed_index& idx, std::ostream& os) {
    using namespace iodetail;

    std::ostringstream sec_suffixient, sec_colex, sec_grammar, sec_ann;

    put_u32(sec_suffixient, static_cast<std::uint32_t>(idx.suffixient.source));
    put_u64(sec_suffixient, idx.suffixient.positions.size());
    for (pos_t p : idx.suffixient.positions) put_u64(sec_suffixient, p);

    put_u64(sec_colex, idx.colex.perm.size());
    for (std::uint32_t k : idx.colex.perm) put_u64(sec_colex, k);

    const slp& g = idx.grammar;
    put_u64(sec_grammar, g.terminals.size());
    sec_grammar.write(reinterpret_cast<const char*>(g.terminals.data()),
                      static_cast<std::streamsize>(g.terminals.size()));
    put_u64(sec_grammar, g.rules.size());
    for (const slp::rule& r : g.rules) {
        put_u64(sec_grammar, r.left);
        put_u64(sec_grammar, r.right);
    }
    put_u64(sec_grammar, g.start);

    put_u64(sec_ann, g.num_symbols());
    for (std::uint64_t v : g.exp_len) put_u64(sec_ann, v);
    for (std::uint64_t v : g.exp_hash) put_u64(sec_ann, v);

    const std::string bodies[4] = {sec_suffixient.str(), sec_colex.str(),
                                   sec_grammar.str(), sec_ann.str()};
    const std::uint32_t ids[4] = {SEC_SUFFIXIENT, SEC_COLEX, SEC_GRAMMAR, SEC_ANNOTATIONS};

    os.write(INDEX_MAGIC, 4);
    put_u32(os, INDEX_VERSION);
    put_u64(os, idx.n);
    put_u32(os, idx.sigma);
    put_u32(os, idx.separator);
    put_u64(os, idx.r_bar);
    put_u64(os, idx.g());
    put_u64(os, idx.suffixient.positions.size());
    put_u64(os, idx.cfg().seed);
    put_u64(os, idx.cfg().modulus);

    // header is 64 bytes, table is 4 + 4*24
    std::uint64_t offset = 64 + 4 + 4 * 24;
    put_u32(os, 4);
    for (int k = 0; k < 4; ++k) {
        put_u32(os, ids[k]);
        put_u32(os, 0);
        put_u64(os, offset);
        put_u64(os, bodies[k].size());
        offset += bodies[k].size();
    }
    for (int k = 0; k < 4; ++k) os.write(bodies[k].data(), static_cast<std::streamsize>(bodies[k].size()));
    if (!os) throw std::runtime_error("index file: write failed");
}

inline void save_index(const compressed_index& idx, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    save_index(idx, os);
}

inline compressed_index load_index(std::istream& is) {
    using namespace iodetail;

    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, INDEX_MAGIC, 4) != 0)
        throw std::runtime_error("index file: bad magic");
    const std::uint32_t version = get_u32(is);
    if (version != INDEX_VERSION)
        throw std::runtime_error("index file: unsupported version " + std::to_string(version));

    compressed_index idx;
    idx.n = get_u64(is);
    idx.sigma = get_u32(is);
    idx.separator = get_u32(is);
    idx.r_bar = get_u64(is);
    const std::uint64_t g_count = get_u64(is);
    const std::uint64_t s_count = get_u64(is);
    const std::uint64_t seed = get_u64(is);
    const std::uint64_t modulus = get_u64(is);

    const hash_config cfg = make_hash_config(seed);
    if (cfg.modulus != modulus)
        throw std::runtime_error("index file: unexpected hash modulus");

    const std::uint32_t sec_count = get_u32(is);
    if (sec_count != 4) throw std::runtime_error("index file: bad section count");
    std::vector<section_entry> table(sec_count);
    for (auto& e : table) {
        e.id = get_u32(is);
        get_u32(is);
        e.offset = get_u64(is);
        e.length = get_u64(is);
    }

    auto seek_section = [&](std::uint32_t id) -> const section_entry& {
        for (const auto& e : table)
            if (e.id == id) {
                is.clear();
                is.seekg(static_cast<std::streamoff>(e.offset));
                if (!is) throw std::runtime_error("index file: bad section offset");
                return e;
            }
        throw std::runtime_error("index file: missing section " + std::to_string(id));
    };

    {
        const auto& e = seek_section(SEC_SUFFIXIENT);
        const std::uint32_t source = get_u32(is);
        if (source > 2) throw std::runtime_error("index file: bad suffixient source tag");
        idx.suffixient.source = static_cast<suffixient_source>(source);
        const std::uint64_t count = get_u64(is);
        if (count != s_count || e.length != 4 + 8 + 8 * count)
            throw std::runtime_error("index file: suffixient section length mismatch");
        idx.suffixient.positions.resize(count);
        for (auto& p : idx.suffixient.positions) p = get_u64(is);
        for (std::uint64_t k = 1; k < count; ++k)
            if (idx.suffixient.positions[k] <= idx.suffixient.positions[k - 1])
                throw std::runtime_error("index file: suffixient positions not increasing");
        if (count == 0 || idx.suffixient.positions.back() > idx.n)
            throw std::runtime_error("index file: suffixient positions out of range");
    }

    {
        const auto& e = seek_section(SEC_COLEX);
        const std::uint64_t count = get_u64(is);
        if (count != s_count || e.length != 8 + 8 * count)
            throw std::runtime_error("index file: colex section length mismatch");
        idx.colex.positions = idx.suffixient.positions;
        idx.colex.perm.resize(count);
        std::vector<bool> seen(count, false);
        for (auto& k : idx.colex.perm) {
            const std::uint64_t v = get_u64(is);
            if (v >= count || seen[v])
                throw std::runtime_error("index file: colex permutation invalid");
            seen[v] = true;
            k = static_cast<std::uint32_t>(v);
        }
    }

    {
        seek_section(SEC_GRAMMAR);
        slp_rules rules;
        const std::uint64_t nt = get_u64(is);
        rules.terminals.resize(nt);
        if (nt && !is.read(reinterpret_cast<char*>(rules.terminals.data()),
                           static_cast<std::streamsize>(nt)))
            throw std::runtime_error("index file: truncated");
        const std::uint64_t nr = get_u64(is);
        if (nr != g_count)
            throw std::runtime_error("index file: grammar rule count mismatch");
        rules.rules.resize(nr);
        for (auto& r : rules.rules) {
            r.left = static_cast<std::uint32_t>(get_u64(is));
            r.right = static_cast<std::uint32_t>(get_u64(is));
        }
        rules.start = static_cast<std::uint32_t>(get_u64(is));
        idx.grammar = import_slp(rules, cfg);   // validates order and balance
        if (idx.grammar.text_length() != idx.n)
            throw std::runtime_error("index file: grammar expands to the wrong length");
    }

    {
        seek_section(SEC_ANNOTATIONS);
        const std::uint64_t count = get_u64(is);
        if (count != idx.grammar.num_symbols())
            throw std::runtime_error("index file: annotation count mismatch");
        for (std::uint64_t k = 0; k < count; ++k)
            if (get_u64(is) != idx.grammar.exp_len[k])
                throw std::runtime_error("index file: stored expansion length disagrees");
        for (std::uint64_t k = 0; k < count; ++k)
            if (get_u64(is) != idx.grammar.exp_hash[k])
                throw std::runtime_error("index file: stored expansion hash disagrees");
    }

    // alphabet = grammar terminals minus the sentinel
    {
        std::vector<std::uint8_t> syms;
        for (std::uint8_t c : idx.grammar.terminals)
            if (c != SENTINEL) syms.push_back(c);
        idx.alpha = alphabet::from_symbols(syms);
        if (idx.alpha.sigma() != idx.sigma)
            throw std::runtime_error("index file: alphabet size disagrees with header");
    }

    return idx;
}

inline compressed_index load_index(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open index: " + path);
    return load_index(is);
}

}  // namespace sfx
