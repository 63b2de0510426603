/*
 * sfxt - suffixient text index CLI.
 *
 *   sfxt build  -t <text> -o <index> [--seed N]
 *   sfxt query  -i <index> (-p <file> | -P <string>) [--min-len K] [--stats]
 *   sfxt stats  -i <index>
 *   sfxt verify [-t <file>] [--trials N] [--sigma S] [--max-n N] [--max-m M]
 *               [--seed N] [--suffixient-set "p1,p2,..."]
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
 */
#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sfx/index_io.hpp"
#include "sfx/mem_finder.hpp"
#include "sfx/suffix_oracle.hpp"
#include "sfx/suffixient.hpp"
#include "sfx/text.hpp"

using namespace sfx;

namespace {

constexpr int EXIT_VERIFY_FAIL = 1;
constexpr int EXIT_USAGE_IO = 2;

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

struct fasta_record {
    std::string name;
    std::string data;
};

// Lines starting with '>' open a record; other lines are concatenated
// with newlines (and carriage returns) stripped.
std::vector<fasta_record> parse_fasta(const std::string& raw) {
    std::vector<fasta_record> records;
    std::istringstream is(raw);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '>') {
            records.push_back({line.substr(1), ""});
        } else {
            if (records.empty()) records.push_back({"", ""});
            records.back().data += line;
        }
    }
    return records;
}

bool looks_like_fasta(const std::string& raw) {
    for (char c : raw) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '>';
    }
    return false;
}

struct loaded_text {
    std::string data;         // record bytes, separators inserted
    std::uint32_t separator;  // first separator byte, 0 when none
};

// Multi-record input gets one unused byte value between consecutive
// records, a fresh value per boundary, so no match can cross records.
loaded_text load_text_file(const std::string& path) {
    const std::string raw = read_file(path);
    if (!looks_like_fasta(raw)) return {raw, 0};

    const std::vector<fasta_record> records = parse_fasta(raw);
    std::array<bool, 256> used{};
    for (const auto& r : records)
        for (unsigned char c : r.data) used[c] = true;

    std::string data;
    std::uint32_t first_sep = 0;
    int next = 1;   // candidate separator byte values, sentinel 0 excluded
    for (std::size_t k = 0; k < records.size(); ++k) {
        if (k > 0) {
            while (next < 256 && used[next]) ++next;
            if (next == 256)
                throw std::runtime_error("no byte values left for record separators");
            if (first_sep == 0) first_sep = static_cast<std::uint32_t>(next);
            data.push_back(static_cast<char>(next));
            ++next;
        }
        data += records[k].data;
    }
    return {data, records.size() > 1 ? first_sep : 0};
}

std::vector<fasta_record> load_pattern_file(const std::string& path) {
    const std::string raw = read_file(path);
    if (looks_like_fasta(raw)) return parse_fasta(raw);
    return {{"", raw}};
}

void print_index_stats(std::ostream& os, const compressed_index& idx) {
    os << "n       = " << idx.n << "\n"
       << "sigma   = " << idx.sigma << "\n"
       << "r_bar   = " << idx.r_bar << "\n"
       << "g       = " << idx.g() << "\n"
       << "|S|     = " << idx.suffixient.positions.size() << "\n"
       << "height  = " << idx.height() << "\n";
}

void print_mems(std::ostream& os, const std::vector<mem>& mems, std::uint64_t min_len) {
    for (const mem& m : mems)
        if (m.length() >= min_len)
            os << m.start << "\t" << m.end << "\t" << m.length() << "\n";
}

void print_query_stats(std::ostream& os, const query_stats& st) {
    os << "iterations=" << st.iterations << " zft_calls=" << st.zft_calls
       << " lcs_calls=" << st.lcs_calls << " lcp_calls=" << st.lcp_calls
       << " zft_engine_lcs_calls=" << st.zft_engine_lcs_calls << "\n";
}

std::string printable(const std::string& s) {
    std::string out;
    for (unsigned char c : s) {
        if (c >= 32 && c < 127) {
            out.push_back(static_cast<char>(c));
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", c);
            out += buf;
        }
    }
    return out;
}

int cmd_build(const std::string& text_path, const std::string& out_path, std::uint64_t seed) {
    const loaded_text lt = load_text_file(text_path);
    const text t(lt.data);
    compressed_index idx = build_index(t, seed);
    idx.separator = lt.separator;
    save_index(idx, out_path);
    print_index_stats(std::cout, idx);

    std::ifstream is(out_path, std::ios::binary | std::ios::ate);
    std::cout << "wrote " << out_path << " (" << is.tellg() << " bytes)\n";
    return 0;
}

int cmd_query(const std::string& index_path, const std::string& pattern_path,
              const std::string& inline_pattern, bool have_inline,
              std::uint64_t min_len, bool stats) {
    const compressed_index idx = load_index(index_path);

    std::vector<fasta_record> records;
    if (have_inline)
        records.push_back({"", inline_pattern});
    else
        records = load_pattern_file(pattern_path);

    query_stats total;
    for (std::size_t k = 0; k < records.size(); ++k) {
        if (records.size() > 1)
            std::cout << "# " << (records[k].name.empty() ? std::to_string(k) : records[k].name)
                      << "\n";
        const pattern p(records[k].data);
        const mem_result res = find_mems(idx, p);
        print_mems(std::cout, res.mems, min_len);
        total.iterations += res.stats.iterations;
        total.zft_calls += res.stats.zft_calls;
        total.lcs_calls += res.stats.lcs_calls;
        total.lcp_calls += res.stats.lcp_calls;
        total.zft_engine_lcs_calls += res.stats.zft_engine_lcs_calls;
    }
    if (stats) print_query_stats(std::cerr, total);
    return 0;
}

int cmd_stats(const std::string& index_path) {
    const compressed_index idx = load_index(index_path);
    print_index_stats(std::cout, idx);
    std::cout << "seed    = " << idx.cfg().seed << "\n"
              << "modulus = " << idx.cfg().modulus << "\n"
              << "source  = "
              << (idx.suffixient.source == suffixient_source::run_boundary ? "run-boundary"
                  : idx.suffixient.source == suffixient_source::greedy     ? "greedy"
                                                                           : "user-supplied")
              << "\n";
    if (idx.separator != 0) std::cout << "separator = " << idx.separator << "\n";
    return 0;
}

struct verify_options {
    std::string text_path;
    std::uint64_t trials = 100;
    unsigned sigma = 2;
    std::uint64_t max_n = 100;
    std::uint64_t max_m = 50;
    std::uint64_t seed = 1;
    std::string suffixient_csv;
    std::uint64_t attractor_cap = 400;   // brute-force attractor check is cubic-ish
};

struct verify_state {
    std::uint64_t checks = 0;
    bool failed = false;
    std::string reproducer;
};

void fail(verify_state& vs, const std::string& what, const std::string& repro) {
    vs.failed = true;
    vs.reproducer = what + "\n" + repro;
}

std::string repro_line(std::uint64_t seed, const text& t, const std::string& pattern_bytes) {
    std::string out = "reproduce: seed=" + std::to_string(seed) +
                      " text=" + printable(std::string(t.raw()));
    if (!pattern_bytes.empty()) out += " pattern=" + printable(pattern_bytes);
    return out;
}

std::string rand_string(std::mt19937_64& rng, std::uint64_t n, unsigned sigma) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(sigma) - 1);
    std::string s(n, 'a');
    for (auto& c : s) c = static_cast<char>('a' + pick(rng));
    return s;
}

std::string rand_pattern(std::mt19937_64& rng, const std::string& traw, std::uint64_t m,
                         unsigned sigma) {
    std::uniform_int_distribution<int> mode(0, 2);
    if (mode(rng) == 0 || traw.empty()) return rand_string(rng, m, sigma);
    std::string p;
    std::uniform_int_distribution<std::size_t> start_d(0, traw.size() - 1);
    while (p.size() < m) {
        const std::size_t a = start_d(rng);
        p.append(traw, a, std::min<std::size_t>(m - p.size(), traw.size() - a));
    }
    std::uniform_int_distribution<std::size_t> pos_d(0, m - 1);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(sigma) - 1);
    for (std::size_t k = 0; k < 1 + m / 16; ++k)
        p[pos_d(rng)] = static_cast<char>('a' + pick(rng));
    return p;
}

// The whole oracle battery over one text: run-boundary construction,
// suffixient and attractor checks, and query answers against both the
// naive scan and the suffix tree walk.
void verify_text(verify_state& vs, const text& t, std::mt19937_64& rng,
                 const verify_options& opt, std::uint64_t build_seed) {
    const auto [s, stats] = suffixient_from_bwt_runs(t);
    ++vs.checks;
    if (s.positions.size() > 2 * stats.r_bar)
        return fail(vs, "run-boundary set exceeds 2*r_bar", repro_line(opt.seed, t, ""));
    ++vs.checks;
    const suffixient_check sc = is_suffixient(t, s.positions);
    if (!sc.ok)
        return fail(vs, "run-boundary set is not suffixient", repro_line(opt.seed, t, ""));
    if (t.size() <= opt.attractor_cap) {
        ++vs.checks;
        if (!is_string_attractor(t, s.positions))
            return fail(vs, "run-boundary set is not a string attractor",
                        repro_line(opt.seed, t, ""));
    }

    const suffix_tree st = build_suffix_tree(t);
    const compressed_index idx = build_index(t, build_seed);

    std::uniform_int_distribution<std::uint64_t> m_d(1, std::max<std::uint64_t>(1, opt.max_m));
    for (int q = 0; q < 4; ++q) {
        const std::string praw =
            rand_pattern(rng, std::string(t.raw()), m_d(rng), static_cast<unsigned>(opt.sigma));
        const pattern p(praw);

        const std::vector<mem> naive = mems_naive(t, p);
        mem_result res = find_mems(idx, p);
        ++vs.checks;
        if (res.mems != naive)
            return fail(vs, "index MEMs disagree with the naive scan",
                        repro_line(opt.seed, t, praw));

        std::vector<mem> walked;
        std::uint64_t d = 0;
        for (const auto& c : split_pattern(p, t)) {
            const descent_trace dt = mems_by_suffix_tree(t, st, pattern(c.bytes));
            d += dt.d;
            for (const mem& m : dt.mems)
                walked.push_back({m.start + c.offset - 1, m.end + c.offset - 1});
        }
        res.stats.d_reference = d;
        ++vs.checks;
        if (walked != naive)
            return fail(vs, "suffix tree walk disagrees with the naive scan",
                        repro_line(opt.seed, t, praw));
        ++vs.checks;
        if (res.stats.iterations > *res.stats.d_reference)
            return fail(vs, "query iterations exceed the descent count",
                        repro_line(opt.seed, t, praw));

        // spot-check the LCP/LCS engine against naive answers
        const pattern_hashes ph(p, idx.cfg());
        std::uniform_int_distribution<pos_t> i_d(1, p.size() + 1), j_d(1, t.size() + 1);
        for (int k = 0; k < 16; ++k) {
            const pos_t i = i_d(rng), j = j_d(rng);
            ++vs.checks;
            if (lcp(idx.grammar, ph, i, j) !=
                lcp_naive(p.slice(i, p.size()), t.slice(j, t.size())))
                return fail(vs, "lcp disagrees with the naive scan", repro_line(opt.seed, t, praw));
            ++vs.checks;
            if (lcs(idx.grammar, ph, i - 1, j - 1) !=
                lcs_naive(p.slice(1, i - 1), t.slice(1, j - 1)))
                return fail(vs, "lcs disagrees with the naive scan", repro_line(opt.seed, t, praw));
        }
    }
}

int cmd_verify(const verify_options& opt) {
    verify_state vs;
    std::mt19937_64 rng(opt.seed);

    if (!opt.text_path.empty()) {
        const loaded_text lt = load_text_file(opt.text_path);
        const text t(lt.data);

        if (!opt.suffixient_csv.empty()) {
            std::vector<pos_t> positions;
            std::stringstream ss(opt.suffixient_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) positions.push_back(std::stoull(item));
            const suffixient_check sc = is_suffixient(t, positions);
            ++vs.checks;
            if (sc.ok) {
                std::cout << "suffixient-set check: OK (" << positions.size()
                          << " positions)\n";
            } else {
                std::cout << "suffixient-set check: FAILED, " << sc.violations.size()
                          << " uncovered pair(s)\n";
                for (const auto& v : sc.violations)
                    std::cout << "  uncovered: alpha=\"" << printable(v.alpha)
                              << "\" followed by '" << printable(std::string(1, (char)v.next))
                              << "'\n";
                std::cout << "FAIL\n";
                return EXIT_VERIFY_FAIL;
            }
        }

        verify_text(vs, t, rng, opt, opt.seed);
        if (vs.failed) {
            std::cout << vs.reproducer << "\nFAIL\n";
            return EXIT_VERIFY_FAIL;
        }
    }

    std::uniform_int_distribution<std::uint64_t> n_d(1, std::max<std::uint64_t>(1, opt.max_n));
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
        const text t(rand_string(rng, n_d(rng), opt.sigma));
        verify_text(vs, t, rng, opt, opt.seed + trial + 1);
        if (vs.failed) {
            std::cout << "trial " << trial << ": " << vs.reproducer << "\nFAIL\n";
            return EXIT_VERIFY_FAIL;
        }
    }

    std::cout << "OK (" << vs.checks << " checks";
    if (opt.trials > 0) std::cout << ", " << opt.trials << " random trials";
    std::cout << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"suffixient text index: build, query, verify"};
    app.require_subcommand(1);

    std::string text_path, out_path, index_path, pattern_path, inline_pattern;
    std::uint64_t seed = DEFAULT_SEED;
    std::uint64_t min_len = 1;
    bool want_stats = false;
    verify_options vopt;

    auto* build = app.add_subcommand("build", "build an index from a text file");
    build->add_option("-t,--text", text_path, "text file (plain bytes or FASTA)")->required();
    build->add_option("-o,--output", out_path, "output index file")->required();
    build->add_option("--seed", seed, "hash seed (default fixed)");

    auto* query = app.add_subcommand("query", "report MEMs of a pattern");
    query->add_option("-i,--index", index_path, "index file")->required();
    auto* popt = query->add_option("-p,--pattern-file", pattern_path, "pattern file");
    auto* Popt = query->add_option("-P,--pattern", inline_pattern, "inline pattern string");
    query->add_option("--min-len", min_len, "only report MEMs at least this long");
    query->add_flag("--stats", want_stats, "print query counters to stderr");

    auto* stats = app.add_subcommand("stats", "print index statistics");
    stats->add_option("-i,--index", index_path, "index file")->required();

    auto* verify = app.add_subcommand("verify", "run the oracle battery");
    verify->add_option("-t,--text", vopt.text_path, "check this text file");
    verify->add_option("--trials", vopt.trials, "random instances to check (default 100)");
    verify->add_option("--sigma", vopt.sigma, "alphabet size for random texts");
    verify->add_option("--max-n", vopt.max_n, "max random text length");
    verify->add_option("--max-m", vopt.max_m, "max random pattern length");
    verify->add_option("--seed", vopt.seed, "random seed");
    verify->add_option("--suffixient-set", vopt.suffixient_csv,
                       "comma-separated positions to check against -t");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE_IO;
    }

    try {
        if (build->parsed()) return cmd_build(text_path, out_path, seed);
        if (query->parsed()) {
            if (popt->count() == 0 && Popt->count() == 0)
                throw std::runtime_error("query: need -p or -P");
            return cmd_query(index_path, pattern_path, inline_pattern, Popt->count() > 0,
                             min_len, want_stats);
        }
        if (stats->parsed()) return cmd_stats(index_path);
        if (verify->parsed()) return cmd_verify(vopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE_IO;
    }
    return EXIT_USAGE_IO;
}
