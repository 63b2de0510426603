#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "golden.hpp"
#include "sfx/suffix_oracle.hpp"
#include "sfx/suffixient.hpp"
#include "test_util.hpp"

using namespace sfx;

TEST_CASE("run-boundary set on the worked example") {
    text t(golden::TEXT);
    const auto [s, stats] = suffixient_from_bwt_runs(t);
    CHECK(stats.r_bar == golden::R_BAR);
    CHECK(stats.boundary_count <= 2 * stats.r_bar);
    CHECK(s.positions.size() <= 2 * stats.r_bar);
    CHECK(s.source == suffixient_source::run_boundary);
    CHECK(is_suffixient(t, s.positions).ok);
    // the sentinel position is always needed and always extracted
    CHECK(s.positions.back() == t.size());
}

TEST_CASE("run-boundary set on degenerate texts") {
    SUBCASE("unary text") {
        text t(std::string(12, 'a'));
        const auto [s, stats] = suffixient_from_bwt_runs(t);
        CHECK(stats.r_bar == 2);   // one sentinel run, one symbol run
        CHECK(s.positions.size() <= 4);
        CHECK(is_suffixient(t, s.positions).ok);
    }
    SUBCASE("two distinct symbols") {
        text t("ab");
        const auto [s, stats] = suffixient_from_bwt_runs(t);
        CHECK(is_suffixient(t, s.positions).ok);
    }
    SUBCASE("single symbol text") {
        text t("a");
        const auto [s, stats] = suffixient_from_bwt_runs(t);
        CHECK(is_suffixient(t, s.positions).ok);
    }
}

TEST_CASE("run-boundary sets are suffixient, bounded, and attract") {
    tu::rng_t rng(91);
    for (int trial = 0; trial < 120; ++trial) {
        std::uniform_int_distribution<std::size_t> n_d(1, 200);
        std::uniform_int_distribution<int> s_pick(0, 2);
        const unsigned sigma = static_cast<unsigned>(2 << s_pick(rng));   // 2, 4, 8
        text t(tu::random_text(rng, n_d(rng), sigma));
        const auto [s, stats] = suffixient_from_bwt_runs(t);

        REQUIRE(stats.r_bar >= 1);
        REQUIRE(stats.boundary_count <= 2 * stats.r_bar);
        REQUIRE(s.positions.size() <= 2 * stats.r_bar);
        for (pos_t p : s.positions) REQUIRE((p >= 1 && p <= t.size()));
        REQUIRE(std::is_sorted(s.positions.begin(), s.positions.end()));
        REQUIRE(is_suffixient(t, s.positions).ok);
        if (t.size() <= 80) REQUIRE(is_string_attractor(t, s.positions));
    }
}

TEST_CASE("greedy_reduce keeps the set suffixient and never grows it") {
    tu::rng_t rng(92);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> n_d(1, 120);
        std::uniform_int_distribution<int> s_d(1, 4);
        text t(tu::random_text(rng, n_d(rng), static_cast<unsigned>(s_d(rng))));
        const auto [s, stats] = suffixient_from_bwt_runs(t);

        const suffixient_set reduced = greedy_reduce(t, s);
        REQUIRE(reduced.source == suffixient_source::greedy);
        REQUIRE(reduced.positions.size() <= s.positions.size());
        REQUIRE(is_suffixient(t, reduced.positions).ok);

        // idempotent: reducing again changes nothing
        const suffixient_set twice = greedy_reduce(t, reduced);
        REQUIRE(twice.positions == reduced.positions);
    }
}

TEST_CASE("greedy_reduce on a root-only suffix tree") {
    // "a$": the root is the only branching node, with two children
    text t("a");
    std::vector<pos_t> all{1, 2};
    const suffixient_set reduced = greedy_reduce(t, make_user_set(all));
    CHECK(reduced.positions.size() == 2);
}

TEST_CASE("greedy_reduce on the worked example") {
    text t(golden::TEXT);
    const auto [s, stats] = suffixient_from_bwt_runs(t);
    const suffixient_set reduced = greedy_reduce(t, s);
    CHECK(is_suffixient(t, reduced.positions).ok);
    // a 4-element suffixient set exists, so the pair cover needs at least 4
    CHECK(reduced.positions.size() >= 4);
    CHECK(reduced.positions.size() <= s.positions.size());
}

TEST_CASE("greedy_reduce rejects non-suffixient input") {
    text t(golden::TEXT);
    CHECK_THROWS_AS(greedy_reduce(t, make_user_set({1, 2})), std::invalid_argument);
}
