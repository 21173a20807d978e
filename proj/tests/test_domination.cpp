#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "domavg/domination.hpp"
#include "domavg/extremal.hpp"
#include "domavg/generators.hpp"
#include "domavg/reports.hpp"
#include "support/random_graphs.hpp"

using namespace domavg;

namespace {

std::vector<BigInt> coeffs(std::initializer_list<long> values) {
    return std::vector<BigInt>(values.begin(), values.end());
}

DominationTally convolve(const DominationTally& a, const DominationTally& b) {
    DominationTally out;
    out.n = a.n + b.n;
    out.d.assign(static_cast<std::size_t>(out.n) + 1, 0);
    for (int i = 0; i <= a.n; ++i)
        for (int j = 0; j <= b.n; ++j)
            out.d[static_cast<std::size_t>(i + j)] +=
                a.d[static_cast<std::size_t>(i)] * b.d[static_cast<std::size_t>(j)];
    return out;
}

} // namespace

TEST_CASE("is_dominating") {
    const Graph c4 = cycle_graph(4);
    CHECK(is_dominating(c4, VertexSet{0b0011}));
    CHECK_FALSE(is_dominating(c4, VertexSet::single(0)));
    CHECK(is_dominating(c4, c4.vertices()));
    CHECK_THROWS_AS(is_dominating(c4, VertexSet{0b10000}), std::invalid_argument);
}

TEST_CASE("brute-force tallies of named graphs") {
    CHECK(tally_bruteforce(path_graph(3)).d == coeffs({0, 1, 3, 1}));
    CHECK(tally_bruteforce(cycle_graph(4)).d == coeffs({0, 0, 6, 4, 1}));
    CHECK(tally_bruteforce(complete_graph(1)).d == coeffs({0, 1}));
    CHECK(tally_bruteforce(empty_graph(0)).d == coeffs({1}));
    CHECK(tally_bruteforce(path_graph(3)).gamma() == 1);
    CHECK(tally_bruteforce(cycle_graph(4)).gamma() == 2);
}

TEST_CASE("fast tally on degenerate graphs") {
    CHECK(tally_fast(empty_graph(0)).d == coeffs({1}));
    CHECK(tally_fast(empty_graph(1)).d == coeffs({0, 1}));
    CHECK(tally_fast(empty_graph(5)).d == coeffs({0, 0, 0, 0, 0, 1}));
    CHECK(tally_fast(complete_graph(3)).d == coeffs({0, 3, 3, 1}));
}

TEST_CASE("fast path equals the oracle on every class up to order 6") {
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : generate_all_nonisomorphic(n))
            CHECK(tally_fast(g).d == tally_bruteforce(g).d);
}

TEST_CASE("fast path equals the oracle on random mid-size graphs") {
    std::mt19937_64 rng(123456);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 7);
        const Graph g = testing::random_graph(rng, n);
        const DominationTally fast = tally_fast(g);
        const DominationTally slow = tally_bruteforce(g);
        REQUIRE(fast.d == slow.d);
        validate_tally(fast);
    }
}

TEST_CASE("disjoint union tallies convolve") {
    const Graph c4 = cycle_graph(4);
    const DominationTally base = tally_fast(c4);
    CHECK(tally_fast(disjoint_union(c4, c4)).d == convolve(base, base).d);

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = testing::random_graph(rng, 2 + static_cast<int>(rng() % 5));
        const Graph h = testing::random_graph(rng, 2 + static_cast<int>(rng() % 5));
        CHECK(tally_fast(disjoint_union(g, h)).d ==
              convolve(tally_fast(g), tally_fast(h)).d);
    }
}

TEST_CASE("average order closed forms") {
    // K_n: n * 2^(n-1) / (2^n - 1).
    for (int n = 1; n <= 16; ++n) {
        const AvdSummary s = average_order(complete_graph(n));
        const Rational expected(BigInt(n) * (BigInt(1) << (n - 1)), (BigInt(1) << n) - 1);
        CHECK(s.average == expected);
    }
    CHECK(average_order(complete_graph(2)).average == Rational(4, 3));
    CHECK(average_order(complete_graph(3)).average == Rational(12, 7));
    CHECK(average_order(complete_graph(4)).average == Rational(32, 15));

    for (int n = 1; n <= 10; ++n)
        CHECK(average_order(empty_graph(n)).average == Rational(n));

    const AvdSummary p3 = average_order(path_graph(3));
    CHECK(p3.gamma_total == 5);
    CHECK(p3.gamma_weighted == 10);
    CHECK(p3.average == Rational(2));

    CHECK_THROWS_AS(average_order(empty_graph(0)), std::domain_error);
}

TEST_CASE("average order stays between gamma and n") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = testing::random_graph(rng, n);
        const DominationTally tally = tally_fast(g);
        const AvdSummary s = average_order(tally);
        CHECK(s.average >= Rational(tally.gamma()));
        CHECK(s.average <= Rational(n));
    }
}

TEST_CASE("bound checks on named graphs") {
    const BoundReport p4 = check_bound(path_graph(4));
    CHECK(p4.verdict == BoundVerdict::holds_equality);
    CHECK(p4.star_like);
    CHECK(p4.equality_matches_star_like);

    const BoundReport star = check_bound(star_graph(4));
    CHECK(star.verdict == BoundVerdict::holds_strict);
    CHECK(star.average == Rational(23, 9));
    CHECK_FALSE(star.star_like);
    CHECK(star.equality_matches_star_like);

    const BoundReport k2 = check_bound(complete_graph(2));
    CHECK(k2.verdict == BoundVerdict::holds_equality);
    CHECK(k2.average == Rational(4, 3));

    // One isolated vertex: compare against (2n+r)/3.
    const BoundReport iso = check_bound(disjoint_union(empty_graph(1), complete_graph(2)));
    CHECK(iso.isolated_count == 1);
    CHECK(iso.bound == Rational(7, 3));
    CHECK(iso.verdict != BoundVerdict::violated);
    CHECK(iso.average == Rational(7, 3));

    CHECK(check_bound(complete_graph(1)).verdict == BoundVerdict::not_applicable);
    CHECK(check_bound(empty_graph(0)).verdict == BoundVerdict::not_applicable);
}

TEST_CASE("oracle refuses orders above its cap") {
    CHECK_THROWS_AS(tally_bruteforce(empty_graph(25)), std::domain_error);
    CHECK_THROWS_AS(tally_bruteforce(empty_graph(10), 8), std::domain_error);
    CHECK_NOTHROW(tally_bruteforce(empty_graph(10), 10));
}

TEST_CASE("tally invariants validate and catch corruption") {
    const Graph g = cycle_graph(5);
    DominationTally tally = tally_fast(g);
    CHECK_NOTHROW(validate_tally(tally));
    tally.d[5] = 2;
    CHECK_THROWS_AS(validate_tally(tally), std::logic_error);
    tally = tally_fast(g);
    tally.d[3] = -1;
    CHECK_THROWS_AS(validate_tally(tally), std::logic_error);
}

TEST_CASE("Gamma counts exactly the sets passing is_dominating") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = testing::random_graph(rng, n);
        BigInt direct = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            if (is_dominating(g, VertexSet{mask})) ++direct;
        CHECK(tally_fast(g).total() == direct);
        CHECK(tally_bruteforce(g).total() == direct);
    }
}

TEST_CASE("every superset of a dominating set dominates") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = testing::random_graph(rng, n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (!is_dominating(g, VertexSet{mask})) continue;
            for (int v = 0; v < n; ++v) {
                VertexSet bigger{mask};
                bigger.add(v);
                CHECK(is_dominating(g, bigger));
            }
        }
    }
}

TEST_CASE("worker count does not change results") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 6; ++trial) {
        const Graph g = testing::random_graph(rng, 10 + static_cast<int>(rng() % 4));
        const DominationTally one = tally_fast(g, kDefaultFastCap, 1);
        const DominationTally four = tally_fast(g, kDefaultFastCap, 4);
        const DominationTally eight = tally_fast(g, kDefaultFastCap, 8);
        CHECK(one.d == four.d);
        CHECK(one.d == eight.d);
        CHECK(tally_bruteforce(g, kDefaultOracleCap, 1).d ==
              tally_bruteforce(g, kDefaultOracleCap, 5).d);
    }
}

TEST_CASE("tally JSON uses decimal strings and num/den rationals") {
    const Graph p3 = path_graph(3);
    const nlohmann::json j = tally_json(p3, tally_fast(p3));
    CHECK(j["n"] == 3);
    CHECK(j["d"] == nlohmann::json({"0", "1", "3", "1"}));
    CHECK(j["gamma"] == 1);
    CHECK(j["Gamma"] == "5");
    CHECK(j["GammaPrime"] == "10");
    CHECK(j["avd"]["num"] == "2");
    CHECK(j["avd"]["den"] == "1");

    const Graph empty0 = empty_graph(0);
    CHECK(tally_json(empty0, tally_fast(empty0))["avd"].is_null());
}
