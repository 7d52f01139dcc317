#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sidon/counting.hpp"
#include "sidon/enumeration.hpp"

using namespace sidon;

namespace {

Coloring interval(int k, std::vector<int> colors) { return Coloring(Domain::Interval, k, std::move(colors)); }

}  // namespace

TEST_CASE("classify_quad") {
    const SidonQuad q{4, 3, 2, 1};
    CHECK(classify_quad(q, mod_coloring(4, 4)) == QuadClass::Rainbow);
    CHECK(classify_quad(q, constant_coloring(4, 4)) == QuadClass::Monochromatic);
    CHECK(classify_quad({5, 4, 2, 1}, interval(4, {1, 2, 3, 4, 1})) == QuadClass::ThreeColored);
    CHECK(classify_quad(q, interval(2, {1, 1, 2, 2})) == QuadClass::TwoColored);
    CHECK_THROWS_AS(classify_quad(q, mod_coloring(4, 4, Domain::Cyclic)), Error);
}

TEST_CASE("count_rainbow_naive examples") {
    const auto b = count_rainbow_naive(mod_coloring(4, 4));
    CHECK(b == ClassBreakdown{1, 0, 0, 0});

    const auto c = count_rainbow_naive(interval(4, {1, 2, 3, 4, 1}));
    CHECK(c.rainbow == 2);
    CHECK(c.three_colored == 1);
    CHECK(c.total() == 3);

    for (int n : {4, 10, 33}) {
        const auto m = count_rainbow_naive(constant_coloring(n, 4));
        CHECK(m.rainbow == 0);
        CHECK(m.monochromatic == total_quads_formula(n));
    }
}

TEST_CASE("naive breakdown matches the all-subsets oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 30);
        const int k = 1 + static_cast<int>(rng() % 7);
        const auto c = random_coloring(n, k, rng());
        const auto b = count_rainbow_naive(c);
        CHECK(b.rainbow == oracle::rainbow(c));
        CHECK(b.total() == total_quads_formula(n));
    }
}

TEST_CASE("fast and energy counters agree with naive") {
    CHECK(count_rainbow_fast(mod_coloring(4, 4)) == 1);
    CHECK(rainbow_via_energy(interval(4, {1, 2, 3, 4, 1})) == 2);
    CHECK(rainbow_via_energy(mod_coloring(8, 4)) == count_rainbow_naive(mod_coloring(8, 4)).rainbow);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 150);
        const int k = 4 + static_cast<int>(rng() % 5);
        const auto c = random_coloring(n, k, rng());
        const Count naive = count_rainbow_naive(c).rainbow;
        REQUIRE(count_rainbow_fast(c) == naive);
        if (k == 4) REQUIRE(rainbow_via_energy(c) == naive);
    }
}

TEST_CASE("empty color classes") {
    // color 4 never used
    const auto c = interval(4, {1, 2, 3, 1, 2, 3, 1, 2, 3, 1});
    CHECK(count_rainbow_fast(c) == 0);
    CHECK(rainbow_via_energy(c) == 0);
    CHECK(count_rainbow_naive(c).rainbow == 0);

    // six colors declared, two unused
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        auto base = random_coloring(40, 4, rng());
        const auto c6 = Coloring(Domain::Interval, 6, {base.colors().begin(), base.colors().end()});
        CHECK(count_rainbow_fast(c6) == count_rainbow_naive(c6).rainbow);
    }
}

TEST_CASE("fast counter: chunking and naive fallback do not change the count") {
    const auto c = random_coloring(97, 6, 12);
    const Count ref = count_rainbow_naive(c).rainbow;
    for (int chunks : {1, 2, 3, 7, 500}) CHECK(count_rainbow_fast(c, {.chunks = chunks}) == ref);
    CHECK(count_rainbow_fast(c, {.memory_budget_bytes = 16}) == ref);
}

TEST_CASE("rainbow count is invariant under relabeling colors") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 4 + static_cast<int>(rng() % 4);
        const auto c = random_coloring(60, k, rng());
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> relabeled;
        for (int x : c.colors()) relabeled.push_back(perm[x - 1]);
        CHECK(count_rainbow_fast(interval(k, relabeled)) == count_rainbow_fast(c));
    }
}

TEST_CASE("energy counter needs four colors") {
    CHECK_THROWS_AS(rainbow_via_energy(mod_coloring(10, 5)), Error);
}

TEST_CASE("cyclic counting") {
    CHECK(count_rainbow_cyclic_naive(mod_coloring(8, 4, Domain::Cyclic)) == 16);
    CHECK(count_rainbow_cyclic_fast(mod_coloring(8, 4, Domain::Cyclic)) == 16);
    CHECK(count_rainbow_cyclic_fast(mod_coloring(12, 4, Domain::Cyclic)) == 54);
    CHECK(count_rainbow_cyclic_naive(constant_coloring(9, 4, Domain::Cyclic)) == 0);

    // all five residues distinct colors: every pairing is rainbow, |S(5)| = 5
    const auto all5 = mod_coloring(5, 5, Domain::Cyclic);
    CHECK(oracle::cyclic_rainbow(all5) == 5);
    CHECK(count_rainbow_cyclic_naive(all5) == 5);
    CHECK(count_rainbow_cyclic_fast(all5) == 5);

    CHECK_THROWS_AS(count_rainbow_cyclic_naive(mod_coloring(8, 4)), Error);

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 40);
        const int k = 4 + static_cast<int>(rng() % 3);
        const auto c = random_coloring(n, k, rng(), Domain::Cyclic);
        const Count naive = count_rainbow_cyclic_naive(c);
        REQUIRE(naive == oracle::cyclic_rainbow(c));
        REQUIRE(count_rainbow_cyclic_fast(c) == naive);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 100 + static_cast<int>(rng() % 100);
        const auto c = random_coloring(n, 4, rng(), Domain::Cyclic);
        const Count fast = count_rainbow_cyclic_fast(c);
        REQUIRE(fast == count_rainbow_cyclic_naive(c));
        REQUIRE(64 * fast <= 3LL * n * n * n);
    }
}

TEST_CASE("monochromatic pairs") {
    const auto m = monochromatic_pairs(mod_coloring(8, 4));
    CHECK(m.count == 4);
    CHECK(m.bound_holds());
    CHECK(monochromatic_pairs(constant_coloring(12, 4)).count == 66);
    CHECK(monochromatic_pairs(mod_coloring(6, 6)).count == 0);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = random_coloring(5 + static_cast<int>(rng() % 100), 4 + static_cast<int>(rng() % 5), rng());
        CHECK(monochromatic_pairs(c).bound_holds());
    }
}

TEST_CASE("non-rainbow lower bound") {
    const auto mono = constant_coloring(10, 4);
    const auto b = count_rainbow_naive(mono);
    CHECK(b.total() - b.rainbow == 50);
    CHECK(Rational(50) >= non_rainbow_lower_bound(mono));
    // a monochromatic 4-set is hit by all six of its pairs, so equality here
    CHECK(non_rainbow_lower_bound(mono) == Rational(50));

    CHECK(non_rainbow_lower_bound(mod_coloring(7, 7)) == 0);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = random_coloring(4 + static_cast<int>(rng() % 80), 4 + static_cast<int>(rng() % 4), rng());
        const auto br = count_rainbow_naive(c);
        CHECK(Rational(br.total() - br.rainbow) >= non_rainbow_lower_bound(c));
    }
}
