#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "sidon/core.hpp"

using namespace sidon;

TEST_CASE("make_quad canonicalizes any order") {
    const auto q = make_quad(1, 4, 2, 3, 4);
    REQUIRE(q);
    CHECK(*q == SidonQuad{4, 3, 2, 1});
    CHECK(make_quad(1, 2, 3, 4, 4) == q);
    CHECK(q->x1 + q->x4 == q->x2 + q->x3);
}

TEST_CASE("make_quad rejects non-solutions and repeats") {
    CHECK_FALSE(make_quad(1, 2, 3, 5, 5));
    CHECK_FALSE(make_quad(1, 1, 2, 2, 5));
    CHECK_FALSE(make_quad(2, 2, 2, 2, 5));
}

TEST_CASE("make_quad errors outside [1,n]") {
    CHECK_THROWS_AS(make_quad(0, 1, 2, 3, 4), Error);
    CHECK_THROWS_AS(make_quad(1, 2, 3, 5, 4), Error);
}

TEST_CASE("make_quad is order-insensitive on every permutation") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> pick(1, 30);
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        const int d = b + c - a;
        if (d < 1 || d > 30) continue;
        std::array<int, 4> v{a, b, c, d};
        std::sort(v.begin(), v.end());
        const auto ref = make_quad(v[0], v[1], v[2], v[3], 30);
        do {
            const auto q = make_quad(v[0], v[1], v[2], v[3], 30);
            CHECK(q == ref);
            if (q) {
                CHECK(q->x1 > q->x2);
                CHECK(q->x2 > q->x3);
                CHECK(q->x3 > q->x4);
                CHECK(make_quad(q->x1, q->x2, q->x3, q->x4, 30) == q);
            }
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("mod_coloring") {
    auto colors = [](const Coloring& c) { return std::vector<int>(c.colors().begin(), c.colors().end()); };
    CHECK(colors(mod_coloring(8, 4)) == std::vector<int>{1, 2, 3, 4, 1, 2, 3, 4});
    CHECK(colors(mod_coloring(4, 4)) == std::vector<int>{1, 2, 3, 4});
    CHECK(colors(mod_coloring(5, 4)) == std::vector<int>{1, 2, 3, 4, 1});
    CHECK_THROWS_AS(mod_coloring(3, 4), Error);

    for (int k = 1; k <= 7; ++k) {
        const auto c = mod_coloring(6 * k, k);
        for (const auto& cls : c.color_classes()) CHECK(cls.size() == 6);
    }
}

TEST_CASE("cyclic lookups reduce into {1..n}") {
    const auto c = mod_coloring(8, 4, Domain::Cyclic);
    CHECK(c(8) == 4);
    CHECK(c(16) == 4);
    CHECK(c(0) == 4);
    CHECK(c(9) == 1);
    CHECK(c(-1) == 3);
}

TEST_CASE("random_coloring is deterministic") {
    CHECK(random_coloring(1, 1, 7).colors()[0] == 1);
    CHECK(random_coloring(100, 4, 1) == random_coloring(100, 4, 1));
    const auto c = random_coloring(100, 4, 1);
    for (int x : c.colors()) {
        CHECK(x >= 1);
        CHECK(x <= 4);
    }
}

TEST_CASE("coloring construction validates") {
    CHECK_THROWS_AS(Coloring(Domain::Interval, 0, {1}), Error);
    CHECK_THROWS_AS(Coloring(Domain::Interval, 2, {}), Error);
    CHECK_THROWS_WITH_AS(Coloring(Domain::Interval, 4, {1, 2, 5, 4}), "color out of range at index 3", Error);
}

TEST_CASE("coloring JSON") {
    const std::string text = R"({"domain":"interval","n":4,"k":4,"colors":[1,2,3,4]})";
    const auto c = parse_coloring(text);
    CHECK(c.n() == 4);
    CHECK(c.k() == 4);
    CHECK(c.domain() == Domain::Interval);
    CHECK(serialize_coloring(c) == text);

    CHECK_THROWS_WITH_AS(parse_coloring(R"({"domain":"interval","n":4,"k":4,"colors":[1,2,5,4]})"),
                         "color out of range at index 3", Error);
    CHECK_THROWS_WITH_AS(parse_coloring(R"({"domain":"interval","n":4,"k":4,"colors":[1,2,3]})"),
                         doctest::Contains("length mismatch"), Error);
    CHECK_THROWS_WITH_AS(parse_coloring(R"({"domain":"interval","n":4,)"), doctest::Contains("malformed JSON at byte"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_coloring(R"({"domain":"torus","n":1,"k":1,"colors":[1]})"),
                         doctest::Contains("unknown domain"), Error);
    CHECK_THROWS_WITH_AS(parse_coloring(R"({"n":1,"k":1,"colors":[1]})"), doctest::Contains("missing field"), Error);
}

TEST_CASE("parse(serialize(c)) == c") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 60);
        const int k = 1 + static_cast<int>(rng() % 9);
        const auto dom = trial % 2 ? Domain::Cyclic : Domain::Interval;
        const auto c = random_coloring(n, k, rng(), dom);
        CHECK(parse_coloring(serialize_coloring(c)) == c);
    }
}

TEST_CASE("JSON-lines batches") {
    const std::string text = R"({"domain":"interval","n":2,"k":2,"colors":[1,2]}

{"domain":"cyclic","n":3,"k":1,"colors":[1,1,1]}
)";
    const auto cs = parse_colorings(text);
    REQUIRE(cs.size() == 2);
    CHECK(cs[1].domain() == Domain::Cyclic);

    const std::string pretty = "{\n  \"domain\": \"interval\",\n  \"n\": 1,\n  \"k\": 1,\n  \"colors\": [1]\n}\n";
    CHECK(parse_colorings(pretty).size() == 1);

    CHECK_THROWS_WITH_AS(parse_colorings("{\"domain\":\"interval\",\"n\":1,\"k\":1,\"colors\":[1]}\n{bad}\n"),
                         doctest::Contains("line 2"), Error);
}
