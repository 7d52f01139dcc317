#include <doctest.h>

#include <random>

#include <json.hpp>

#include "sidon/bounds.hpp"
#include "sidon/counting.hpp"
#include "sidon/enumeration.hpp"

using namespace sidon;

TEST_CASE("k = 4 report") {
    const auto r = bounds_report(96, 4);
    const Rational n3 = Rational(96) * 96 * 96;
    REQUIRE(r.ub_k4);
    CHECK(r.ub_k4->value == 3 * n3 / 96);
    CHECK(r.lb_construction.value == 2 * n3 / 96);
    CHECK(r.lb_construction.coefficient == Rational(1, 48));
    CHECK(r.ub_general.coefficient == Rational(1, 12) - Rational(1, 96));
    REQUIRE(r.cyclic_ub_k4);
    CHECK(r.cyclic_ub_k4->value == 3 * n3 / 64);
    CHECK(r.cyclic_ub_k4->error_term.empty());
    REQUIRE(r.cyclic_lb_k4);
    CHECK(r.cyclic_lb_k4->value == n3 / 32);
    CHECK(r.s_k == 2);
    CHECK(r.total_exact == total_quads_formula(96));
    CHECK(r.ub_trivial.value == Rational(r.total_exact));  // n even: the formula has no theta
    CHECK(r.ub_general.error_term == "+O_k(n^2)");
    CHECK(r.lb_construction.error_term == "-O_k(n^2)");

    CHECK_FALSE(bounds_report(97, 4).cyclic_lb_k4);
    CHECK_FALSE(bounds_report(97, 5).ub_k4);
}

TEST_CASE("k = 5 coefficients") {
    const auto r = bounds_report(100, 5);
    CHECK(r.lb_construction.coefficient == Rational(2, 75));
    CHECK(construction_coefficient(5) == Rational(10, 375));
    CHECK(r.s_k == 5);
}

TEST_CASE("construction coefficient equals the lower-bound coefficient") {
    for (int k = 4; k <= 60; ++k) {
        CHECK(construction_coefficient(k) == lb_coefficient(k));
        CHECK(lb_coefficient(k) < ub_general_coefficient(k));
    }
    CHECK(theta_lb(4) == Rational(1, 3));
    CHECK(theta_lb(5) == Rational(1, 4));
}

TEST_CASE("parity corrections reproduce the integer closed forms") {
    for (long long n = 1; n <= 200; ++n) {
        const Rational m(n);
        CHECK(m * m * m / 12 - 3 * m * m / 8 + 5 * m / 12 - theta_total(n) == Rational(total_quads_formula(n)));
    }
    for (long long k = 4; k <= 100; ++k) {
        const Rational m(k);
        CHECK(m * m * m / 8 - m * m / 2 + theta_modular(k) * m == Rational(modular_count_formula(k).value));
    }
}

TEST_CASE("bounds_report errors") {
    CHECK_THROWS_AS(bounds_report(3, 4), Error);
    CHECK_THROWS_AS(bounds_report(10, 3), Error);
}

TEST_CASE("trivial upper bound dominates measured counts") {
    CHECK(trivial_upper_bound(5) == Rational(25, 8));  // 125/12 - 75/8 + 25/12
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 200);
        const auto c = random_coloring(n, 4 + static_cast<int>(rng() % 4), rng());
        CHECK(Rational(count_rainbow_fast(c)) <= trivial_upper_bound(n));
        CHECK(Rational(total_quads_formula(n)) <= trivial_upper_bound(n));
    }
}

TEST_CASE("construction check") {
    const auto c8 = check_construction_vs_lb(8, 4);
    CHECK(c8.rainbow == count_rainbow_naive(mod_coloring(8, 4)).rainbow);
    CHECK(c8.coefficient == Rational(1, 48));

    const auto c48 = check_construction_vs_lb(48, 4);
    CHECK(c48.rainbow == count_rainbow_naive(mod_coloring(48, 4)).rainbow);
    CHECK(c48.gap() > 0);

    CHECK(check_construction_vs_lb(25, 5).rainbow > 0);
    CHECK_THROWS_AS(check_construction_vs_lb(10, 4), Error);
}

TEST_CASE("report renderings") {
    const auto r = bounds_report(96, 4);
    const auto j = nlohmann::json::parse(bounds_json(r));
    CHECK(j["ub_k4"]["value"] == "27648");
    CHECK(j["lb_construction"]["value"] == "18432");
    CHECK(j["ub_general"]["coefficient"] == "7/96");
    CHECK(j["s_k"] == 2);
    CHECK(j["ub_general"]["error_term"] == "+O_k(n^2)");

    const auto text = bounds_text(r);
    CHECK(text.find("ub_k4") != std::string::npos);
    CHECK(text.find("27648") != std::string::npos);
    CHECK(bounds_text(bounds_report(10, 5)).find("ub_k4") == std::string::npos);
    CHECK(text.find("indicative, not asserted") != std::string::npos);
    CHECK(text.find("1/32") != std::string::npos);
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rational(3, 6)) == "1/2");
    CHECK(format_rational(Rational(-4, 2)) == "-2");
    CHECK(format_decimal(Rational(1, 48)) == "0.0208333");
    CHECK(format_fixed(Rational(1, 48), 9) == "0.020833333");
    CHECK(format_fixed(Rational(2, 3), 2) == "0.67");
    CHECK(format_fixed(Rational(5), 3) == "5.000");
    CHECK(format_fixed(Rational(-1, 8), 2) == "-0.13");
}
