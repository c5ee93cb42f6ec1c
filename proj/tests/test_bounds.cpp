#include <doctest.h>

#include <k4count/bounds.hpp>
#include <k4count/cycles.hpp>
#include <k4count/generators.hpp>

#include "testutil.hpp"

using namespace k4count;

TEST_CASE("closed forms at fixed arguments") {
    CHECK(whitney_ear_count(6, 10) == 5);
    CHECK(cycle_bound_from_ears(1) == 1);
    CHECK(cycle_bound_from_ears(3) == 6);
    CHECK(cycle_bound_from_nm(4, 6) == 6);
    CHECK(cycle_bound_from_nm(6, 6) == 1);
    CHECK(cycle_bound_min_degree(4, 3) == Rational(6));
    CHECK(cycle_bound_min_degree(8, 3) == Rational(15));
    CHECK(cycle_bound_min_degree(5, 4) == Rational(21));
    CHECK(phi_lower_cubic(4) == 1);
    CHECK(phi_lower_cubic(5) == 3);
    CHECK(phi_lower_cubic(6) == 5);
    CHECK(phi_lower_cubic(7) == 8);
    CHECK(phi_lower_cubic(8) == 12);
    CHECK(phi_upper_wheel(4) == 1);
    CHECK(phi_upper_wheel(5) == 4);
    CHECK(phi_upper_wheel(6) == 10);
    CHECK(phi_upper_wheel(9) == 56);
    CHECK(phi_lower_dense(10, 36) == Rational(6138, 5));

    CHECK_THROWS_AS(cycle_bound_from_ears(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_bound_min_degree(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(cycle_bound_min_degree(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(phi_lower_cubic(3), std::invalid_argument);
    CHECK_THROWS_AS(phi_upper_wheel(3), std::invalid_argument);
    CHECK_THROWS_AS(phi_lower_dense(10, 30), std::invalid_argument);
    CHECK_THROWS_AS(phi_lower_dense(4, 6), std::invalid_argument);
}

TEST_CASE("the two ear-count cycle bounds coincide") {
    for (long long n = 3; n <= 15; ++n)
        for (long long extra = 0; extra <= 6; ++extra) {
            long long m = n + extra;
            CHECK(cycle_bound_from_ears(whitney_ear_count(n, m)) == cycle_bound_from_nm(n, m));
        }
}

TEST_CASE("minimum-degree bound equals its expanded quadratic") {
    for (long long n = 3; n <= 60; ++n)
        for (long long d = 2; d <= 9; ++d) {
            Rational expanded = Rational((d - 2) * (d - 2) * n * n, 8) +
                                Rational(3 * (d - 2) * n, 4) + 1;
            CHECK(cycle_bound_min_degree(n, d) == expanded);
        }
}

TEST_CASE("degree-weighted cycle sums") {
    auto k4 = cycle_sum_bound(4, {3, 3, 3, 3});
    CHECK(k4.sum == 4);
    CHECK(k4.cubic_chain == Rational(4));
    CHECK(star_bound(4, {3, 3, 3, 3}) == Rational(1));

    auto cubic8 = cycle_sum_bound(8, {3, 3, 3, 3, 3, 3, 3, 3});
    CHECK(cubic8.cubic_chain == Rational(48));
    CHECK(Rational(cubic8.sum) >= cubic8.cubic_chain);

    CHECK(star_bound(5, {4, 3, 3, 3, 3}) == Rational(7, 2));
    CHECK(star_bound(6, {5, 3, 3, 3, 3, 3}) == Rational(17, 2));

    CHECK_THROWS_AS(cycle_sum_bound(4, {3, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_sum_bound(4, {3, 3, 3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_sum_bound(4, {3, 3, 3, 4}), std::invalid_argument);
}

TEST_CASE("cubic-graph sums dominate the chain value") {
    // Degree sequences of 3-regular graphs at increasing sizes.
    for (long long n = 4; n <= 20; n += 2) {
        std::vector<int> degs(size_t(n), 3);
        auto r = cycle_sum_bound(n, degs);
        CHECK(Rational(r.sum) >= r.cubic_chain);
    }
}

TEST_CASE("full report on the 6-wheel") {
    BoundReport r = bound_report(wheel(6), kDefaultCap);
    CHECK(r.n == 6);
    CHECK(r.m == 10);
    CHECK(r.min_degree == 3);
    CHECK(r.two_connected);
    CHECK(r.three_connected);
    REQUIRE(r.ear_count.has_value());
    CHECK(*r.ear_count == 5);
    CHECK(*r.ears_expected == 5);
    CHECK(*r.ok_ear_count);
    REQUIRE(r.cycle_count.has_value());
    CHECK(*r.cycle_count == 21);
    CHECK_FALSE(r.cycles_truncated);
    CHECK(*r.cycle_lb_ears == 15);
    CHECK(*r.cycle_lb_nm == 15);
    CHECK(*r.cycle_lb_min_degree == Rational(10));
    REQUIRE(r.k4_count.has_value());
    CHECK(*r.k4_count == 10);
    CHECK(r.cycles_without_vertex ==
          std::vector<std::uint64_t>{1, 6, 6, 6, 6, 6});
    CHECK(*r.k4_lb_quarter_cycles == Rational(31, 4));
    CHECK(*r.k4_lb_quarter_weighted == Rational(17, 2));
    CHECK(*r.k4_lb_star == Rational(17, 2));
    CHECK(*r.k4_lb_cubic == 5);
    CHECK(*r.wheel_value == 10);
    CHECK(*r.conjecture_margin == 0);
    CHECK_FALSE(r.k4_lb_dense.has_value());
    CHECK(*r.ok_cycle_lb_ears);
    CHECK(*r.ok_cycle_lb_nm);
    CHECK(*r.ok_cycle_lb_min_degree);
    CHECK(*r.ok_k4_lb_cubic);
    CHECK(*r.ok_k4_lb_quarter_cycles);
    CHECK(*r.ok_k4_lb_quarter_weighted);
    CHECK(*r.ok_k4_lb_star);
    CHECK(r.all_applicable_pass());
}

TEST_CASE("report on graphs lower in the connectivity ladder") {
    BoundReport c6 = bound_report(cycle_graph(6), kDefaultCap);
    CHECK(c6.two_connected);
    CHECK_FALSE(c6.three_connected);
    CHECK(*c6.ear_count == 1);
    CHECK(*c6.cycle_count == 1);
    CHECK(*c6.cycle_lb_ears == 1);
    CHECK(*c6.cycle_lb_min_degree == Rational(1));
    CHECK(*c6.ok_cycle_lb_ears);
    CHECK_FALSE(c6.k4_count.has_value());
    CHECK_FALSE(c6.ok_k4_lb_cubic.has_value());
    CHECK(c6.all_applicable_pass());

    BoundReport path = bound_report(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), kDefaultCap);
    CHECK_FALSE(path.two_connected);
    CHECK_FALSE(path.ear_count.has_value());
    CHECK(*path.cycle_count == 0);
    CHECK(path.all_applicable_pass());
}

TEST_CASE("dense bound appears only past the density threshold") {
    BoundReport k8 = bound_report(complete(8), 2'000'000);
    REQUIRE(k8.k4_lb_dense.has_value());
    CHECK(*k8.k4_lb_dense == phi_lower_dense(8, 28));
    BoundReport k5 = bound_report(complete(5), kDefaultCap);
    CHECK_FALSE(k5.k4_lb_dense.has_value());
}

TEST_CASE("truncated counts leave comparisons unsettled rather than wrong") {
    BoundReport r = bound_report(wheel(6), 3);
    CHECK(r.cycles_truncated);
    CHECK(*r.cycle_count == 3);
    CHECK_FALSE(r.ok_cycle_lb_ears.has_value());
    CHECK_FALSE(r.ok_cycle_lb_nm.has_value());
    CHECK_FALSE(r.ok_cycle_lb_min_degree.has_value());
    CHECK(r.k4_truncated);
    CHECK_FALSE(r.ok_k4_lb_cubic.has_value());
    CHECK(r.cycles_without_vertex_truncated);
    CHECK_FALSE(r.ok_k4_lb_quarter_cycles.has_value());
    CHECK_FALSE(r.ok_k4_lb_quarter_weighted.has_value());
    CHECK_FALSE(r.ok_k4_lb_star.has_value());
    CHECK_FALSE(r.conjecture_margin.has_value());
    CHECK(r.all_applicable_pass());
    CHECK_THROWS_AS(bound_report(wheel(6), 0), std::invalid_argument);
}
