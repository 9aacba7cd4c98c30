#include <doctest.h>

#include "dehn/cable.hpp"

using namespace dehn;

TEST_SUITE_BEGIN("cable");

TEST_CASE("solid torus filling of the outer boundary") {
    CableSpace cs(1, 2);
    auto r = fill_plus(cs, 1);
    CHECK(r.input_class == PeripheralClass(3, 1));
    CHECK(r.meridian_out == PeripheralClass(3, 4));

    r = fill_plus(cs, 0);
    CHECK(r.input_class == PeripheralClass(1, 0));
    CHECK(r.meridian_out == PeripheralClass(1, 0));

    r = fill_plus(CableSpace(2, 3), 2);
    CHECK(r.input_class == PeripheralClass(13, 2));
    CHECK(r.meridian_out == PeripheralClass(13, 18));

    CHECK_THROWS_AS(CableSpace(1, 1), std::invalid_argument);
}

TEST_CASE("fill identities over a grid") {
    for (int m = -20; m <= 20; ++m)
        for (int n = 2; n <= 10; ++n) {
            CableSpace cs(m, n);
            for (int k = -20; k <= 20; ++k) {
                auto r = fill_plus(cs, k);
                CHECK(distance(r.input_class, cs.fiber_plus()) == 1);
                CHECK(distance(r.meridian_out, cs.fiber_minus()) == Int(n));
            }
        }
}

TEST_CASE("distance scaling by n^2") {
    CableSpace cs(1, 2);
    auto ds = distance_scaling(cs, Slope(1, 0), Slope(3, 1));  // k = 0 and 1
    CHECK(ds.inner == 1);
    CHECK(ds.outer == 4);

    ds = distance_scaling(cs, Slope(3, 1), Slope(7, 3));  // k = 1 and 3
    CHECK(ds.inner == 2);
    CHECK(ds.outer == 8);

    ds = distance_scaling(cs, Slope(3, 1), Slope(3, 1));
    CHECK(ds.inner == 0);
    CHECK(ds.outer == 0);

    CHECK_THROWS_AS(distance_scaling(cs, Slope(5, 1), Slope(3, 1)), std::invalid_argument);
}

TEST_CASE("distance scaling over a grid") {
    for (int m = -10; m <= 10; ++m)
        for (int n = 2; n <= 6; ++n) {
            CableSpace cs(m, n);
            for (int k1 = -6; k1 <= 6; ++k1)
                for (int k2 = -6; k2 <= 6; ++k2) {
                    Slope r1(fill_plus(cs, k1).input_class);
                    Slope r2(fill_plus(cs, k2).input_class);
                    auto ds = distance_scaling(cs, r1, r2);
                    CHECK(ds.inner == abs_int(Int(k1 - k2)));
                    CHECK(ds.outer == Int(n) * n * ds.inner);
                }
        }
}

TEST_CASE("cable on the D2(2,3,5) piece") {
    auto rep = d235_cable_report(5, 1, 2);
    CHECK(rep.dist_r1_r2 == 5);
    CHECK(rep.dist_r1p_fiber == 11);
    CHECK(rep.dist_r2p_fiber == 1);
    CHECK(rep.big_seifert);
    CHECK(rep.r2_finite);

    CHECK(d235_cable_report(0, 1, 2).dist_r1_r2 == 0);
    CHECK_THROWS_AS(d235_cable_report(-1, 1, 1), std::invalid_argument);

    for (int k = -100; k <= 100; ++k) {
        auto r = d235_cable_report(k, 3, 4);
        CHECK(r.dist_r1_r2 == abs_int(Int(k)));
        CHECK(r.dist_r1p_fiber == abs_int(Int(12 * k + 1)));
    }
}

TEST_CASE("cable of type (1,2) on the twisted I-bundle") {
    CHECK(twisted_ik_cable_report(1).dist_r1_r2 == 3);
    auto rep = twisted_ik_cable_report(0);
    CHECK(rep.dist_r1_r2 == 1);
    CHECK_FALSE(rep.finite_condition);
    CHECK(twisted_ik_cable_report(-3).dist_r1_r2 == 5);
    for (int k = -100; k <= 100; ++k) {
        auto r = twisted_ik_cable_report(k);
        CHECK(r.dist_r1_r2 == abs_int(Int(2 * k + 1)));
        CHECK(r.dist_r1_fiber == 2);
    }
}

TEST_CASE("the closing Diophantine enumeration") {
    auto feasible = lemma24_feasible();
    REQUIRE(feasible.size() == 1);
    CHECK(*feasible.begin() == std::tuple<Int, Int, Int>{3, 1, 1});
    for (const auto& [n, d, dphi] : feasible) CHECK(d == 1);
}

TEST_SUITE_END();
