#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abelwalls/ampleness.hpp"
#include "oracles.hpp"

using namespace abelwalls;

TEST_CASE("phi closed formulas") {
    CHECK(phi_formula(Surface{1}, 2) == 0);
    CHECK(phi_formula(Surface{1}, 1) == -1);   // floor(-2/2)
    CHECK(phi_formula(Surface{2}, 1) == -1);   // floor(-1/2), toward -infinity
    CHECK(phi_formula(Surface{3}, 1) == 0);
    CHECK(phi_formula(Surface{4}, 1) == 0);
    CHECK(phi_formula(Surface{3}, 4) == 16);
    CHECK_THROWS_AS(phi_formula(Surface{1}, 0), precondition_error);
}

TEST_CASE("torsion moduli IT0 threshold") {
    for (long d = 1; d <= 12; ++d) {
        Surface S{d};
        CHECK_FALSE(it0_torsion_moduli(S, d));
        CHECK(it0_torsion_moduli(S, d + 1));
        for (long kprime = 0; kprime <= 10; ++kprime)
            CHECK(it0_torsion_moduli(S, 1 + d + kprime));
        // equivalence with moduli nonemptiness of (chi, 1, 1)
        for (long chi = 0; chi <= 2 * d + 5; ++chi)
            CHECK(it0_torsion_moduli(S, chi) == !gieseker_nonempty(S, Character{chi, 1, 1}));
        for (long chi = -8; chi < 0; ++chi)
            CHECK_FALSE(it0_torsion_moduli(S, chi));
    }
}

TEST_CASE("phi(L) by the Bogomolov route") {
    CHECK(phi1_pipeline(Surface{1}) == -1);
    CHECK(phi1_pipeline(Surface{2}) == -1);
    CHECK(phi1_pipeline(Surface{5}) == 1);
    for (long d = 1; d <= 100; ++d)
        CHECK(phi1_pipeline(Surface{d}) == phi_formula(Surface{d}, 1));
}

TEST_CASE("upper bound witness") {
    auto [b1, w1] = phi_upper_witness(Surface{1}, 3);
    CHECK(b1 == 2);
    CHECK(w1 == -3);
    auto [b2, w2] = phi_upper_witness(Surface{2}, 2);
    CHECK(b2 == 2);
    CHECK(w2 == -2);
    auto [b3, w3] = phi_upper_witness(Surface{1}, 2);
    CHECK(b3 == 0);
    CHECK(w3 == -1);
    CHECK_THROWS_AS(phi_upper_witness(Surface{1}, 1), precondition_error);
}

TEST_CASE("principally polarized obstruction chain") {
    PpavObstruction o2 = ppav_obstruction(Surface{1}, 2);
    CHECK(o2.quotient == Character{0, 1, 1});
    CHECK(o2.transform == Character{1, -1, 0});
    CHECK(o2.bound == 0);
    CHECK(ppav_obstruction(Surface{1}, 5).bound == 6);
    CHECK(ppav_obstruction(Surface{1}, 3).bound == 2);
    for (long n = 2; n <= 10; ++n)
        CHECK(ppav_obstruction(Surface{1}, n).bound == phi_formula(Surface{1}, n));
    CHECK_THROWS_AS(ppav_obstruction(Surface{2}, 3), precondition_error);
    CHECK_THROWS_AS(ppav_obstruction(Surface{1}, 1), precondition_error);
}

TEST_CASE("the z length bound only admits zero") {
    CHECK(z_length_bound(Surface{1}, 2) == 0);  // 3(1+z) <= 4
    CHECK(z_length_bound(Surface{5}, 8) == 0);
    for (long d = 1; d <= 50; ++d)
        for (long n = 2; n <= 50; ++n) CHECK(z_length_bound(Surface{d}, n) == 0);
    CHECK_THROWS_AS(z_length_bound(Surface{1}, 1), precondition_error);
}

TEST_CASE("phi pipeline reports") {
    SUBCASE("base case d = 1, n = 2") {
        PhiReport rep = phi_pipeline(Surface{1}, 2);
        CHECK(rep.phi_formula == 0);
        CHECK(rep.phi_pipeline == 0);
        CHECK(rep.walls_used.empty());
        CHECK(rep.ok());
    }
    SUBCASE("d = 1, n = 4 uses the q0 = 3 wall") {
        PhiReport rep = phi_pipeline(Surface{1}, 4);
        CHECK(rep.phi_formula == 4);
        CHECK(rep.phi_pipeline == 4);
        REQUIRE(rep.walls_used.size() == 1);
        CHECK(rep.walls_used[0].q0 == Rat(3));
        CHECK(rep.walls_used[0].destabilizers ==
              std::vector<Character>{Character{1, 3, 9}});
        CHECK(rep.ok());
        REQUIRE(rep.witness_euler.has_value());
        CHECK(*rep.witness_euler == -5);  // d(3 - 2n)
    }
    SUBCASE("d = 3, n = 2") {
        PhiReport rep = phi_pipeline(Surface{3}, 2);
        CHECK(rep.phi_pipeline == 4);
        CHECK(rep.ok());
    }
    SUBCASE("n = 1 delegates") {
        PhiReport rep = phi_pipeline(Surface{7}, 1);
        CHECK(rep.phi_pipeline == 2);  // floor(4/2)
        CHECK(rep.ok());
    }
}

TEST_CASE("comparison bounds") {
    BoundsRecord b = bounds(Surface{1}, 2);
    CHECK(b.trivial_upper == 3);
    CHECK(b.terakawa == make_rat(1, 2));
    CHECK(b.reider_lower == 0);  // ceil(2 sqrt 2) = 3
    CHECK(bounds(Surface{2}, 1).reider_lower == -1);  // exact square 2dn^2 = 4
    CHECK(bounds(Surface{1}, 1).trivial_upper == 0);
    CHECK_THROWS_AS(bounds(Surface{1}, 0), precondition_error);

    // reider bound against its defining inequality
    for (long d = 1; d <= 10; ++d)
        for (long n = 1; n <= 8; ++n) {
            Int m = bounds(Surface{d}, n).reider_lower + 3;
            CHECK(m * m >= 2 * d * n * n);
            CHECK((m - 1) * (m - 1) < 2 * d * n * n);
        }
}

TEST_CASE("pipeline equals formula over the grid") {
    for (long d = 1; d <= 10; ++d) {
        Surface S{d};
        for (long n = 1; n <= 8; ++n) {
            PhiReport rep = phi_pipeline(S, n);
            CHECK(rep.ok());
            CHECK(rep.phi_pipeline == phi_formula(S, n));
        }
    }
}

TEST_CASE("bound sandwich and linearity") {
    for (long d = 1; d <= 10; ++d) {
        Surface S{d};
        for (long n = 2; n <= 8; ++n) {
            Int phi = phi_formula(S, n);
            BoundsRecord b = bounds(S, n);
            CHECK(b.reider_lower <= phi);
            CHECK(Rat(phi) <= b.terakawa);
            CHECK(b.terakawa <= Rat(b.trivial_upper));
            CHECK(phi_formula(S, n + 1) - phi == 2 * d);
        }
    }
}
