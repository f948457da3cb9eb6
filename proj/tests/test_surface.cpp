#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "strebel/errors.hpp"
#include "strebel/surface.hpp"

using namespace strebel;

TEST_CASE("build_surface validates and reports area and moduli") {
    const auto s = fixtures::two_cylinder();
    CHECK(s.area() == doctest::Approx(3.0).epsilon(1e-15));
    const auto m = moduli_vector(s);
    REQUIRE(m.size() == 2);
    CHECK(m[0] == doctest::Approx(1.0));
    CHECK(m[1] == doctest::Approx(2.0));
}

TEST_CASE("flat torus: full-segment self gluing") {
    const auto s = fixtures::torus();
    CHECK(s.area() == doctest::Approx(1.0));
    CHECK(moduli_vector(s) == std::vector<double>{1.0});
    CHECK(s.is_unit_norm());
}

TEST_CASE("segments that do not tile the side are rejected") {
    GluingTable g;
    g.segments = {{0, Side::Bottom, 0.0, 0.9}, {0, Side::Top, 0.0, 0.9}};
    g.pairing = {1, 0};
    g.flipped = {false, false};
    CHECK_THROWS_AS(build_surface({{1.0, 1.0}}, std::move(g)), PartitionError);
}

TEST_CASE("pairing defects are rejected") {
    SUBCASE("fixed point") {
        GluingTable g;
        g.segments = {{0, Side::Bottom, 0.0, 1.0}, {0, Side::Top, 0.0, 1.0}};
        g.pairing = {0, 1};
        g.flipped = {false, false};
        CHECK_THROWS_AS(build_surface({{1.0, 1.0}}, std::move(g)), PairingError);
    }
    SUBCASE("length mismatch") {
        GluingTable g;
        g.segments = {{0, Side::Bottom, 0.0, 1.0},
                      {0, Side::Top, 0.0, 0.4},
                      {0, Side::Top, 0.4, 0.6},
                      {1, Side::Bottom, 0.0, 0.6},
                      {1, Side::Bottom, 0.6, 0.4},
                      {1, Side::Top, 0.0, 1.0}};
        g.pairing = {5, 3, 4, 1, 2, 0};
        g.flipped = std::vector<bool>(6, false);
        CHECK_THROWS_AS(build_surface({{1.0, 1.0}, {1.0, 1.0}}, std::move(g)), PairingError);
    }
    SUBCASE("nonpositive sides") {
        GluingTable g;
        g.segments = {{0, Side::Bottom, 0.0, 1.0}, {0, Side::Top, 0.0, 1.0}};
        g.pairing = {1, 0};
        g.flipped = {false, false};
        CHECK_THROWS_AS(build_surface({{1.0, -2.0}}, std::move(g)), NonPositiveDatum);
    }
}

TEST_CASE("moduli_vector examples") {
    CHECK(moduli_vector(fixtures::torus(2.0, 2.0)) == std::vector<double>{1.0});

    GluingTable g;
    g.segments = {{0, Side::Bottom, 0.0, 1.0}, {0, Side::Top, 0.0, 1.0},
                  {1, Side::Bottom, 0.0, 2.0}, {1, Side::Top, 0.0, 2.0},
                  {2, Side::Bottom, 0.0, 4.0}, {2, Side::Top, 0.0, 4.0}};
    g.pairing = {1, 0, 3, 2, 5, 4};
    g.flipped = std::vector<bool>(6, false);
    const auto s = build_surface({{1.0, 1.0}, {2.0, 1.0}, {4.0, 1.0}}, std::move(g));
    CHECK(moduli_vector(s) == std::vector<double>{1.0, 0.5, 0.25});
}

TEST_CASE("moduli are invariant under cylinder relabeling, up to permutation") {
    GluingTable g;
    g.segments = {{1, Side::Bottom, 0.0, 1.0}, {1, Side::Top, 0.0, 1.0},
                  {0, Side::Bottom, 0.0, 1.0}, {0, Side::Top, 0.0, 1.0}};
    g.pairing = {1, 0, 3, 2};
    g.flipped = std::vector<bool>(4, false);
    const auto swapped = build_surface({{1.0, 2.0}, {1.0, 1.0}}, std::move(g));
    auto m = moduli_vector(swapped);
    std::sort(m.begin(), m.end());
    CHECK(m == std::vector<double>{1.0, 2.0});
}

TEST_CASE("intersection_number is the bilinear pairing extension") {
    auto fam = make_family({"g1", "g2"}, {{0.0, 3.0}, {3.0, 0.0}});
    const auto mu = make_multicurve(fam, {2.0, 0.0});
    const auto nu = make_multicurve(fam, {0.0, 1.0});
    CHECK(intersection_number(mu, nu) == 6.0);

    const auto zero = make_multicurve(fam, {0.0, 0.0});
    CHECK(intersection_number(mu, zero) == 0.0);
}

TEST_CASE("core curves of one foliation have pairwise zero intersections") {
    auto fam = make_family({"g1", "g2", "g3"},
                           {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    const auto h = make_multicurve(fam, {1.0, 2.0, 0.5});
    CHECK(intersection_number(h, h) == 0.0);
}

TEST_CASE("intersection_number is symmetric and bilinear on integer weights") {
    auto fam = make_family({"a", "b", "c"}, {{0, 2, 1}, {2, 0, 4}, {1, 4, 0}});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> w(0, 9);
    for (int it = 0; it < 50; ++it) {
        std::vector<double> u{double(w(rng)), double(w(rng)), double(w(rng))};
        std::vector<double> v{double(w(rng)), double(w(rng)), double(w(rng))};
        std::vector<double> x{double(w(rng)), double(w(rng)), double(w(rng))};
        const auto mu = make_multicurve(fam, u);
        const auto nu = make_multicurve(fam, v);
        CHECK(intersection_number(mu, nu) == intersection_number(nu, mu));
        // i(mu + x, nu) = i(mu, nu) + i(x, nu): exact for integer data.
        std::vector<double> sum(3);
        for (int j = 0; j < 3; ++j) sum[j] = u[j] + x[j];
        CHECK(intersection_number(make_multicurve(fam, sum), nu) ==
              intersection_number(mu, nu) + intersection_number(make_multicurve(fam, x), nu));
        // i(2 mu, nu) = 2 i(mu, nu).
        std::vector<double> twice(3);
        for (int j = 0; j < 3; ++j) twice[j] = 2.0 * u[j];
        CHECK(intersection_number(make_multicurve(fam, twice), nu) ==
              2.0 * intersection_number(mu, nu));
    }
}

TEST_CASE("foliation_relation") {
    auto fam = make_family({"g1", "g2", "g3"},
                           {{0, 0, 2}, {0, 0, 0}, {2, 0, 0}});
    const auto h12 = make_multicurve(fam, {1.0, 2.0, 0.0});
    const auto h12b = make_multicurve(fam, {3.0, 0.5, 0.0});
    CHECK(foliation_relation(h12, h12b) == FoliationRelation::TopEquivAbsCont);

    const auto h1 = make_multicurve(fam, {1.0, 0.0, 0.0});
    const auto h2 = make_multicurve(fam, {0.0, 1.0, 0.0});
    CHECK(foliation_relation(h1, h2) == FoliationRelation::NotTopEquivZeroIntersection);

    const auto h3 = make_multicurve(fam, {0.0, 0.0, 1.0});
    CHECK(foliation_relation(h1, h3) == FoliationRelation::NotTopEquivPositiveIntersection);
    CHECK(intersection_number(h1, h3) == 2.0);
}

TEST_CASE("multicurves over different families are rejected") {
    auto fam1 = make_family({"a"}, {{0.0}});
    auto fam2 = make_family({"b"}, {{0.0}});
    const auto mu = make_multicurve(fam1, {1.0});
    const auto nu = make_multicurve(fam2, {1.0});
    CHECK_THROWS_AS(intersection_number(mu, nu), FamilyMismatch);
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(make_family({"a", "b"}, {{0, 1}, {2, 0}}), FamilyMismatch);  // asymmetric
    CHECK_THROWS_AS(make_family({"a"}, {{1.0}}), FamilyMismatch);                // diagonal
    CHECK_THROWS_AS(make_multicurve(make_family({"a"}, {{0.0}}), {-1.0}), NonPositiveDatum);
}
