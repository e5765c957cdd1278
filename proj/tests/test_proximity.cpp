#include <doctest.h>

#include <cmath>

#include "srnbench/proximity.hpp"
#include "support.hpp"

using namespace srnbench;
using testsupport::line_trajectory;

namespace {
const MetricsConfig kCfg;
}

TEST_CASE("center distance series") {
    SUBCASE("stationary 3-4-5") {
        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {0.0, 0.0}, 5);
        const Trajectory b = line_trajectory("b", {3.0, 4.0}, {0.0, 0.0}, 5);
        for (double d : center_distance_series(a, b)) CHECK(d == doctest::Approx(5.0));
    }
    SUBCASE("coincident agents") {
        const Trajectory a = line_trajectory("a", {1.0, 1.0}, {1.0, 0.0}, 5);
        const Trajectory b = line_trajectory("b", {1.0, 1.0}, {1.0, 0.0}, 5);
        for (double d : center_distance_series(a, b)) CHECK(d == 0.0);
    }
    SUBCASE("grid mismatch rejected") {
        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {1.0, 0.0}, 5);
        const Trajectory b = line_trajectory("b", {0.0, 0.0}, {1.0, 0.0}, 6);
        CHECK_THROWS_AS(center_distance_series(a, b), ValidationError);
    }
}

TEST_CASE("clearing distance") {
    SUBCASE("parallel agents 5 m apart: one encounter, cd 5.0") {
        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {1.0, 0.0}, 20);
        const Trajectory b = line_trajectory("b", {0.0, 5.0}, {1.0, 0.0}, 20);
        const ClearingDistanceResult r = clearing_distance(a, b, kCfg);
        REQUIRE(r.encounters.size() == 1);
        CHECK(r.encounters[0].start_index == 0);
        CHECK(r.encounters[0].end_index == 19);
        CHECK(*r.cd_avg == doctest::Approx(5.0));
        CHECK(*r.cd_max == doctest::Approx(5.0));
    }
    SUBCASE("out of sensing range: absent, not zero") {
        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {0.0, 0.0}, 10);
        const Trajectory b = line_trajectory("b", {50.0, 0.0}, {0.0, 0.0}, 10);
        const ClearingDistanceResult r = clearing_distance(a, b, kCfg);
        CHECK(r.encounters.empty());
        CHECK_FALSE(r.cd_avg.has_value());
        CHECK_FALSE(r.cd_max.has_value());
    }
    SUBCASE("two separate encounters") {
        // approach, retreat past sensing range, approach again
        std::vector<AgentSample> samples;
        const double dt = 0.1;
        int k = 0;
        auto add = [&](double x) {
            samples.push_back({dt * k++, {x, 0.0}, {0.0, 0.0}});
        };
        for (double x : {8.0, 4.0, 8.0, 12.0, 11.0, 9.0, 6.0, 9.0}) add(x);
        const Trajectory a("a", 0.5, samples, dt);
        const Trajectory b = line_trajectory("b", {0.0, 0.0}, {0.0, 0.0}, samples.size(), dt);
        const ClearingDistanceResult r = clearing_distance(a, b, kCfg);
        REQUIRE(r.encounters.size() == 2);
        CHECK(r.encounters[0].min_distance == doctest::Approx(4.0));
        CHECK(r.encounters[1].min_distance == doctest::Approx(6.0));
        CHECK(*r.cd_avg == doctest::Approx(5.0));
        CHECK(*r.cd_max == doctest::Approx(6.0));
        CHECK(r.encounters[0].min_distance_time == doctest::Approx(0.1));
    }
    SUBCASE("far samples do not disturb clearing distances") {
        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {0.0, 0.0}, 30);
        const Trajectory b = line_trajectory("b", {5.0, 0.0}, {1.0, 0.0}, 30);
        const Trajectory b_short = line_trajectory("b", {5.0, 0.0}, {1.0, 0.0}, 10);
        const Trajectory a_short = line_trajectory("a", {0.0, 0.0}, {0.0, 0.0}, 10);
        const ClearingDistanceResult full = clearing_distance(a, b, kCfg);
        const ClearingDistanceResult cut = clearing_distance(a_short, b_short, kCfg);
        CHECK(*full.cd_avg == doctest::Approx(*cut.cd_avg));
        CHECK(*full.cd_max == doctest::Approx(*cut.cd_max));
    }
}

TEST_CASE("space violation rate") {
    SUBCASE("never violating") {
        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {1.0, 0.0}, 10);
        const Trajectory b = line_trajectory("b", {0.0, 1.2}, {1.0, 0.0}, 10);
        CHECK(space_violation_rate(a, b, kCfg) == 0.0);  // 1.2 is not strictly inside
    }
    SUBCASE("always coincident") {
        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {1.0, 0.0}, 10);
        const Trajectory b = line_trajectory("b", {0.0, 0.0}, {1.0, 0.0}, 10);
        CHECK(space_violation_rate(a, b, kCfg) == 1.0);
    }
    SUBCASE("half the time") {
        std::vector<AgentSample> samples;
        for (int k = 0; k < 10; ++k)
            samples.push_back({0.1 * k, {k < 5 ? 0.5 : 3.0, 0.0}, {0.0, 0.0}});
        const Trajectory a("a", 0.5, samples, 0.1);
        const Trajectory b = line_trajectory("b", {0.0, 0.0}, {0.0, 0.0}, 10);
        CHECK(space_violation_rate(a, b, kCfg) == doctest::Approx(0.5));
    }
    SUBCASE("shrinking the personal space weakly shrinks the rate") {
        testsupport::Rng rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            const Trajectory a =
                line_trajectory("a", rng.vec(-2.0, 2.0), rng.vec(-1.0, 1.0), 40);
            const Trajectory b =
                line_trajectory("b", rng.vec(-2.0, 2.0), rng.vec(-1.0, 1.0), 40);
            MetricsConfig wide = kCfg, narrow = kCfg;
            wide.personal_space_radius = 2.0;
            narrow.personal_space_radius = 0.7;
            CHECK(space_violation_rate(a, b, narrow) <= space_violation_rate(a, b, wide));
        }
    }
}

TEST_CASE("collision index") {
    SUBCASE("touching centers give exactly 1") {
        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {1.0, 0.0}, 10);
        const Trajectory b = line_trajectory("b", {0.0, 0.0}, {1.0, 0.0}, 10);
        CHECK(collision_index(a, b, kCfg) == 1.0);
    }
    SUBCASE("reference values fixing sigma = 0.45") {
        // exp(-d^2 / (2 * 0.45^2)) at the reported clearing distances
        CHECK(std::exp(-(1.18 * 1.18) / (2.0 * 0.45 * 0.45)) ==
              doctest::Approx(0.032).epsilon(0.02));
        CHECK(std::exp(-(1.54 * 1.54) / (2.0 * 0.45 * 0.45)) < 0.005);

        const Trajectory a = line_trajectory("a", {0.0, 0.0}, {0.0, 0.0}, 10);
        const Trajectory b = line_trajectory("b", {1.18, 0.0}, {0.0, 0.0}, 10);
        CHECK(collision_index(a, b, kCfg) == doctest::Approx(0.0321486).epsilon(1e-4));
    }
    SUBCASE("monotonically decreasing in the minimum distance") {
        double prev = 1.1;
        for (double d : {0.0, 0.4, 0.9, 1.3, 2.0, 4.0}) {
            const Trajectory a = line_trajectory("a", {0.0, 0.0}, {0.0, 0.0}, 5);
            const Trajectory b = line_trajectory("b", {d, 0.0}, {0.0, 0.0}, 5);
            const double ci = collision_index(a, b, kCfg);
            CHECK(ci < prev);
            prev = ci;
        }
    }
}

TEST_CASE("pairwise proximity metrics are symmetric in the agents") {
    testsupport::Rng rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        const Trajectory a = line_trajectory("a", rng.vec(-8.0, 8.0), rng.vec(-1.5, 1.5), 25);
        const Trajectory b = line_trajectory("b", rng.vec(-8.0, 8.0), rng.vec(-1.5, 1.5), 25);
        const ClearingDistanceResult r1 = clearing_distance(a, b, kCfg);
        const ClearingDistanceResult r2 = clearing_distance(b, a, kCfg);
        CHECK(r1.cd_avg == r2.cd_avg);
        CHECK(r1.cd_max == r2.cd_max);
        CHECK(space_violation_rate(a, b, kCfg) == space_violation_rate(b, a, kCfg));
        CHECK(collision_index(a, b, kCfg) == collision_index(b, a, kCfg));
    }
}
