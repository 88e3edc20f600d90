/*
* Copyright (C) 2026 satsc contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "fixtures.hpp"

#include "satsc/assignment.hpp"
#include "satsc/errors.hpp"
#include "satsc/latency.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace satsc;
using satsc::test::distance_for_latency;
using satsc::test::toy_scenario;

TEST_SUITE("latency") {

TEST_CASE("direct latency")
{
    CHECK(direct_latency(0.0, 1e9) == 0.0);
    CHECK(direct_latency(5.0e8, 5.0e8) == 1.0);
    CHECK(direct_latency(4.15e6, 5.85e8) == doctest::Approx(0.007094017094017094).epsilon(1e-15));
    CHECK_THROWS_AS(direct_latency(1.0, 0.0), UnservableLinkError);
    CHECK_THROWS_AS(direct_latency(1.0, -3.0), UnservableLinkError);
    CHECK(direct_latency(1e6, 2e8) < direct_latency(1e6, 1e8));
}

TEST_CASE("relay latency")
{
    CHECK(relay_latency(4.15e6, 3e8, 3e8) == 2.0 * direct_latency(4.15e6, 3e8));
    CHECK(relay_latency(4.15e6, 5.85e8, 2.9e8) == doctest::Approx(0.021404361921603301).epsilon(1e-15));
    CHECK(relay_latency(4.15e6, 5.85e8, 2.9e8) >= direct_latency(4.15e6, 5.85e8));
    CHECK(relay_latency(4.15e6, 5.85e8, 2.9e8) >= direct_latency(4.15e6, 2.9e8));
    CHECK_THROWS_AS(relay_latency(1.0, 0.0, 1e6), UnservableLinkError);
    CHECK_THROWS_AS(relay_latency(1.0, 1e6, 0.0), UnservableLinkError);
}

TEST_CASE("mean latency of nothing is zero")
{
    CHECK(mean_latency({}) == 0.0);
    const std::vector<double> v{0.2, 0.4};
    CHECK(mean_latency(v) == doctest::Approx(0.3));
}

TEST_CASE("single direct user at unit snr takes one second")
{
    Scenario s = toy_scenario(1, 1, 1);
    s.sat_plan = SubcarrierPlan(1.0, 2.0, 1, 500e6);
    s.payload = PayloadSpec{5e8, 1.0};
    REQUIRE(s.satellite_snr(s.gus[0], 0) == doctest::Approx(1.0).epsilon(1e-15));

    Assignment a = Assignment::unassigned(s);
    a.stage1[0] = 0;
    CHECK(objective(a, s) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(stage2_objective(a, s) == 0.0);
    CHECK(objective(a, s) == stage1_objective(a, s));
}

TEST_CASE("two satellite links and one relayed user")
{
    // Stage 1: user 1 direct on carrier 1 Hz (0.2 s), gateway on 2 Hz (0.4 s).
    // Stage 2: user 2 relayed on gateway carrier 1 Hz (0.3 s).
    Scenario s = toy_scenario(2, 2, 1);
    s.gus[0].sat_distance_m = distance_for_latency(0.2, 1.0);
    s.gateway.sat_distance_m = distance_for_latency(0.4, 2.0);
    s.gus[1].pathway = Pathway::Relayed;
    s.gus[1].gw_distance_m = distance_for_latency(0.3, 1.0);

    Assignment a = Assignment::unassigned(s);
    REQUIRE(a.stage1.size() == 2);
    REQUIRE(a.stage2.size() == 1);
    a.stage1 = {0, 1};
    a.stage2 = {0};
    CHECK(stage1_objective(a, s) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(stage2_objective(a, s) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(objective(a, s) == doctest::Approx(0.6).epsilon(1e-12));

    // The relayed user's own reported latency covers both legs.
    const auto users = user_outcomes(a, s, QualityTable::builtin());
    CHECK(users[1].latency_s == doctest::Approx(0.7).epsilon(1e-12));

    a.stage1[1].reset();
    CHECK(stage1_objective(a, s) == doctest::Approx((0.2 + 100.0) / 2).epsilon(1e-12));
    s.unassigned_latency_s = 7.0;
    CHECK(stage1_objective(a, s) == doctest::Approx((0.2 + 7.0) / 2).epsilon(1e-12));

    Assignment wrong = Assignment::unassigned(s);
    wrong.stage1.push_back(std::nullopt);
    CHECK_THROWS_AS(objective(wrong, s), std::invalid_argument);
}

TEST_CASE("all direct one carrier each equals the plain mean")
{
    ScenarioConfig cfg;
    cfg.gus = 8;
    cfg.seed = 4;
    const Scenario s = build(cfg).all_direct();
    Assignment a = Assignment::unassigned(s);
    std::mt19937_64 rng(1);
    std::vector<std::size_t> perm(s.sat_plan.count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    double sum = 0.0;
    for (std::size_t u = 0; u < s.gus.size(); ++u) {
        a.stage1[u] = perm[u];
        sum += s.payload.tx_bits() / rate(s.satellite_snr(s.gus[u], perm[u]), s.sat_plan.bandwidth_hz());
    }
    CHECK(objective(a, s) == doctest::Approx(sum / 8.0).epsilon(1e-13));
}

TEST_CASE("more capacity never raises the objective")
{
    ScenarioConfig cfg;
    cfg.gus = 10;
    std::mt19937_64 rng(8);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        cfg.seed = seed;
        Scenario s = build(cfg);
        Assignment a = Assignment::unassigned(s);
        for (std::size_t i = 0; i < a.stage1.size(); ++i)
            a.stage1[i] = i;
        for (std::size_t i = 0; i < a.stage2.size(); ++i)
            a.stage2[i] = i;
        const double before = objective(a, s);
        std::uniform_int_distribution<std::size_t> pick(0, s.gus.size() - 1);
        s.gus[pick(rng)].sat_noise_w *= 0.5;
        s.gus[pick(rng)].gw_noise_w *= 0.5;
        s.gateway.sat_noise_w *= 0.9;
        CHECK(objective(a, s) <= before);
    }
}

TEST_CASE("relabelling identical users leaves the objective alone")
{
    ScenarioConfig cfg;
    cfg.gus = 6;
    cfg.seed = 9;
    Scenario s = build(cfg).all_direct();
    s.gus[4] = s.gus[1];
    s.gus[4].index = 4;
    Assignment a = Assignment::unassigned(s);
    for (std::size_t i = 0; i < a.stage1.size(); ++i)
        a.stage1[i] = i;
    Assignment b = a;
    std::swap(b.stage1[1], b.stage1[4]);
    CHECK(objective(a, s) == doctest::Approx(objective(b, s)).epsilon(1e-15));
}

TEST_CASE("payload validation")
{
    CHECK(PayloadSpec{}.tx_bits() == 512.0 * 512.0 * 3.0 * 8.0 / 16.0);
    CHECK_THROWS_AS((PayloadSpec{0.0, 0.5}).validate(), std::domain_error);
    CHECK_THROWS_AS((PayloadSpec{1.0, 0.0}).validate(), std::domain_error);
    CHECK_THROWS_AS((PayloadSpec{1.0, 1.5}).validate(), std::domain_error);
    CHECK_NOTHROW((PayloadSpec{1.0, 1.0}).validate());
}

} // TEST_SUITE
