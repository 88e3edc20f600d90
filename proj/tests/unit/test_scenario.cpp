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
#include "satsc/assignment.hpp"
#include "satsc/errors.hpp"
#include "satsc/scenario.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace satsc;

namespace {

std::size_t relayed_count(const Scenario& s)
{
    return s.relayed_users().size();
}

} // namespace

TEST_SUITE("scenario") {

TEST_CASE("minimal config takes the reference defaults")
{
    const ScenarioConfig cfg = parse_config(R"({"gus": 20, "seed": 7})");
    const Scenario s = build(cfg);
    REQUIRE(s.gus.size() == 20);
    CHECK(s.seed == 7);
    CHECK(s.satellite.gain_dbi == 33.13);
    CHECK(s.satellite.power_w == 10.0);
    CHECK(s.satellite.altitude_m == 786e3);
    CHECK(s.gateway.gain_dbi == 59.0);
    CHECK(s.gateway_power_w == 1.0);
    CHECK(s.access_window_s == 60.0);
    CHECK(s.formula_mode == SnrFormulaMode::LiteralPaper);
    CHECK(s.channel == ChannelKind::Awgn);
    CHECK(s.payload.compression_ratio == 1.0 / 16.0);
    CHECK(s.sat_plan.band_low_hz() == 20e9);
    CHECK(s.sat_plan.band_high_hz() == 30e9);
    CHECK(s.sat_plan.count() == 20);
    CHECK(s.sat_plan.bandwidth_hz() == 500e6);
    CHECK(s.gw_plan.band_low_hz() == 15e9);
    CHECK(s.gw_plan.band_high_hz() == 20e9);
    CHECK(s.gw_plan.bandwidth_hz() == 500e6);
    for (const auto& g : s.gus) {
        CHECK(g.gain_dbi == 10.4);
        CHECK(g.sat_distance_m == 786e3);
        CHECK(g.gw_distance_m == 10e3);
        CHECK(g.sat_noise_w > 0.0);
        CHECK(g.gw_noise_w > 0.0);
        CHECK(std::isfinite(g.psnr_demand_db));
    }
    CHECK(relayed_count(s) == 10);
}

TEST_CASE("zero fraction keeps everyone direct")
{
    const Scenario s = build(parse_config(R"({"gus": 20, "assisted_fraction": 0})"));
    CHECK(relayed_count(s) == 0);
    CHECK_FALSE(s.has_relayed());
    for (const auto& slot : stage_slots(s, Stage::Satellite))
        CHECK_FALSE(slot.is_gateway);
}

TEST_CASE("zero demand spread")
{
    const Scenario s = build(parse_config(R"({"gus": 20, "demand_std": 0})"));
    for (const auto& g : s.gus)
        CHECK(g.psnr_demand_db == 30.0);
}

TEST_CASE("fraction policy")
{
    ScenarioConfig cfg;
    cfg.policy = ClassificationPolicy::relay_fraction(0.5);
    CHECK(relayed_count(build(cfg)) == 10);
    cfg.policy = ClassificationPolicy::relay_fraction(0.75);
    CHECK(relayed_count(build(cfg)) == 15);

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> users(1, 40);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        cfg.gus = users(rng);
        cfg.seed = i;
        const double q = i % 10 == 0 ? 0.1 * (i % 11) : frac(rng);
        cfg.policy = ClassificationPolicy::relay_fraction(q);
        const Scenario s = build(cfg);
        const auto expect = static_cast<std::size_t>(std::ceil(q * static_cast<double>(cfg.gus) - 1e-9));
        CHECK(relayed_count(s) == expect);

        // Every relayed user has a best direct SNR no better than any direct one.
        double worst_direct = INFINITY;
        double best_relayed = 0.0;
        for (const auto& g : s.gus) {
            const double b = best_direct_snr(s, g);
            if (g.pathway == Pathway::Direct)
                worst_direct = std::min(worst_direct, b);
            else
                best_relayed = std::max(best_relayed, b);
        }
        CHECK(best_relayed <= worst_direct);
    }
    CHECK_THROWS_AS(classify(build(ScenarioConfig{}), ClassificationPolicy::relay_fraction(1.5), QualityTable::builtin()),
                    std::domain_error);
    CHECK_THROWS_AS(parse_config(R"({"assisted_fraction": -0.1})"), ConfigError);
}

TEST_CASE("fraction ties go to the lower index")
{
    ScenarioConfig cfg;
    cfg.gus = 6;
    cfg.sat_noise_dbm = {-44.0, 0.0};
    cfg.policy = ClassificationPolicy::relay_fraction(0.5);
    const Scenario s = build(cfg);
    CHECK(s.relayed_users() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("threshold policy")
{
    ScenarioConfig cfg;
    cfg.policy = ClassificationPolicy::threshold();
    cfg.demand_mean = 0.0;
    cfg.demand_std = 0.0;
    CHECK(relayed_count(build(cfg)) == 0);
    cfg.demand_mean = 1000.0;
    CHECK(relayed_count(build(cfg)) == 20);

    cfg.demand_mean = 31.0;
    cfg.demand_std = 0.5;
    cfg.sat_noise_dbm = {-35.0, 3.0};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cfg.seed = seed;
        const Scenario s = build(cfg);
        for (const auto& g : s.gus) {
            const double best = QualityTable::builtin().psnr_at(snr_to_db(best_direct_snr(s, g)),
                                                               ReceiverModel::GroundUser, s.channel);
            CHECK((g.pathway == Pathway::Relayed) == (best < g.psnr_demand_db));
        }
    }
}

TEST_CASE("sweep grid")
{
    ScenarioConfig cfg;
    CHECK(sweep(cfg, SweepGrid{{20}, {0.5}, {1}}).size() == 1);

    std::vector<std::uint64_t> seeds(20);
    std::iota(seeds.begin(), seeds.end(), 1);
    const auto points = sweep(cfg, SweepGrid{{10, 20, 30}, {0.25, 0.5, 0.75}, seeds});
    REQUIRE(points.size() == 180);
    for (const auto& p : points) {
        CHECK(p.scenario.gus.size() == p.gu_count);
        CHECK(p.scenario.sat_plan.count() == p.gu_count);
        CHECK(p.scenario.gw_plan.count() == p.gu_count);
        CHECK(p.scenario.seed == p.seed);
        CHECK(relayed_count(p.scenario) ==
              static_cast<std::size_t>(std::ceil(p.fraction * static_cast<double>(p.gu_count) - 1e-9)));
    }
    // Nested order: counts, then fractions, then seeds.
    CHECK(points[0].gu_count == 10);
    CHECK(points[0].fraction == 0.25);
    CHECK(points[1].seed == 2);
    CHECK(points[20].fraction == 0.5);
    CHECK(points[60].gu_count == 20);

    // Explicit subcarrier counts in the base config do not leak into the sweep.
    cfg.sat_subcarriers = 64;
    CHECK(sweep(cfg, SweepGrid{{20}, {0.5}, {1}})[0].scenario.sat_plan.count() == 20);
}

TEST_CASE("bandwidth is shared out when unset")
{
    ScenarioConfig cfg;
    cfg.gus = 40;
    CHECK(build(cfg).sat_plan.bandwidth_hz() == 250e6);
    cfg.gus = 10;
    CHECK(build(cfg).sat_plan.bandwidth_hz() == 1e9);
    cfg.subcarrier_bw = 123e6;
    CHECK(build(cfg).sat_plan.bandwidth_hz() == 123e6);
}

TEST_CASE("same seed, same scenario")
{
    ScenarioConfig cfg;
    cfg.seed = 1234;
    CHECK(build(cfg) == build(cfg));
    ScenarioConfig other = cfg;
    other.seed = 1235;
    CHECK_FALSE(build(cfg) == build(other));
}

TEST_CASE("draw order")
{
    ScenarioConfig cfg;
    cfg.gus = 5;
    cfg.seed = 99;
    const Scenario s = build(cfg);

    std::mt19937_64 rng(99);
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<double> sat, gw, demand;
    for (int i = 0; i < 5; ++i)
        sat.push_back(-44.0 + 1.0 * z(rng));
    for (int i = 0; i < 5; ++i)
        gw.push_back(-33.0 + 2.0 * z(rng));
    const double gateway = -44.0 + 1.0 * z(rng);
    for (int i = 0; i < 5; ++i)
        demand.push_back(30.0 + 0.2 * z(rng));

    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(s.gus[i].sat_noise_w == dbm_to_watts(sat[i]));
        CHECK(s.gus[i].gw_noise_w == dbm_to_watts(gw[i]));
        CHECK(s.gus[i].psnr_demand_db == demand[i]);
    }
    CHECK(s.gateway.sat_noise_w == dbm_to_watts(gateway));
}

TEST_CASE("noise draws stay within six sigma")
{
    ScenarioConfig cfg;
    cfg.gus = 50;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        cfg.seed = seed;
        const Scenario s = build(cfg);
        for (const auto& g : s.gus) {
            const double sat_dbm = 10.0 * std::log10(g.sat_noise_w) + 30.0;
            const double gw_dbm = 10.0 * std::log10(g.gw_noise_w) + 30.0;
            CHECK(std::abs(sat_dbm + 44.0) <= 6.0);
            CHECK(std::abs(gw_dbm + 33.0) <= 12.0);
        }
    }
    for (double dbm : {-44.0, -33.0, -42.0, 0.0, 17.3}) {
        const double expect = std::pow(10.0, (dbm - 30.0) / 10.0);
        CHECK(std::abs(dbm_to_watts(dbm) - expect) <= 1e-12 * expect);
    }
}

TEST_CASE("config parsing")
{
    CHECK_THROWS_WITH_AS(parse_config(R"({"gus": 20, "colour": 1})"), doctest::Contains("colour"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"sat_band": [20e9, "x"]})"), doctest::Contains("sat_band[1]"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"gus": -3})"), doctest::Contains("gus"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"gus": 0})"), doctest::Contains("gus"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"channel": "fog"})"), doctest::Contains("fog"), ConfigError);
    CHECK_THROWS_AS(parse_config("{"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"formula_mode": "loose"})"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);

    const ScenarioConfig cfg = parse_config(R"({
        "gus": 12, "seed": 5, "channel": "rayleigh", "formula_mode": "standard",
        "assisted_policy": "threshold", "demand_mean": 29.5, "demand_std": 0.1,
        "payload_bits": 1e6, "compression_ratio": 0.5, "sat_band": [21e9, 29e9],
        "gw_band": [16e9, 19e9], "subcarrier_bw": 2e8, "penalty_nu": 50,
        "population": 12, "max_iter": 40
    })");
    CHECK(cfg.gus == 12);
    CHECK(cfg.seed == 5);
    CHECK(cfg.channel == ChannelKind::Rayleigh);
    CHECK(cfg.formula_mode == SnrFormulaMode::StandardBudget);
    CHECK(cfg.policy.kind == ClassificationPolicy::Kind::Threshold);
    CHECK(cfg.payload.source_bits == 1e6);
    CHECK(cfg.payload.compression_ratio == 0.5);
    CHECK(cfg.sat_band[1] == 29e9);
    CHECK(cfg.subcarrier_bw == 2e8);
    CHECK(cfg.penalty_nu == 50.0);
    CHECK(cfg.population == 12);
    CHECK(cfg.max_iter == 40);

    const std::string echo = config_to_json(cfg);
    CHECK(config_to_json(parse_config(echo)) == echo);
    CHECK(build(parse_config(echo)) == build(cfg));
}

} // TEST_SUITE
