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

#include "satsc/dwoa.hpp"
#include "satsc/greedy.hpp"
#include "satsc/latency.hpp"
#include "satsc/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace satsc;

namespace {

const QualityTable& table()
{
    return QualityTable::builtin();
}

Scenario small(std::size_t gus, std::uint64_t seed, std::size_t k = 0)
{
    ScenarioConfig cfg;
    cfg.gus = gus;
    cfg.seed = seed;
    if (k > 0)
        cfg.sat_subcarriers = k;
    return build(cfg).all_direct();
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumeration counts")
{
    CHECK(expected_enumeration_count(1, 1, false) == 1);
    CHECK(expected_enumeration_count(3, 3, false) == 6);
    CHECK(expected_enumeration_count(4, 6, false) == 360);
    CHECK(expected_enumeration_count(2, 2, true) == 7);
    CHECK(expected_enumeration_count(0, 3, false) == 1);

    const Scenario one = satsc::test::toy_scenario(1, 1, 1);
    const auto r1 = brute_force(one, Stage::Satellite, table(), 100.0, Assignment::unassigned(one));
    CHECK(r1.enumerated_count == 1);
    CHECK(r1.best == StageMap{0});

    const Scenario three = small(3, 1);
    const auto r3 = brute_force(three, Stage::Satellite, table(), 100.0, Assignment::unassigned(three));
    CHECK(r3.enumerated_count == 6);

    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t k = m; k <= 5; ++k) {
            const Scenario s = small(m, 2, k);
            const Assignment ctx = Assignment::unassigned(s);
            CHECK(brute_force(s, Stage::Satellite, table(), 100.0, ctx).enumerated_count ==
                  expected_enumeration_count(m, k, false));
            CHECK(brute_force(s, Stage::Satellite, table(), 100.0, ctx, true).enumerated_count ==
                  expected_enumeration_count(m, k, true));
        }
    }
}

TEST_CASE("partial maps never win over a complete one")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Scenario s = small(4, seed);
        const Assignment ctx = Assignment::unassigned(s);
        const auto full = brute_force(s, Stage::Satellite, table(), 100.0, ctx);
        const auto partial = brute_force(s, Stage::Satellite, table(), 100.0, ctx, true);
        CHECK(partial.best_fitness == full.best_fitness);
        CHECK(partial.best == full.best);
    }
}

TEST_CASE("size guard")
{
    const Scenario s = small(7, 1);
    CHECK_THROWS_AS(brute_force(s, Stage::Satellite, table(), 100.0, Assignment::unassigned(s)), OracleRefused);
    const Scenario wide = small(3, 1, 7);
    CHECK_THROWS_WITH_AS(brute_force(wide, Stage::Satellite, table(), 100.0, Assignment::unassigned(wide)),
                         doctest::Contains("7"), OracleRefused);
}

TEST_CASE("exact solver on crafted matrices")
{
    const LatencyMatrix diag{3, 3, {1, 9, 9, 9, 1, 9, 9, 9, 1}};
    CHECK(solve_assignment(diag) == std::vector<std::size_t>{0, 1, 2});
    const LatencyMatrix anti{3, 3, {9, 9, 1, 9, 1, 9, 1, 9, 9}};
    CHECK(solve_assignment(anti) == std::vector<std::size_t>{2, 1, 0});
    // Greedy takes (0,0) and pays 9 on row 1; the optimum pays 2 + 2.
    const LatencyMatrix trap{2, 2, {1, 2, 2, 9}};
    CHECK(solve_assignment(trap) == std::vector<std::size_t>{1, 0});
    const LatencyMatrix rect{2, 4, {5, 4, 3, 1, 5, 4, 3, 1}};
    const auto r = solve_assignment(rect);
    REQUIRE(r);
    CHECK((*r)[0] != (*r)[1]);
    CHECK(rect(0, (*r)[0]) + rect(1, (*r)[1]) == 4.0);
    const LatencyMatrix blocked{2, 2, {1, INFINITY, 2, INFINITY}};
    CHECK_FALSE(solve_assignment(blocked).has_value());
}

TEST_CASE("exact and brute force agree on small instances")
{
    std::size_t feasible = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const std::size_t m = 1 + seed % 5;
        const std::size_t k = m + (seed / 5) % (6 - m);
        ScenarioConfig cfg;
        cfg.gus = m;
        cfg.seed = seed;
        cfg.sat_subcarriers = k;
        cfg.demand_mean = 32.0 + 0.5 * static_cast<double>(seed % 4);
        cfg.demand_std = 1.0;
        const Scenario s = build(cfg).all_direct();
        const Assignment ctx = Assignment::unassigned(s);
        const auto bf = brute_force(s, Stage::Satellite, table(), 100.0, ctx);
        const auto ex = exact_linear_assignment(s, Stage::Satellite, table(), ctx);
        if (ex) {
            ++feasible;
            CHECK(std::abs(ex->objective - bf.best_fitness) <= 1e-12 * bf.best_fitness);
            Assignment a = ctx;
            a.stage1 = ex->assignment;
            CHECK(violations(a, s, table(), ViolationScope::Stage1).total() == 0);
        } else {
            CHECK(bf.best_fitness >= 100.0);
        }
    }
    // The demand spread must leave both outcomes represented.
    CHECK(feasible > 20);
    CHECK(feasible < 200);
}

TEST_CASE("exact agrees on relayed second stages")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        ScenarioConfig cfg;
        cfg.gus = 8;
        cfg.seed = seed;
        cfg.gw_subcarriers = 5;
        const Scenario s = build(cfg);
        Assignment ctx = Assignment::unassigned(s);
        ctx.stage1 = greedy_assign(s, Stage::Satellite);
        if (stage_slots(s, Stage::Gateway).size() > kOracleMaxSlots)
            continue;
        const auto bf = brute_force(s, Stage::Gateway, table(), 100.0, ctx);
        const auto ex = exact_linear_assignment(s, Stage::Gateway, table(), ctx);
        REQUIRE(ex);
        CHECK(std::abs(ex->objective - bf.best_fitness) <= 1e-12 * bf.best_fitness);
    }
}

TEST_CASE("brute force lower-bounds the other solvers")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Scenario s = small(5, seed);
        const Assignment ctx = Assignment::unassigned(s);
        const auto bf = brute_force(s, Stage::Satellite, table(), 100.0, ctx);
        WoaConfig wc;
        wc.rng_seed = seed;
        wc.max_it = 30;
        wc.population_n = 8;
        const StageProblem p(s, Stage::Satellite, table(), 100.0, ctx);
        CHECK(optimize_stage(p, wc).fitness >= bf.best_fitness);
        Assignment g = ctx;
        g.stage1 = greedy_assign(s, Stage::Satellite);
        CHECK(fitness(g, s, Stage::Satellite, table(), 100.0) >= bf.best_fitness);
    }
}

TEST_CASE("lexicographic tie-break")
{
    const Scenario s = satsc::test::toy_scenario(2, 3, 1);
    // Identical users: {0, 1} and {1, 0} cost exactly the same.
    const auto r = brute_force(s, Stage::Satellite, table(), 100.0, Assignment::unassigned(s));
    CHECK(r.best == StageMap{0, 1});
}

TEST_CASE("exact solver scales to twenty nodes")
{
    ScenarioConfig cfg;
    cfg.seed = 3;
    const Scenario s = build(cfg).all_direct();
    const Assignment ctx = Assignment::unassigned(s);
    const auto ex = exact_linear_assignment(s, Stage::Satellite, table(), ctx);
    REQUIRE(ex);
    WoaConfig wc;
    wc.rng_seed = 3;
    const auto r = optimize_stage(StageProblem(s, Stage::Satellite, table(), 100.0, ctx), wc);
    CHECK(r.fitness >= ex->objective * (1.0 - 1e-12));
    CHECK(r.fitness <= ex->objective * 1.05);
}

} // TEST_SUITE
