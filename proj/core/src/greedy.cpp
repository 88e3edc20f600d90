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
#include "satsc/greedy.hpp"

#include "satsc/dwoa.hpp"
#include "satsc/errors.hpp"

#include <string>
#include <vector>

namespace satsc {

StageMap greedy_assign(const LatencyMatrix& latency)
{
    if (latency.cols < latency.rows) {
        throw InfeasibleError("greedy: " + std::to_string(latency.rows) + " links but only " +
                              std::to_string(latency.cols) + " subcarriers");
    }
    StageMap out(latency.rows);
    std::vector<bool> taken(latency.cols, false);
    for (std::size_t r = 0; r < latency.rows; ++r) {
        std::optional<std::size_t> pick;
        for (std::size_t c = 0; c < latency.cols; ++c) {
            if (!taken[c] && (!pick || latency(r, c) < latency(r, *pick))) {
                pick = c;
            }
        }
        taken[*pick] = true;
        out[r] = pick;
    }
    return out;
}

StageMap greedy_assign(const Scenario& s, Stage stage)
{
    return greedy_assign(stage_latencies(s, stage));
}

OptimizerReport greedy_two_stage(const Scenario& s, const QualityTable& table)
{
    Assignment a = Assignment::unassigned(s);
    a.stage1 = greedy_assign(s, Stage::Satellite);
    if (s.has_relayed()) {
        a.stage2 = greedy_assign(s, Stage::Gateway);
    }
    const double nu = WoaConfig{}.penalty_nu;
    auto report = make_report("gre", s, a, table);
    report.stage1_fitness = fitness(a, s, Stage::Satellite, table, nu);
    if (s.has_relayed()) {
        report.stage2_fitness = fitness(a, s, Stage::Gateway, table, nu);
    }
    return report;
}

double reported_latency_with_penalty(const OptimizerReport& report, double per_violation_s)
{
    return report.mean_user_latency() + per_violation_s * static_cast<double>(report.qos_violations());
}

} // namespace satsc
