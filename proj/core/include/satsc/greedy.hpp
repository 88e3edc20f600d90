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
#ifndef SATSC_GREEDY_HPP
#define SATSC_GREEDY_HPP

#include "satsc/assignment.hpp"
#include "satsc/report.hpp"

namespace satsc {

/// Myopic baseline: slots in index order each grab the unclaimed subcarrier
/// with the lowest latency for themselves (ties: lower subcarrier). QoS is
/// not considered. Throws InfeasibleError when there are fewer subcarriers
/// than slots.
StageMap greedy_assign(const LatencyMatrix& latency);
StageMap greedy_assign(const Scenario& s, Stage stage);

/// Greedy on both stages. Stage fitnesses use the default WOA penalty.
OptimizerReport greedy_two_stage(const Scenario& s, const QualityTable& table);

/// Comparison metric: mean user latency plus a flat penalty per QoS violation.
double reported_latency_with_penalty(const OptimizerReport& report, double per_violation_s = 0.5);

} // namespace satsc

#endif // SATSC_GREEDY_HPP
