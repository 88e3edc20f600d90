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
#include "satsc/latency.hpp"

#include "satsc/assignment.hpp"
#include "satsc/errors.hpp"
#include "satsc/scenario.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace satsc {

void PayloadSpec::validate() const
{
    if (!(source_bits > 0.0)) {
        throw std::domain_error("payload source_bits must be positive");
    }
    if (!(compression_ratio > 0.0 && compression_ratio <= 1.0)) {
        throw std::domain_error("payload compression_ratio must lie in (0, 1]");
    }
}

double direct_latency(double tx_bits, double rate_bps)
{
    if (!(rate_bps > 0.0)) {
        throw UnservableLinkError("link rate must be positive, got " + std::to_string(rate_bps));
    }
    return tx_bits / rate_bps;
}

double relay_latency(double tx_bits, double rate_sat_gw_bps, double rate_gw_gu_bps)
{
    return direct_latency(tx_bits, rate_sat_gw_bps) + direct_latency(tx_bits, rate_gw_gu_bps);
}

double mean_latency(std::span<const double> latencies)
{
    if (latencies.empty()) {
        return 0.0;
    }
    return std::accumulate(latencies.begin(), latencies.end(), 0.0) / static_cast<double>(latencies.size());
}

namespace {

double stage_mean(const Assignment& a, const Scenario& s, Stage stage)
{
    const auto slots = stage_slots(s, stage);
    const auto& map = a.stage(stage);
    if (map.size() != slots.size()) {
        throw std::invalid_argument("assignment shape does not match scenario slots");
    }
    std::vector<double> t(slots.size(), s.unassigned_latency_s);
    for (std::size_t m = 0; m < slots.size(); ++m) {
        if (map[m]) {
            const double v = slot_latency(s, stage, slots[m], *map[m]);
            if (std::isfinite(v)) {
                t[m] = v;
            }
        }
    }
    return mean_latency(t);
}

} // namespace

double stage1_objective(const Assignment& a, const Scenario& s)
{
    return stage_mean(a, s, Stage::Satellite);
}

double stage2_objective(const Assignment& a, const Scenario& s)
{
    return stage_mean(a, s, Stage::Gateway);
}

double objective(const Assignment& a, const Scenario& s)
{
    return stage1_objective(a, s) + stage2_objective(a, s);
}

} // namespace satsc
