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
#ifndef SATSC_TESTS_FIXTURES_HPP
#define SATSC_TESTS_FIXTURES_HPP

#include "satsc/linkmodel.hpp"
#include "satsc/scenario.hpp"

#include <cmath>
#include <numbers>

namespace satsc::test {

// Unit-gain world: 0 dBi everywhere, 1 W transmitters, 1 W noise, 1 bit
// payload, 1 Hz subcarriers at 1, 2, ... Hz. In literal mode the SNR is then
// (c / (4 pi d f))^2, so a link latency can be dialled in through distance.
inline Scenario toy_scenario(std::size_t gus, std::size_t sat_k, std::size_t gw_k)
{
    Scenario s;
    s.satellite = SatelliteSpec{0.0, 1.0, 1.0};
    s.gateway_power_w = 1.0;
    s.sat_plan = SubcarrierPlan(1.0, static_cast<double>(std::max<std::size_t>(sat_k, 2)), sat_k, 1.0);
    s.gw_plan = SubcarrierPlan(1.0, static_cast<double>(std::max<std::size_t>(gw_k, 2)), gw_k, 1.0);
    s.payload = PayloadSpec{1.0, 1.0};
    s.formula_mode = SnrFormulaMode::LiteralPaper;

    GroundNode base;
    base.gain_dbi = 0.0;
    base.sat_noise_w = 1.0;
    base.gw_noise_w = 1.0;
    base.sat_distance_m = kSpeedOfLight / (4.0 * std::numbers::pi);
    base.gw_distance_m = base.sat_distance_m;
    base.psnr_demand_db = 0.0;
    s.gateway = base;
    for (std::size_t u = 0; u < gus; ++u) {
        GroundNode g = base;
        g.index = u;
        s.gus.push_back(g);
    }
    return s;
}

// Distance at which a 1 bit payload over a 1 Hz link at carrier f takes
// `latency` seconds in the toy world.
inline double distance_for_latency(double latency, double f)
{
    const double snr = std::exp2(1.0 / latency) - 1.0;
    return kSpeedOfLight / (4.0 * std::numbers::pi * f * std::sqrt(snr));
}

} // namespace satsc::test

#endif // SATSC_TESTS_FIXTURES_HPP
