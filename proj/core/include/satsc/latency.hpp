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
#ifndef SATSC_LATENCY_HPP
#define SATSC_LATENCY_HPP

#include <span>

namespace satsc {

struct Assignment;
struct Scenario;

/// Size of one semantic payload.
struct PayloadSpec {
    double source_bits = 512.0 * 512.0 * 3.0 * 8.0; // raw image, h * w * channels * bits
    double compression_ratio = 1.0 / 16.0;          // encoded / source size, in (0, 1]

    double tx_bits() const { return source_bits * compression_ratio; }
    void validate() const;

    bool operator==(const PayloadSpec&) const = default;
};

/// tx_bits / rate. Throws UnservableLinkError for a non-positive rate.
double direct_latency(double tx_bits, double rate_bps);

/// Two-hop latency: satellite->gateway followed by gateway->user.
double relay_latency(double tx_bits, double rate_sat_gw_bps, double rate_gw_gu_bps);

/// Arithmetic mean, 0 for an empty range (an empty relay set contributes nothing).
double mean_latency(std::span<const double> latencies);

/// Psi_1: mean latency over the satellite-served slots of stage 1.
double stage1_objective(const Assignment& a, const Scenario& s);
/// Psi_2: mean gateway->user latency over the relayed users.
double stage2_objective(const Assignment& a, const Scenario& s);
/// O = Psi_1 + Psi_2. Unassigned slots contribute Scenario::unassigned_latency_s.
double objective(const Assignment& a, const Scenario& s);

} // namespace satsc

#endif // SATSC_LATENCY_HPP
