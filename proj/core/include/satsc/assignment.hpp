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
#ifndef SATSC_ASSIGNMENT_HPP
#define SATSC_ASSIGNMENT_HPP

#include "satsc/quality.hpp"
#include "satsc/scenario.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace satsc {

/// Stage 1 serves the satellite downlinks (direct users and the gateway),
/// stage 2 the gateway->user links of relayed users.
enum class Stage { Satellite = 1, Gateway = 2 };

/// One decision slot of a stage: a direct user, the gateway, or a relayed user.
struct Slot {
    bool is_gateway = false;
    std::size_t gu = 0; // user index; ignored for the gateway

    bool operator==(const Slot&) const = default;
};

/// Slot order of a stage. Stage 1: direct users by index, then the gateway
/// when any user is relayed. Stage 2: relayed users by index.
std::vector<Slot> stage_slots(const Scenario& s, Stage stage);
std::size_t stage_subcarriers(const Scenario& s, Stage stage);

double slot_snr(const Scenario& s, Stage stage, const Slot& slot, std::size_t k);
/// Latency of one slot on subcarrier k; +inf when the link has zero rate.
double slot_latency(const Scenario& s, Stage stage, const Slot& slot, std::size_t k);

/// Latency matrix (slots x subcarriers) of a stage, row-major.
struct LatencyMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};
LatencyMatrix stage_latencies(const Scenario& s, Stage stage);

using StageMap = std::vector<std::optional<std::size_t>>; // slot -> 0-based subcarrier

/// Subcarrier decisions for both stages; slot order follows stage_slots().
struct Assignment {
    StageMap stage1;
    StageMap stage2;

    /// Empty maps sized for the scenario's slots.
    static Assignment unassigned(const Scenario& s);

    StageMap& stage(Stage st) { return st == Stage::Satellite ? stage1 : stage2; }
    const StageMap& stage(Stage st) const { return st == Stage::Satellite ? stage1 : stage2; }

    bool operator==(const Assignment&) const = default;
};

struct StructuralError {
    enum class Kind { ShapeMismatch, OutOfRange, Duplicate };
    Kind kind;
    Stage stage;
    std::vector<std::size_t> slots; // offending slots
    std::size_t subcarrier = 0;
    std::string message;
};

/// Every duplicate subcarrier and out-of-range index; empty means valid.
std::vector<StructuralError> validate_structure(const Assignment& a, const Scenario& s);

struct ViolationReport {
    std::size_t qos_violations = 0;
    std::size_t unassigned = 0;
    std::size_t window_violations = 0;

    std::size_t total() const { return qos_violations + unassigned + window_violations; }
    bool operator==(const ViolationReport&) const = default;
};

/// Which links a violation count covers.
enum class ViolationScope {
    Full,      // whole assignment; each user's QoS judged end to end
    Stage1,    // satellite links; relayed users judged on the satellite leg only
    Stage2,    // gateway links; relayed users judged end to end
};

/// Constraint check. An unassigned link counts once as unassigned and its
/// users also miss their QoS. Requires validate_structure() to pass.
ViolationReport violations(const Assignment& a, const Scenario& s, const QualityTable& table,
                           ViolationScope scope = ViolationScope::Full);

/// Per-user outcome of an assignment.
struct UserOutcome {
    std::size_t gu = 0;
    Pathway pathway = Pathway::Direct;
    std::optional<std::size_t> sat_subcarrier; // direct users: own link; relayed: gateway's link
    std::optional<std::size_t> gw_subcarrier;  // relayed users only
    double sat_snr = 0.0;                      // linear, 0 if unassigned
    double gw_snr = 0.0;                       // linear, 0 if unassigned or direct
    double psnr_db = 0.0;                      // expected PSNR actually achieved
    double ms_ssim = 0.0;
    double demand_db = 0.0;
    double latency_s = 0.0;                    // full path latency
    bool violated = false;

    bool operator==(const UserOutcome&) const = default;
};

std::vector<UserOutcome> user_outcomes(const Assignment& a, const Scenario& s, const QualityTable& table);

/// Plain-text form: header `stage,node_index,subcarrier_index`, then one line
/// per assigned slot with 1-based slot and subcarrier indices.
void write_assignment(std::ostream& out, const Assignment& a);
/// Reads write_assignment() output; slot counts come from the scenario.
Assignment read_assignment(std::istream& in, const Scenario& s);

} // namespace satsc

#endif // SATSC_ASSIGNMENT_HPP
