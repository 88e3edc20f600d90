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

#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace satsc {

namespace {

double to_db_or_floor(double linear)
{
    return linear > 0.0 ? snr_to_db(linear) : -std::numeric_limits<double>::infinity();
}

const GroundNode& slot_node(const Scenario& s, const Slot& slot)
{
    return slot.is_gateway ? s.gateway : s.gus.at(slot.gu);
}

bool outside_window(double latency, double window)
{
    return !(latency >= 0.0 && latency <= window);
}

// Slot position of each user inside its stage (direct users in stage 1,
// relayed users in stage 2) and of the gateway in stage 1.
struct SlotIndex {
    std::vector<std::size_t> position;
    std::optional<std::size_t> gateway;
};

SlotIndex index_slots(const Scenario& s)
{
    SlotIndex idx;
    idx.position.assign(s.gus.size(), 0);
    const auto st1 = stage_slots(s, Stage::Satellite);
    for (std::size_t m = 0; m < st1.size(); ++m) {
        if (st1[m].is_gateway) {
            idx.gateway = m;
        } else {
            idx.position[st1[m].gu] = m;
        }
    }
    const auto st2 = stage_slots(s, Stage::Gateway);
    for (std::size_t u = 0; u < st2.size(); ++u) {
        idx.position[st2[u].gu] = u;
    }
    return idx;
}

void check_shape(const Assignment& a, const Scenario& s)
{
    if (a.stage1.size() != stage_slots(s, Stage::Satellite).size() ||
        a.stage2.size() != stage_slots(s, Stage::Gateway).size()) {
        throw std::invalid_argument("assignment shape does not match scenario slots");
    }
}

} // namespace

std::vector<Slot> stage_slots(const Scenario& s, Stage stage)
{
    std::vector<Slot> out;
    const auto wanted = stage == Stage::Satellite ? Pathway::Direct : Pathway::Relayed;
    for (const auto& g : s.gus) {
        if (g.pathway == wanted) {
            out.push_back({false, g.index});
        }
    }
    if (stage == Stage::Satellite && s.has_relayed()) {
        out.push_back({true, 0});
    }
    return out;
}

std::size_t stage_subcarriers(const Scenario& s, Stage stage)
{
    return stage == Stage::Satellite ? s.sat_plan.count() : s.gw_plan.count();
}

double slot_snr(const Scenario& s, Stage stage, const Slot& slot, std::size_t k)
{
    if (stage == Stage::Satellite) {
        return s.satellite_snr(slot_node(s, slot), k);
    }
    return s.gateway_snr(s.gus.at(slot.gu), k);
}

double slot_latency(const Scenario& s, Stage stage, const Slot& slot, std::size_t k)
{
    const double bw = stage == Stage::Satellite ? s.sat_plan.bandwidth_hz() : s.gw_plan.bandwidth_hz();
    const double r = rate(slot_snr(s, stage, slot, k), bw);
    if (!(r > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return direct_latency(s.payload.tx_bits(), r);
}

LatencyMatrix stage_latencies(const Scenario& s, Stage stage)
{
    const auto slots = stage_slots(s, stage);
    LatencyMatrix m;
    m.rows = slots.size();
    m.cols = stage_subcarriers(s, stage);
    m.values.resize(m.rows * m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            m.values[r * m.cols + c] = slot_latency(s, stage, slots[r], c);
        }
    }
    return m;
}

Assignment Assignment::unassigned(const Scenario& s)
{
    Assignment a;
    a.stage1.assign(stage_slots(s, Stage::Satellite).size(), std::nullopt);
    a.stage2.assign(stage_slots(s, Stage::Gateway).size(), std::nullopt);
    return a;
}

std::vector<StructuralError> validate_structure(const Assignment& a, const Scenario& s)
{
    std::vector<StructuralError> errors;
    for (auto stage : {Stage::Satellite, Stage::Gateway}) {
        const auto& map = a.stage(stage);
        const std::size_t expected = stage_slots(s, stage).size();
        const std::size_t k = stage_subcarriers(s, stage);
        const int st = static_cast<int>(stage);
        if (map.size() != expected) {
            errors.push_back({StructuralError::Kind::ShapeMismatch, stage, {}, 0,
                              "stage " + std::to_string(st) + ": " + std::to_string(map.size()) +
                                  " entries for " + std::to_string(expected) + " slots"});
        }
        std::map<std::size_t, std::vector<std::size_t>> users;
        for (std::size_t slot = 0; slot < map.size(); ++slot) {
            if (!map[slot]) {
                continue;
            }
            if (*map[slot] >= k) {
                errors.push_back({StructuralError::Kind::OutOfRange, stage, {slot}, *map[slot],
                                  "stage " + std::to_string(st) + ": node " + std::to_string(slot + 1) +
                                      " uses subcarrier " + std::to_string(*map[slot] + 1) + " of " +
                                      std::to_string(k)});
                continue;
            }
            users[*map[slot]].push_back(slot);
        }
        for (const auto& [sub, slots] : users) {
            if (slots.size() < 2) {
                continue;
            }
            std::string names;
            for (auto n : slots) {
                names += (names.empty() ? "" : ", ") + std::to_string(n + 1);
            }
            errors.push_back({StructuralError::Kind::Duplicate, stage, slots, sub,
                              "stage " + std::to_string(st) + ": subcarrier " + std::to_string(sub + 1) +
                                  " shared by nodes " + names});
        }
    }
    return errors;
}

ViolationReport violations(const Assignment& a, const Scenario& s, const QualityTable& table, ViolationScope scope)
{
    check_shape(a, s);
    ViolationReport report;
    const bool want1 = scope != ViolationScope::Stage2;
    const bool want2 = scope != ViolationScope::Stage1;

    for (auto stage : {Stage::Satellite, Stage::Gateway}) {
        if ((stage == Stage::Satellite && !want1) || (stage == Stage::Gateway && !want2)) {
            continue;
        }
        const auto slots = stage_slots(s, stage);
        const auto& map = a.stage(stage);
        for (std::size_t m = 0; m < slots.size(); ++m) {
            if (!map[m]) {
                ++report.unassigned;
            } else if (outside_window(slot_latency(s, stage, slots[m], *map[m]), s.access_window_s)) {
                ++report.window_violations;
            }
        }
    }

    const auto idx = index_slots(s);
    std::optional<double> gateway_db;
    if (idx.gateway && a.stage1[*idx.gateway]) {
        gateway_db = to_db_or_floor(s.satellite_snr(s.gateway, *a.stage1[*idx.gateway]));
    }
    for (const auto& g : s.gus) {
        const std::size_t pos = idx.position[g.index];
        if (g.pathway == Pathway::Direct) {
            if (!want1) {
                continue;
            }
            const auto& k = a.stage1[pos];
            if (!k || table.psnr_at(to_db_or_floor(s.satellite_snr(g, *k)), ReceiverModel::GroundUser, s.channel) <
                          g.psnr_demand_db) {
                ++report.qos_violations;
            }
            continue;
        }
        if (scope == ViolationScope::Stage1) {
            if (!gateway_db ||
                table.psnr_at(*gateway_db, gateway_receiver(s.denoise), s.channel) < g.psnr_demand_db) {
                ++report.qos_violations;
            }
            continue;
        }
        const auto& j = a.stage2[pos];
        if (!gateway_db || !j ||
            end_to_end_psnr(table, *gateway_db, to_db_or_floor(s.gateway_snr(g, *j)), s.channel, s.denoise) <
                g.psnr_demand_db) {
            ++report.qos_violations;
        }
    }
    return report;
}

std::vector<UserOutcome> user_outcomes(const Assignment& a, const Scenario& s, const QualityTable& table)
{
    check_shape(a, s);
    const auto idx = index_slots(s);
    const auto surrogate = [&](double t) { return std::isfinite(t) ? t : s.unassigned_latency_s; };

    std::optional<std::size_t> gateway_k;
    double gateway_snr = 0.0;
    double gateway_latency = s.unassigned_latency_s;
    if (idx.gateway && a.stage1[*idx.gateway]) {
        gateway_k = a.stage1[*idx.gateway];
        gateway_snr = s.satellite_snr(s.gateway, *gateway_k);
        gateway_latency = surrogate(slot_latency(s, Stage::Satellite, {true, 0}, *gateway_k));
    }

    std::vector<UserOutcome> out;
    out.reserve(s.gus.size());
    for (const auto& g : s.gus) {
        UserOutcome o;
        o.gu = g.index;
        o.pathway = g.pathway;
        o.demand_db = g.psnr_demand_db;
        const std::size_t pos = idx.position[g.index];
        if (g.pathway == Pathway::Direct) {
            o.sat_subcarrier = a.stage1[pos];
            if (o.sat_subcarrier) {
                o.sat_snr = s.satellite_snr(g, *o.sat_subcarrier);
                const double db = to_db_or_floor(o.sat_snr);
                o.psnr_db = table.psnr_at(db, ReceiverModel::GroundUser, s.channel);
                o.ms_ssim = table.mssim_at(db, ReceiverModel::GroundUser, s.channel);
                o.latency_s = surrogate(slot_latency(s, Stage::Satellite, {false, g.index}, *o.sat_subcarrier));
                o.violated = o.psnr_db < g.psnr_demand_db;
            } else {
                o.latency_s = s.unassigned_latency_s;
                o.violated = true;
            }
        } else {
            o.sat_subcarrier = gateway_k;
            o.sat_snr = gateway_snr;
            o.gw_subcarrier = a.stage2[pos];
            double second_leg = s.unassigned_latency_s;
            if (o.gw_subcarrier) {
                o.gw_snr = s.gateway_snr(g, *o.gw_subcarrier);
                second_leg = surrogate(slot_latency(s, Stage::Gateway, {false, g.index}, *o.gw_subcarrier));
            }
            o.latency_s = gateway_latency + second_leg;
            if (gateway_k && o.gw_subcarrier) {
                const double sat_db = to_db_or_floor(o.sat_snr);
                const double gw_db = to_db_or_floor(o.gw_snr);
                o.psnr_db = end_to_end_psnr(table, sat_db, gw_db, s.channel, s.denoise);
                o.ms_ssim = std::min(table.mssim_at(sat_db, gateway_receiver(s.denoise), s.channel),
                                     table.mssim_at(gw_db, ReceiverModel::GroundUser, s.channel));
                o.violated = o.psnr_db < g.psnr_demand_db;
            } else {
                o.violated = true;
            }
        }
        out.push_back(o);
    }
    return out;
}

void write_assignment(std::ostream& out, const Assignment& a)
{
    out << "stage,node_index,subcarrier_index\n";
    for (auto stage : {Stage::Satellite, Stage::Gateway}) {
        const auto& map = a.stage(stage);
        for (std::size_t m = 0; m < map.size(); ++m) {
            if (map[m]) {
                out << static_cast<int>(stage) << ',' << (m + 1) << ',' << (*map[m] + 1) << '\n';
            }
        }
    }
}

Assignment read_assignment(std::istream& in, const Scenario& s)
{
    Assignment a = Assignment::unassigned(s);
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!header) {
            if (line != "stage,node_index,subcarrier_index") {
                throw ConfigError("assignment line 1: bad header '" + line + "'");
            }
            header = true;
            continue;
        }
        std::istringstream ss(line);
        long long stage = 0, node = 0, sub = 0;
        char c1 = 0, c2 = 0;
        if (!(ss >> stage >> c1 >> node >> c2 >> sub) || c1 != ',' || c2 != ',' || !(ss >> std::ws).eof()) {
            throw ConfigError("assignment line " + std::to_string(line_no) + ": expected stage,node,subcarrier");
        }
        if ((stage != 1 && stage != 2) || node < 1 || sub < 1) {
            throw ConfigError("assignment line " + std::to_string(line_no) + ": indices out of range");
        }
        auto& map = a.stage(static_cast<Stage>(stage));
        if (static_cast<std::size_t>(node) > map.size()) {
            throw ConfigError("assignment line " + std::to_string(line_no) + ": node " + std::to_string(node) +
                              " exceeds " + std::to_string(map.size()) + " slots");
        }
        map[static_cast<std::size_t>(node - 1)] = static_cast<std::size_t>(sub - 1);
    }
    return a;
}

} // namespace satsc
