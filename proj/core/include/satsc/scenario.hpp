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
#ifndef SATSC_SCENARIO_HPP
#define SATSC_SCENARIO_HPP

#include "satsc/latency.hpp"
#include "satsc/linkmodel.hpp"
#include "satsc/quality.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace satsc {

enum class Pathway { Direct, Relayed };

std::string to_string(Pathway p);

/// A receiver on the ground: a user terminal or the gateway.
struct GroundNode {
    std::size_t index = 0; // 0-based user index; unused for the gateway
    double gain_dbi = 10.4;
    double sat_noise_w = 0.0;       // noise power on the satellite downlink
    double gw_noise_w = 0.0;        // noise power on the gateway->user link (users only)
    double sat_distance_m = 786e3;  // to the satellite
    double gw_distance_m = 10e3;    // to the gateway (users only)
    double psnr_demand_db = 30.0;
    Pathway pathway = Pathway::Direct;

    bool operator==(const GroundNode&) const = default;
};

struct SatelliteSpec {
    double gain_dbi = 33.13;
    double power_w = 10.0;
    double altitude_m = 786e3;

    bool operator==(const SatelliteSpec&) const = default;
};

/// How users are split into direct and gateway-relayed.
struct ClassificationPolicy {
    enum class Kind { Threshold, Fraction };
    Kind kind = Kind::Fraction;
    double fraction = 0.5;

    static ClassificationPolicy threshold() { return {Kind::Threshold, 0.0}; }
    static ClassificationPolicy relay_fraction(double q) { return {Kind::Fraction, q}; }
};

/// Everything a run can be configured with. Defaults reproduce the
/// reference 20-user setup.
struct ScenarioConfig {
    std::size_t gus = 20;
    std::uint64_t seed = 1;
    ChannelKind channel = ChannelKind::Awgn;
    SnrFormulaMode formula_mode = SnrFormulaMode::LiteralPaper;
    ClassificationPolicy policy{};
    bool denoise = true;

    double demand_mean = 30.0;
    double demand_std = 0.2;
    PayloadSpec payload{};

    std::array<double, 2> sat_band{20e9, 30e9};
    std::array<double, 2> gw_band{15e9, 20e9};
    // Per-subcarrier bandwidth. When unset, a plan of K subcarriers gets
    // 500 MHz * 20 / K, i.e. the total spectrum of the 20-subcarrier
    // reference plan is shared out.
    std::optional<double> subcarrier_bw;
    std::optional<double> gw_subcarrier_bw;
    // Subcarrier counts; when unset they track the user count.
    std::optional<std::size_t> sat_subcarriers;
    std::optional<std::size_t> gw_subcarriers;

    std::array<double, 2> sat_noise_dbm{-44.0, 1.0}; // mean, std
    std::array<double, 2> gw_noise_dbm{-33.0, 2.0};  // mean, std

    SatelliteSpec satellite{};
    double gu_gain_dbi = 10.4;
    double gw_gain_dbi = 59.0;
    double gw_power_w = 1.0;
    double gw_distance_m = 10e3;
    double access_window_s = 60.0;
    double unassigned_latency_s = 100.0;

    // Optimizer knobs (consumed by the dwoa module and the CLI).
    double penalty_nu = 100.0;
    std::size_t population = 30;
    std::size_t max_iter = 200;

    // Experiment grid knobs (CLI only).
    std::vector<std::size_t> sweep_gu_counts{10, 20, 30};
    std::vector<double> sweep_fractions{0.25, 0.5, 0.75};
    std::size_t sweep_seeds = 10;
    std::size_t oracle_instances = 100;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Parses the JSON config text. Unknown keys and type mismatches raise
/// ConfigError with the field path, e.g. "sat_band[1]".
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);
/// Canonical JSON echo of every field (used in run manifests).
std::string config_to_json(const ScenarioConfig& cfg);

/// A fully drawn world instance. Immutable after build().
struct Scenario {
    std::vector<GroundNode> gus;
    GroundNode gateway;
    double gateway_power_w = 1.0;
    SatelliteSpec satellite;
    SubcarrierPlan sat_plan;
    SubcarrierPlan gw_plan;
    ChannelKind channel = ChannelKind::Awgn;
    PayloadSpec payload;
    double access_window_s = 60.0;
    double unassigned_latency_s = 100.0;
    SnrFormulaMode formula_mode = SnrFormulaMode::LiteralPaper;
    bool denoise = true;
    std::uint64_t seed = 0;

    LinkParams satellite_link(const GroundNode& node, std::size_t k) const;
    LinkParams gateway_link(const GroundNode& gu, std::size_t j) const;
    double satellite_snr(const GroundNode& node, std::size_t k) const;
    double gateway_snr(const GroundNode& gu, std::size_t j) const;

    std::vector<std::size_t> direct_users() const;
    std::vector<std::size_t> relayed_users() const;
    bool has_relayed() const;

    /// Same world with every user on the direct path (the gateway idles).
    Scenario all_direct() const;

    bool operator==(const Scenario&) const = default;
};

/// Draws a scenario. Consumes one seeded stream in a fixed order:
/// satellite-side noise for users 1..U, gateway-side noise for users 1..U,
/// satellite-side noise of the gateway, then demands for users 1..U.
/// Classification per cfg.policy is applied before returning.
Scenario build(const ScenarioConfig& cfg, const QualityTable& table = QualityTable::builtin());

/// Best SNR a user can get straight from the satellite (max over subcarriers).
double best_direct_snr(const Scenario& s, const GroundNode& gu);

/// Relabels every user Direct or Relayed.
///
/// Threshold: relayed iff even the best satellite subcarrier cannot meet the
/// user's PSNR demand. Fraction(q): the ceil(q * U) users with the lowest best
/// direct SNR are relayed, ties broken by index.
Scenario classify(Scenario s, const ClassificationPolicy& policy, const QualityTable& table);

struct SweepGrid {
    std::vector<std::size_t> gu_counts;
    std::vector<double> fractions;
    std::vector<std::uint64_t> seeds;
};

struct SweepPoint {
    std::size_t gu_count = 0;
    double fraction = 0.0;
    std::uint64_t seed = 0;
    Scenario scenario;
};

/// Cartesian product gu_counts x fractions x seeds, in that nesting order.
/// Subcarrier counts follow each point's user count.
std::vector<SweepPoint> sweep(const ScenarioConfig& base, const SweepGrid& grid,
                              const QualityTable& table = QualityTable::builtin());

} // namespace satsc

#endif // SATSC_SCENARIO_HPP
