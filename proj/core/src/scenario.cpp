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
#include "satsc/scenario.hpp"

#include "satsc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace satsc {

namespace {

using nlohmann::json;

constexpr double kReferenceBandwidthHz = 500e6;
constexpr double kReferenceSubcarriers = 20.0;

double default_bandwidth(std::size_t count)
{
    return kReferenceBandwidthHz * kReferenceSubcarriers / static_cast<double>(count);
}

// Reads typed fields out of a JSON object and reports errors by field path.
class FieldReader {
public:
    explicit FieldReader(const json& obj) : obj_(obj) {}

    template <typename F>
    void on(const std::string& key, F&& handler)
    {
        seen_.push_back(key);
        auto it = obj_.find(key);
        if (it != obj_.end()) {
            handler(*it, key);
        }
    }

    void reject_unknown() const
    {
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end()) {
                throw ConfigError("unknown config key '" + it.key() + "'");
            }
        }
    }

private:
    const json& obj_;
    std::vector<std::string> seen_;
};

double as_number(const json& v, const std::string& path)
{
    if (!v.is_number()) {
        throw ConfigError("config field '" + path + "' must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError("config field '" + path + "' must be finite");
    }
    return x;
}

std::uint64_t as_unsigned(const json& v, const std::string& path)
{
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)) {
        throw ConfigError("config field '" + path + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string as_string(const json& v, const std::string& path)
{
    if (!v.is_string()) {
        throw ConfigError("config field '" + path + "' must be a string");
    }
    return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& path)
{
    if (!v.is_boolean()) {
        throw ConfigError("config field '" + path + "' must be true or false");
    }
    return v.get<bool>();
}

std::array<double, 2> as_pair(const json& v, const std::string& path)
{
    if (!v.is_array() || v.size() != 2) {
        throw ConfigError("config field '" + path + "' must be a two-element array");
    }
    return {as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]")};
}

template <typename T, typename Conv>
std::vector<T> as_list(const json& v, const std::string& path, Conv conv)
{
    if (!v.is_array()) {
        throw ConfigError("config field '" + path + "' must be an array");
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(static_cast<T>(conv(v[i], path + "[" + std::to_string(i) + "]")));
    }
    return out;
}

void require(bool ok, const std::string& field, const std::string& what)
{
    if (!ok) {
        throw ConfigError("config field '" + field + "' " + what);
    }
}

} // namespace

std::string to_string(Pathway p)
{
    return p == Pathway::Direct ? "direct" : "relayed";
}

void ScenarioConfig::validate() const
{
    require(gus >= 1, "gus", "must be at least 1");
    require(demand_std >= 0.0, "demand_std", "must be non-negative");
    require(payload.source_bits > 0.0, "payload_bits", "must be positive");
    require(payload.compression_ratio > 0.0 && payload.compression_ratio <= 1.0, "compression_ratio",
            "must lie in (0, 1]");
    require(sat_band[0] > 0.0 && sat_band[0] < sat_band[1], "sat_band", "must satisfy 0 < low < high");
    require(gw_band[0] > 0.0 && gw_band[0] < gw_band[1], "gw_band", "must satisfy 0 < low < high");
    require(!subcarrier_bw || *subcarrier_bw > 0.0, "subcarrier_bw", "must be positive");
    require(!gw_subcarrier_bw || *gw_subcarrier_bw > 0.0, "gw_subcarrier_bw", "must be positive");
    require(!sat_subcarriers || *sat_subcarriers >= 1, "sat_subcarriers", "must be at least 1");
    require(!gw_subcarriers || *gw_subcarriers >= 1, "gw_subcarriers", "must be at least 1");
    require(sat_noise_dbm[1] >= 0.0, "sat_noise_dbm[1]", "(std) must be non-negative");
    require(gw_noise_dbm[1] >= 0.0, "gw_noise_dbm[1]", "(std) must be non-negative");
    require(policy.fraction >= 0.0 && policy.fraction <= 1.0, "assisted_fraction", "must lie in [0, 1]");
    require(satellite.power_w > 0.0, "satellite.power_w", "must be positive");
    require(satellite.altitude_m > 0.0, "satellite.altitude_m", "must be positive");
    require(gw_power_w > 0.0, "gw_power_w", "must be positive");
    require(gw_distance_m > 0.0, "gw_distance_m", "must be positive");
    require(access_window_s > 0.0, "access_window_s", "must be positive");
    require(unassigned_latency_s > 0.0, "unassigned_latency_s", "must be positive");
    require(penalty_nu > 0.0, "penalty_nu", "must be positive");
    require(population >= 2, "population", "must be at least 2");
    require(max_iter >= 1, "max_iter", "must be at least 1");
    require(!sweep_gu_counts.empty(), "sweep_gu_counts", "must not be empty");
    require(!sweep_fractions.empty(), "sweep_fractions", "must not be empty");
    for (std::size_t i = 0; i < sweep_gu_counts.size(); ++i) {
        require(sweep_gu_counts[i] >= 1, "sweep_gu_counts[" + std::to_string(i) + "]", "must be at least 1");
    }
    for (std::size_t i = 0; i < sweep_fractions.size(); ++i) {
        require(sweep_fractions[i] >= 0.0 && sweep_fractions[i] <= 1.0,
                "sweep_fractions[" + std::to_string(i) + "]", "must lie in [0, 1]");
    }
    require(sweep_seeds >= 1, "sweep_seeds", "must be at least 1");
    require(oracle_instances >= 1, "oracle_instances", "must be at least 1");
}

ScenarioConfig parse_config(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }

    ScenarioConfig cfg;
    FieldReader r(doc);
    r.on("gus", [&](const json& v, const std::string& p) { cfg.gus = as_unsigned(v, p); });
    r.on("seed", [&](const json& v, const std::string& p) { cfg.seed = as_unsigned(v, p); });
    r.on("channel", [&](const json& v, const std::string& p) { cfg.channel = parse_channel(as_string(v, p)); });
    r.on("formula_mode", [&](const json& v, const std::string& p) {
        try {
            cfg.formula_mode = parse_formula_mode(as_string(v, p));
        } catch (const std::invalid_argument& e) {
            throw ConfigError("config field '" + p + "': " + e.what());
        }
    });
    r.on("assisted_policy", [&](const json& v, const std::string& p) {
        const auto s = as_string(v, p);
        if (s == "threshold") {
            cfg.policy.kind = ClassificationPolicy::Kind::Threshold;
        } else if (s == "fraction") {
            cfg.policy.kind = ClassificationPolicy::Kind::Fraction;
        } else {
            throw ConfigError("config field '" + p + "' must be threshold|fraction");
        }
    });
    r.on("assisted_fraction", [&](const json& v, const std::string& p) { cfg.policy.fraction = as_number(v, p); });
    r.on("denoise", [&](const json& v, const std::string& p) { cfg.denoise = as_bool(v, p); });
    r.on("demand_mean", [&](const json& v, const std::string& p) { cfg.demand_mean = as_number(v, p); });
    r.on("demand_std", [&](const json& v, const std::string& p) { cfg.demand_std = as_number(v, p); });
    r.on("payload_bits", [&](const json& v, const std::string& p) { cfg.payload.source_bits = as_number(v, p); });
    r.on("compression_ratio",
         [&](const json& v, const std::string& p) { cfg.payload.compression_ratio = as_number(v, p); });
    r.on("sat_band", [&](const json& v, const std::string& p) { cfg.sat_band = as_pair(v, p); });
    r.on("gw_band", [&](const json& v, const std::string& p) { cfg.gw_band = as_pair(v, p); });
    r.on("subcarrier_bw", [&](const json& v, const std::string& p) { cfg.subcarrier_bw = as_number(v, p); });
    r.on("gw_subcarrier_bw", [&](const json& v, const std::string& p) { cfg.gw_subcarrier_bw = as_number(v, p); });
    r.on("sat_subcarriers", [&](const json& v, const std::string& p) { cfg.sat_subcarriers = as_unsigned(v, p); });
    r.on("gw_subcarriers", [&](const json& v, const std::string& p) { cfg.gw_subcarriers = as_unsigned(v, p); });
    r.on("sat_noise_dbm", [&](const json& v, const std::string& p) { cfg.sat_noise_dbm = as_pair(v, p); });
    r.on("gw_noise_dbm", [&](const json& v, const std::string& p) { cfg.gw_noise_dbm = as_pair(v, p); });
    r.on("gw_distance_m", [&](const json& v, const std::string& p) { cfg.gw_distance_m = as_number(v, p); });
    r.on("access_window_s", [&](const json& v, const std::string& p) { cfg.access_window_s = as_number(v, p); });
    r.on("unassigned_latency_s",
         [&](const json& v, const std::string& p) { cfg.unassigned_latency_s = as_number(v, p); });
    r.on("penalty_nu", [&](const json& v, const std::string& p) { cfg.penalty_nu = as_number(v, p); });
    r.on("population", [&](const json& v, const std::string& p) { cfg.population = as_unsigned(v, p); });
    r.on("max_iter", [&](const json& v, const std::string& p) { cfg.max_iter = as_unsigned(v, p); });
    r.on("sweep_gu_counts", [&](const json& v, const std::string& p) {
        cfg.sweep_gu_counts = as_list<std::size_t>(v, p, as_unsigned);
    });
    r.on("sweep_fractions",
         [&](const json& v, const std::string& p) { cfg.sweep_fractions = as_list<double>(v, p, as_number); });
    r.on("sweep_seeds", [&](const json& v, const std::string& p) { cfg.sweep_seeds = as_unsigned(v, p); });
    r.on("oracle_instances", [&](const json& v, const std::string& p) { cfg.oracle_instances = as_unsigned(v, p); });
    r.reject_unknown();

    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config '" + path.string() + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_json(const ScenarioConfig& cfg)
{
    json j;
    j["gus"] = cfg.gus;
    j["seed"] = cfg.seed;
    j["channel"] = to_string(cfg.channel);
    j["formula_mode"] = to_string(cfg.formula_mode);
    j["assisted_policy"] = cfg.policy.kind == ClassificationPolicy::Kind::Threshold ? "threshold" : "fraction";
    j["assisted_fraction"] = cfg.policy.fraction;
    j["denoise"] = cfg.denoise;
    j["demand_mean"] = cfg.demand_mean;
    j["demand_std"] = cfg.demand_std;
    j["payload_bits"] = cfg.payload.source_bits;
    j["compression_ratio"] = cfg.payload.compression_ratio;
    j["sat_band"] = cfg.sat_band;
    j["gw_band"] = cfg.gw_band;
    if (cfg.subcarrier_bw) {
        j["subcarrier_bw"] = *cfg.subcarrier_bw;
    }
    if (cfg.gw_subcarrier_bw) {
        j["gw_subcarrier_bw"] = *cfg.gw_subcarrier_bw;
    }
    if (cfg.sat_subcarriers) {
        j["sat_subcarriers"] = *cfg.sat_subcarriers;
    }
    if (cfg.gw_subcarriers) {
        j["gw_subcarriers"] = *cfg.gw_subcarriers;
    }
    j["sat_noise_dbm"] = cfg.sat_noise_dbm;
    j["gw_noise_dbm"] = cfg.gw_noise_dbm;
    j["gw_distance_m"] = cfg.gw_distance_m;
    j["access_window_s"] = cfg.access_window_s;
    j["unassigned_latency_s"] = cfg.unassigned_latency_s;
    j["penalty_nu"] = cfg.penalty_nu;
    j["population"] = cfg.population;
    j["max_iter"] = cfg.max_iter;
    j["sweep_gu_counts"] = cfg.sweep_gu_counts;
    j["sweep_fractions"] = cfg.sweep_fractions;
    j["sweep_seeds"] = cfg.sweep_seeds;
    j["oracle_instances"] = cfg.oracle_instances;
    return j.dump(2);
}

LinkParams Scenario::satellite_link(const GroundNode& node, std::size_t k) const
{
    LinkParams p;
    p.tx_gain_lin = dbi_to_linear(satellite.gain_dbi);
    p.rx_gain_lin = dbi_to_linear(node.gain_dbi);
    p.tx_power_w = satellite.power_w;
    p.distance_m = node.sat_distance_m;
    p.carrier_hz = sat_plan.frequency(k);
    p.noise_w = node.sat_noise_w;
    p.bandwidth_hz = sat_plan.bandwidth_hz();
    return p;
}

LinkParams Scenario::gateway_link(const GroundNode& gu, std::size_t j) const
{
    LinkParams p;
    p.tx_gain_lin = dbi_to_linear(gateway.gain_dbi);
    p.rx_gain_lin = dbi_to_linear(gu.gain_dbi);
    p.tx_power_w = gateway_power_w;
    p.distance_m = gu.gw_distance_m;
    p.carrier_hz = gw_plan.frequency(j);
    p.noise_w = gu.gw_noise_w;
    p.bandwidth_hz = gw_plan.bandwidth_hz();
    return p;
}

double Scenario::satellite_snr(const GroundNode& node, std::size_t k) const
{
    return snr(satellite_link(node, k), formula_mode);
}

double Scenario::gateway_snr(const GroundNode& gu, std::size_t j) const
{
    return snr(gateway_link(gu, j), formula_mode);
}

std::vector<std::size_t> Scenario::direct_users() const
{
    std::vector<std::size_t> out;
    for (const auto& g : gus) {
        if (g.pathway == Pathway::Direct) {
            out.push_back(g.index);
        }
    }
    return out;
}

std::vector<std::size_t> Scenario::relayed_users() const
{
    std::vector<std::size_t> out;
    for (const auto& g : gus) {
        if (g.pathway == Pathway::Relayed) {
            out.push_back(g.index);
        }
    }
    return out;
}

bool Scenario::has_relayed() const
{
    return std::any_of(gus.begin(), gus.end(), [](const GroundNode& g) { return g.pathway == Pathway::Relayed; });
}

Scenario Scenario::all_direct() const
{
    Scenario out = *this;
    for (auto& g : out.gus) {
        g.pathway = Pathway::Direct;
    }
    return out;
}

Scenario build(const ScenarioConfig& cfg, const QualityTable& table)
{
    cfg.validate();

    Scenario s;
    s.satellite = cfg.satellite;
    s.channel = cfg.channel;
    s.payload = cfg.payload;
    s.access_window_s = cfg.access_window_s;
    s.unassigned_latency_s = cfg.unassigned_latency_s;
    s.formula_mode = cfg.formula_mode;
    s.denoise = cfg.denoise;
    s.seed = cfg.seed;
    s.gateway_power_w = cfg.gw_power_w;

    const std::size_t k_sat = cfg.sat_subcarriers.value_or(cfg.gus);
    const std::size_t k_gw = cfg.gw_subcarriers.value_or(cfg.gus);
    s.sat_plan = SubcarrierPlan(cfg.sat_band[0], cfg.sat_band[1], k_sat,
                                cfg.subcarrier_bw.value_or(default_bandwidth(k_sat)));
    s.gw_plan = SubcarrierPlan(cfg.gw_band[0], cfg.gw_band[1], k_gw,
                               cfg.gw_subcarrier_bw.value_or(default_bandwidth(k_gw)));

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> standard(0.0, 1.0);
    const auto draw = [&](double mean, double sd) { return mean + sd * standard(rng); };

    s.gus.resize(cfg.gus);
    for (std::size_t i = 0; i < cfg.gus; ++i) {
        auto& g = s.gus[i];
        g.index = i;
        g.gain_dbi = cfg.gu_gain_dbi;
        g.sat_distance_m = cfg.satellite.altitude_m;
        g.gw_distance_m = cfg.gw_distance_m;
        g.sat_noise_w = dbm_to_watts(draw(cfg.sat_noise_dbm[0], cfg.sat_noise_dbm[1]));
    }
    for (auto& g : s.gus) {
        g.gw_noise_w = dbm_to_watts(draw(cfg.gw_noise_dbm[0], cfg.gw_noise_dbm[1]));
    }
    s.gateway.index = 0;
    s.gateway.gain_dbi = cfg.gw_gain_dbi;
    s.gateway.sat_distance_m = cfg.satellite.altitude_m;
    s.gateway.gw_distance_m = 0.0;
    s.gateway.sat_noise_w = dbm_to_watts(draw(cfg.sat_noise_dbm[0], cfg.sat_noise_dbm[1]));
    s.gateway.psnr_demand_db = 0.0;
    for (auto& g : s.gus) {
        g.psnr_demand_db = draw(cfg.demand_mean, cfg.demand_std);
    }

    return classify(std::move(s), cfg.policy, table);
}

double best_direct_snr(const Scenario& s, const GroundNode& gu)
{
    double best = 0.0;
    for (std::size_t k = 0; k < s.sat_plan.count(); ++k) {
        best = std::max(best, s.satellite_snr(gu, k));
    }
    return best;
}

Scenario classify(Scenario s, const ClassificationPolicy& policy, const QualityTable& table)
{
    if (policy.kind == ClassificationPolicy::Kind::Threshold) {
        for (auto& g : s.gus) {
            const double best_psnr =
                table.psnr_at(snr_to_db(best_direct_snr(s, g)), ReceiverModel::GroundUser, s.channel);
            g.pathway = best_psnr < g.psnr_demand_db ? Pathway::Relayed : Pathway::Direct;
        }
        return s;
    }

    if (!(policy.fraction >= 0.0 && policy.fraction <= 1.0)) {
        throw std::domain_error("classify: relay fraction must lie in [0, 1]");
    }
    const std::size_t n = s.gus.size();
    // The small slack keeps products like 0.1 * 30 from rounding up to 4.
    const auto relayed = static_cast<std::size_t>(std::ceil(policy.fraction * static_cast<double>(n) - 1e-9));

    std::vector<double> best(n);
    for (std::size_t i = 0; i < n; ++i) {
        best[i] = best_direct_snr(s, s.gus[i]);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return best[a] < best[b]; });
    for (auto& g : s.gus) {
        g.pathway = Pathway::Direct;
    }
    for (std::size_t r = 0; r < std::min(relayed, n); ++r) {
        s.gus[order[r]].pathway = Pathway::Relayed;
    }
    return s;
}

std::vector<SweepPoint> sweep(const ScenarioConfig& base, const SweepGrid& grid, const QualityTable& table)
{
    std::vector<SweepPoint> out;
    out.reserve(grid.gu_counts.size() * grid.fractions.size() * grid.seeds.size());
    for (auto count : grid.gu_counts) {
        for (auto q : grid.fractions) {
            for (auto seed : grid.seeds) {
                ScenarioConfig cfg = base;
                cfg.gus = count;
                cfg.seed = seed;
                cfg.policy = ClassificationPolicy::relay_fraction(q);
                cfg.sat_subcarriers.reset();
                cfg.gw_subcarriers.reset();
                out.push_back({count, q, seed, build(cfg, table)});
            }
        }
    }
    return out;
}

} // namespace satsc
