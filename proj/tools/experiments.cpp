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
#include "experiments.hpp"

#include "satsc/errors.hpp"
#include "satsc/oracle.hpp"
#include "satsc/reporting.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace satsc::tools {

namespace {

struct KindName {
    ExperimentKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {ExperimentKind::PerGuLatency, "PerGuLatency"}, {ExperimentKind::QosSecured, "QosSecured"},
    {ExperimentKind::PerGuSnr, "PerGuSnr"},         {ExperimentKind::LatencySweep, "LatencySweep"},
    {ExperimentKind::QualityDump, "QualityDump"},   {ExperimentKind::OracleCheck, "OracleCheck"},
};

std::string squash(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '-' || c == '_')
            continue;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

class OutDir {
public:
    explicit OutDir(std::filesystem::path dir) : dir_(std::move(dir))
    {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec || !std::filesystem::is_directory(dir_))
            throw IoError("cannot create output directory " + dir_.string());
    }

    void write(const std::string& name, const std::string& content)
    {
        const auto target = dir_ / name;
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("cannot open " + tmp.string() + " for writing");
            out << content;
            out.flush();
            if (!out)
                throw IoError("write failed: " + tmp.string());
        }
        std::error_code ec;
        std::filesystem::rename(tmp, target, ec);
        if (ec)
            throw IoError("cannot move " + tmp.string() + " to " + target.string() + ": " + ec.message());
        files_.push_back(name);
    }

    const std::vector<std::string>& files() const { return files_; }

private:
    std::filesystem::path dir_;
    std::vector<std::string> files_;
};

// Runs fn(0..n-1) on up to `threads` workers. Results are owned by the
// caller's per-index slots, so the order of completion does not matter.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn)
{
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::string opt_index(const std::optional<std::size_t>& k)
{
    return k ? std::to_string(*k + 1) : std::string();
}

std::string opt_db(double snr)
{
    return snr > 0.0 ? format_double(snr_to_db(snr)) : std::string();
}

const char* pathway_name(Pathway p)
{
    return p == Pathway::Direct ? "direct" : "relayed";
}

std::vector<OptimizerReport> run_schemes(const Scenario& s, const QualityTable& table, const ScenarioConfig& cfg,
                                         std::size_t threads)
{
    WoaConfig wc = woa_config(cfg);
    wc.threads = threads;
    std::vector<OptimizerReport> reports;
    for (Scheme scheme : kAllSchemes)
        reports.push_back(run_scheme(scheme, s, table, wc));
    return reports;
}

std::string summary_csv(const std::vector<OptimizerReport>& reports)
{
    std::vector<SchemeSummary> summaries;
    for (const auto& r : reports)
        summaries.push_back(SchemeSummary::from_rows(r.scheme, {seed_row(r)}));
    std::ostringstream out;
    write_summary_csv(out, summaries);
    return out.str();
}

void per_gu_latency(OutDir& dir, const std::vector<OptimizerReport>& reports)
{
    for (const auto& r : reports) {
        std::ostringstream out;
        out << "gu,scheme,subcarrier,snr_db,psnr_db,demand_db,latency_s,latency_penalized_s,violated\n";
        for (const auto& u : r.users) {
            const bool relayed = u.pathway == Pathway::Relayed;
            const double penalized = u.latency_s + (u.violated ? kReportPenaltyS : 0.0);
            out << u.gu + 1 << ',' << r.scheme << ',' << opt_index(relayed ? u.gw_subcarrier : u.sat_subcarrier) << ','
                << opt_db(relayed ? u.gw_snr : u.sat_snr) << ',' << format_double(u.psnr_db) << ','
                << format_double(u.demand_db) << ',' << format_double(u.latency_s) << ','
                << format_double(penalized) << ',' << (u.violated ? 1 : 0) << '\n';
        }
        dir.write("per_gu_latency_" + r.scheme + ".csv", out.str());
    }
}

void qos_secured(OutDir& dir, const std::vector<OptimizerReport>& reports)
{
    for (const auto& r : reports) {
        std::ostringstream out;
        out << "gu,scheme,pathway,demand_db,psnr_db,ms_ssim,violated\n";
        for (const auto& u : r.users) {
            out << u.gu + 1 << ',' << r.scheme << ',' << pathway_name(u.pathway) << ',' << format_double(u.demand_db)
                << ',' << format_double(u.psnr_db) << ',' << format_double(u.ms_ssim) << ',' << (u.violated ? 1 : 0)
                << '\n';
        }
        dir.write("qos_secured_" + r.scheme + ".csv", out.str());
    }
}

void per_gu_snr(OutDir& dir, const std::vector<OptimizerReport>& reports)
{
    for (const auto& r : reports) {
        std::ostringstream out;
        out << "gu,scheme,pathway,sat_subcarrier,sat_snr_db,gw_subcarrier,gw_snr_db\n";
        for (const auto& u : r.users) {
            out << u.gu + 1 << ',' << r.scheme << ',' << pathway_name(u.pathway) << ',' << opt_index(u.sat_subcarrier)
                << ',' << opt_db(u.sat_snr) << ',' << opt_index(u.gw_subcarrier) << ',' << opt_db(u.gw_snr) << '\n';
        }
        dir.write("per_gu_snr_" + r.scheme + ".csv", out.str());
    }
}

void latency_sweep(OutDir& dir, const ScenarioConfig& cfg, const QualityTable& table, std::size_t threads)
{
    SweepGrid grid{cfg.sweep_gu_counts, cfg.sweep_fractions, {}};
    for (std::size_t i = 0; i < cfg.sweep_seeds; ++i)
        grid.seeds.push_back(cfg.seed + i);
    const auto points = sweep(cfg, grid, table);

    const std::size_t n_schemes = kAllSchemes.size();
    std::vector<SeedRow> rows(points.size() * n_schemes);
    parallel_for(rows.size(), threads, [&](std::size_t task) {
        const auto& p = points[task / n_schemes];
        ScenarioConfig point_cfg = cfg;
        point_cfg.seed = p.seed;
        WoaConfig wc = woa_config(point_cfg);
        rows[task] = seed_row(run_scheme(kAllSchemes[task % n_schemes], p.scenario, table, wc));
    });

    std::ostringstream grid_out;
    grid_out << "scheme,gu_count,fraction,seeds,mean_latency_s,mean_penalized_s,violation_rate\n";
    for (std::size_t si = 0; si < n_schemes; ++si) {
        const std::string id = scheme_id(kAllSchemes[si]);
        std::ostringstream out;
        out << "gu_count,fraction,seed,mean_latency_s,penalized_s,violations\n";
        for (std::size_t pi = 0; pi < points.size(); ++pi) {
            const auto& p = points[pi];
            const auto& row = rows[pi * n_schemes + si];
            out << p.gu_count << ',' << format_double(p.fraction) << ',' << p.seed << ','
                << format_double(row.mean_latency_s) << ',' << format_double(row.penalized_s) << ','
                << row.violations << '\n';
        }
        dir.write("latency_sweep_" + id + ".csv", out.str());

        // Points come out grouped by (count, fraction) with seeds innermost.
        for (std::size_t start = 0; start < points.size(); start += grid.seeds.size()) {
            std::vector<SeedRow> group;
            for (std::size_t k = 0; k < grid.seeds.size(); ++k)
                group.push_back(rows[(start + k) * n_schemes + si]);
            const auto summary = SchemeSummary::from_rows(id, std::move(group));
            grid_out << id << ',' << points[start].gu_count << ',' << format_double(points[start].fraction) << ','
                     << grid.seeds.size() << ',' << format_double(summary.mean_latency_s) << ','
                     << format_double(summary.mean_penalized_latency_s) << ','
                     << format_double(summary.violation_rate) << '\n';
        }
    }
    dir.write("latency_sweep_summary.csv", grid_out.str());
}

void oracle_check(OutDir& dir, const ScenarioConfig& cfg, const QualityTable& table, std::size_t threads)
{
    struct Row {
        std::uint64_t seed = 0;
        std::size_t nodes = 0;
        double dwoa = 0.0;
        double brute = 0.0;
        std::optional<double> exact;
        bool within = false;
        bool agree = false;
    };
    std::vector<Row> rows(cfg.oracle_instances);
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        ScenarioConfig c = cfg;
        c.seed = cfg.seed + i;
        c.gus = 4 + i % 2;
        c.sat_subcarriers = c.gus;
        const Scenario s = build(c, table).all_direct();
        const Assignment ctx = Assignment::unassigned(s);
        const WoaConfig wc = woa_config(c);

        Row& row = rows[i];
        row.seed = c.seed;
        row.nodes = c.gus;
        row.dwoa = optimize_stage(StageProblem(s, Stage::Satellite, table, wc.penalty_nu, ctx), wc).fitness;
        row.brute = brute_force(s, Stage::Satellite, table, wc.penalty_nu, ctx).best_fitness;
        if (auto ex = exact_linear_assignment(s, Stage::Satellite, table, ctx))
            row.exact = ex->objective;
        row.within = row.dwoa <= 1.05 * row.brute;
        // No exact solution means no violation-free map exists, so the
        // brute-force optimum must carry at least one penalty.
        row.agree = row.exact ? std::abs(*row.exact - row.brute) <= 1e-12 * std::abs(row.brute)
                              : row.brute >= wc.penalty_nu;
    });

    std::ostringstream out;
    out << "instance,seed,nodes,dwoa_fitness,brute_fitness,exact_objective,within_5pct,agree\n";
    std::size_t within = 0;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        within += r.within ? 1 : 0;
        failures += r.agree ? 0 : 1;
        out << i + 1 << ',' << r.seed << ',' << r.nodes << ',' << format_double(r.dwoa) << ','
            << format_double(r.brute) << ',' << (r.exact ? format_double(*r.exact) : std::string()) << ','
            << (r.within ? 1 : 0) << ',' << (r.agree ? 1 : 0) << '\n';
    }
    dir.write("oracle_check.csv", out.str());
    dir.write("oracle_summary.csv", "instances,within_5pct,failures\n" + std::to_string(rows.size()) + ',' +
                                        std::to_string(within) + ',' + std::to_string(failures) + '\n');
}

std::string manifest(const RunOptions& opts, const std::vector<std::string>& files)
{
    nlohmann::ordered_json m;
    m["tool"] = "satsc";
    m["version"] = kToolVersion;
    m["experiment"] = to_string(opts.kind);
    m["seed"] = opts.config.seed;
    m["formula_mode"] = to_string(opts.config.formula_mode);
    m["config"] = nlohmann::ordered_json::parse(config_to_json(opts.config));
    m["files"] = files;
    return m.dump(2) + "\n";
}

} // namespace

std::string to_string(ExperimentKind kind)
{
    for (const auto& kn : kKindNames)
        if (kn.kind == kind)
            return kn.name;
    return "unknown";
}

std::optional<ExperimentKind> parse_experiment(std::string_view name)
{
    const std::string key = squash(name);
    for (const auto& kn : kKindNames)
        if (squash(kn.name) == key)
            return kn.kind;
    return std::nullopt;
}

std::string format_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

RunResult run_experiment(const RunOptions& opts, const QualityTable& table)
{
    opts.config.validate();
    OutDir dir(opts.out_dir);
    const auto& cfg = opts.config;

    switch (opts.kind) {
    case ExperimentKind::PerGuLatency:
    case ExperimentKind::QosSecured:
    case ExperimentKind::PerGuSnr: {
        const Scenario s = build(cfg, table);
        const auto reports = run_schemes(s, table, cfg, opts.threads);
        if (opts.kind == ExperimentKind::PerGuLatency)
            per_gu_latency(dir, reports);
        else if (opts.kind == ExperimentKind::QosSecured)
            qos_secured(dir, reports);
        else
            per_gu_snr(dir, reports);
        dir.write("summary.csv", summary_csv(reports));
        break;
    }
    case ExperimentKind::LatencySweep:
        latency_sweep(dir, cfg, table, opts.threads);
        break;
    case ExperimentKind::QualityDump: {
        std::ostringstream out;
        table.write_csv(out);
        dir.write("quality_table.csv", out.str());
        break;
    }
    case ExperimentKind::OracleCheck:
        oracle_check(dir, cfg, table, opts.threads);
        break;
    }

    RunResult result{dir.files()};
    dir.write("manifest.json", manifest(opts, result.files));
    return result;
}

} // namespace satsc::tools
