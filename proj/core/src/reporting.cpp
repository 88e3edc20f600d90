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
#include "satsc/reporting.hpp"

#include "satsc/greedy.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace satsc {

std::string scheme_id(Scheme scheme)
{
    switch (scheme) {
    case Scheme::DirectGre:
        return "direct-gre";
    case Scheme::DirectDwoa:
        return "direct-dwoa";
    case Scheme::GaGre:
        return "ga-gre";
    case Scheme::GaDwoa:
        return "ga-dwoa";
    }
    return "?";
}

WoaConfig woa_config(const ScenarioConfig& cfg)
{
    WoaConfig w;
    w.population_n = cfg.population;
    w.max_it = cfg.max_iter;
    w.penalty_nu = cfg.penalty_nu;
    w.rng_seed = cfg.seed;
    return w;
}

OptimizerReport run_scheme(Scheme scheme, const Scenario& s, const QualityTable& table, const WoaConfig& config)
{
    const bool direct = scheme == Scheme::DirectGre || scheme == Scheme::DirectDwoa;
    const Scenario world = direct ? s.all_direct() : s;
    const bool dwoa = scheme == Scheme::DirectDwoa || scheme == Scheme::GaDwoa;
    OptimizerReport report = dwoa ? optimize_two_stage(world, table, config) : greedy_two_stage(world, table);
    report.scheme = scheme_id(scheme);
    return report;
}

SeedRow seed_row(const OptimizerReport& report)
{
    SeedRow row;
    row.seed = report.seed;
    row.mean_latency_s = report.mean_user_latency();
    row.penalized_s = reported_latency_with_penalty(report, kReportPenaltyS);
    row.violations = report.qos_violations();
    row.users = report.users.size();
    return row;
}

SchemeSummary SchemeSummary::from_rows(std::string scheme, std::vector<SeedRow> rows)
{
    SchemeSummary s;
    s.scheme = std::move(scheme);
    s.rows = std::move(rows);
    if (s.rows.empty()) {
        return s;
    }
    double lat = 0.0, pen = 0.0;
    std::size_t violated = 0, users = 0;
    for (const auto& r : s.rows) {
        lat += r.mean_latency_s;
        pen += r.penalized_s;
        violated += r.violations;
        users += r.users;
    }
    const auto n = static_cast<double>(s.rows.size());
    s.mean_latency_s = lat / n;
    s.mean_penalized_latency_s = pen / n;
    s.violation_rate = users ? static_cast<double>(violated) / static_cast<double>(users) : 0.0;
    return s;
}

PairwiseCount Comparison::pair(const std::string& first, const std::string& second) const
{
    for (const auto& p : pairs) {
        if (p.first == first && p.second == second) {
            return p;
        }
        if (p.first == second && p.second == first) {
            return PairwiseCount{first, second, p.losses, p.wins, p.ties};
        }
    }
    throw std::out_of_range("no comparison between '" + first + "' and '" + second + "'");
}

Comparison compare(std::vector<SchemeSummary> summaries)
{
    if (summaries.size() < 2) {
        throw std::invalid_argument("compare needs at least two summaries");
    }
    std::sort(summaries.begin(), summaries.end(),
              [](const SchemeSummary& a, const SchemeSummary& b) { return a.scheme < b.scheme; });

    const auto seeds_of = [](const SchemeSummary& s) {
        std::vector<std::uint64_t> seeds;
        for (const auto& r : s.rows) {
            seeds.push_back(r.seed);
        }
        return seeds;
    };
    const auto reference = seeds_of(summaries.front());
    for (const auto& s : summaries) {
        if (seeds_of(s) != reference) {
            throw std::invalid_argument("summary '" + s.scheme + "' covers a different seed set");
        }
    }

    Comparison out;
    for (std::size_t a = 0; a < summaries.size(); ++a) {
        for (std::size_t b = a + 1; b < summaries.size(); ++b) {
            PairwiseCount pc{summaries[a].scheme, summaries[b].scheme};
            for (std::size_t i = 0; i < reference.size(); ++i) {
                const double x = summaries[a].rows[i].penalized_s;
                const double y = summaries[b].rows[i].penalized_s;
                if (x < y) {
                    ++pc.wins;
                } else if (y < x) {
                    ++pc.losses;
                } else {
                    ++pc.ties;
                }
            }
            out.pairs.push_back(pc);
        }
    }

    std::stable_sort(summaries.begin(), summaries.end(), [](const SchemeSummary& a, const SchemeSummary& b) {
        return a.mean_penalized_latency_s < b.mean_penalized_latency_s;
    });
    for (const auto& s : summaries) {
        out.ranking.push_back(s.scheme);
    }
    return out;
}

void write_summary_csv(std::ostream& out, const std::vector<SchemeSummary>& summaries)
{
    out << "scheme,seeds,mean_latency_s,mean_penalized_s,violation_rate\n";
    char buf[256];
    for (const auto& s : summaries) {
        std::snprintf(buf, sizeof(buf), "%s,%zu,%.17g,%.17g,%.17g\n", s.scheme.c_str(), s.rows.size(),
                      s.mean_latency_s, s.mean_penalized_latency_s, s.violation_rate);
        out << buf;
    }
}

} // namespace satsc
