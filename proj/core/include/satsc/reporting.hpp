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
#ifndef SATSC_REPORTING_HPP
#define SATSC_REPORTING_HPP

#include "satsc/dwoa.hpp"
#include "satsc/report.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace satsc {

/// The four compared schemes: path policy x allocation algorithm.
enum class Scheme { DirectGre, DirectDwoa, GaGre, GaDwoa };

inline constexpr std::array<Scheme, 4> kAllSchemes{Scheme::DirectGre, Scheme::DirectDwoa, Scheme::GaGre,
                                                   Scheme::GaDwoa};

std::string scheme_id(Scheme scheme); // "direct-gre", ..., "ga-dwoa"

/// Optimizer settings carried by a scenario config; the RNG seed follows the scenario seed.
WoaConfig woa_config(const ScenarioConfig& cfg);

/// Runs one scheme. Direct schemes ignore the scenario's pathway labels and
/// serve every user from the satellite.
OptimizerReport run_scheme(Scheme scheme, const Scenario& s, const QualityTable& table, const WoaConfig& config);

inline constexpr double kReportPenaltyS = 0.5;

struct SeedRow {
    std::uint64_t seed = 0;
    double mean_latency_s = 0.0;
    double penalized_s = 0.0; // mean latency + 0.5 s per QoS violation
    std::size_t violations = 0;
    std::size_t users = 0;

    bool operator==(const SeedRow&) const = default;
};

SeedRow seed_row(const OptimizerReport& report);

/// Per-scheme aggregate over seeds.
struct SchemeSummary {
    std::string scheme;
    double mean_latency_s = 0.0;
    double mean_penalized_latency_s = 0.0;
    double violation_rate = 0.0; // violations per user, pooled over seeds
    std::vector<SeedRow> rows;

    static SchemeSummary from_rows(std::string scheme, std::vector<SeedRow> rows);
};

struct PairwiseCount {
    std::string first;
    std::string second;
    std::size_t wins = 0;   // seeds where first has the lower penalized latency
    std::size_t losses = 0;
    std::size_t ties = 0;
};

struct Comparison {
    std::vector<std::string> ranking; // by mean penalized latency, then scheme id
    std::vector<PairwiseCount> pairs; // every unordered pair, in scheme id order

    /// Counts from `first`'s point of view; either order works.
    PairwiseCount pair(const std::string& first, const std::string& second) const;
};

/// Paired sign counts over a shared seed set. Throws std::invalid_argument on
/// fewer than two summaries or mismatched seeds.
Comparison compare(std::vector<SchemeSummary> summaries);

/// `scheme,seeds,mean_latency_s,mean_penalized_s,violation_rate`
void write_summary_csv(std::ostream& out, const std::vector<SchemeSummary>& summaries);

} // namespace satsc

#endif // SATSC_REPORTING_HPP
