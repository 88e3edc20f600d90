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
#ifndef SATSC_REPORT_HPP
#define SATSC_REPORT_HPP

#include "satsc/assignment.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace satsc {

struct TraceRow {
    std::size_t iteration = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;

    bool operator==(const TraceRow&) const = default;
};

/// Writes `iteration,best_fitness,mean_fitness` rows with a header.
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace);

/// Outcome of one scheme on one scenario.
struct OptimizerReport {
    std::string scheme;
    SnrFormulaMode formula_mode = SnrFormulaMode::LiteralPaper;
    std::uint64_t seed = 0;
    Assignment assignment;
    std::vector<UserOutcome> users;
    ViolationReport violations;
    double objective = 0.0; // Psi_1 + Psi_2
    double stage1_fitness = 0.0;
    double stage2_fitness = 0.0;
    std::vector<TraceRow> stage1_trace;
    std::vector<TraceRow> stage2_trace;

    /// Users whose expected PSNR misses their demand (C in the reports).
    std::size_t qos_violations() const;
    /// Mean full-path latency over users.
    double mean_user_latency() const;

    bool operator==(const OptimizerReport&) const = default;
};

/// Fills the derived fields (users, violations, objective) of a report.
OptimizerReport make_report(std::string scheme, const Scenario& s, Assignment a, const QualityTable& table);

} // namespace satsc

#endif // SATSC_REPORT_HPP
