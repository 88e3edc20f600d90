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
#include "satsc/report.hpp"

#include "satsc/latency.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace satsc {

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace)
{
    out << "iteration,best_fitness,mean_fitness\n";
    char buf[96];
    for (const auto& row : trace) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", row.iteration, row.best_fitness, row.mean_fitness);
        out << buf;
    }
}

std::size_t OptimizerReport::qos_violations() const
{
    return static_cast<std::size_t>(
        std::count_if(users.begin(), users.end(), [](const UserOutcome& u) { return u.violated; }));
}

double OptimizerReport::mean_user_latency() const
{
    std::vector<double> t;
    t.reserve(users.size());
    for (const auto& u : users) {
        t.push_back(u.latency_s);
    }
    return mean_latency(t);
}

OptimizerReport make_report(std::string scheme, const Scenario& s, Assignment a, const QualityTable& table)
{
    OptimizerReport r;
    r.scheme = std::move(scheme);
    r.formula_mode = s.formula_mode;
    r.seed = s.seed;
    r.users = user_outcomes(a, s, table);
    r.violations = violations(a, s, table);
    r.objective = objective(a, s);
    r.assignment = std::move(a);
    return r;
}

} // namespace satsc
