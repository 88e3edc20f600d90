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
#ifndef SATSC_TOOLS_EXPERIMENTS_HPP
#define SATSC_TOOLS_EXPERIMENTS_HPP

#include "satsc/quality.hpp"
#include "satsc/scenario.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace satsc::tools {

enum class ExperimentKind { PerGuLatency, QosSecured, PerGuSnr, LatencySweep, QualityDump, OracleCheck };

std::string to_string(ExperimentKind kind);
/// Case-insensitive; '-' and '_' are ignored, so "per-gu-latency" works too.
std::optional<ExperimentKind> parse_experiment(std::string_view name);

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    ExperimentKind kind = ExperimentKind::PerGuLatency;
    ScenarioConfig config;
    std::filesystem::path out_dir;
    std::size_t threads = 1;
};

struct RunResult {
    std::vector<std::string> files; // written file names, in write order
};

/// Runs one experiment and writes its CSVs plus manifest.json into out_dir.
/// Every file is written to a temporary name and renamed into place.
RunResult run_experiment(const RunOptions& opts, const QualityTable& table = QualityTable::builtin());

/// Shortest round-trip decimal form.
std::string format_double(double v);

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace satsc::tools

#endif // SATSC_TOOLS_EXPERIMENTS_HPP
