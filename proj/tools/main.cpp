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

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kInfeasible = 3, kIo = 4 };

} // namespace

int main(int argc, char** argv)
{
    using namespace satsc;

    CLI::App app{"Semantic-communication satellite downlink simulator"};
    app.set_version_flag("--version", tools::kToolVersion);
    app.require_subcommand(1);

    std::string experiment;
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string mode;
    std::size_t threads = 1;

    auto* run = app.add_subcommand("run", "Run one experiment and write its CSV files");
    run->add_option("--experiment,-e", experiment,
                    "PerGuLatency | QosSecured | PerGuSnr | LatencySweep | QualityDump | OracleCheck")
        ->required();
    run->add_option("--config,-c", config_path, "JSON config file (defaults when omitted)");
    run->add_option("--out,-o", out_dir, "Output directory (overrides SATSC_OUT_DIR)");
    run->add_option("--seed", seed, "Override the config seed");
    run->add_option("--mode", mode, "SNR formula: literal | standard")->check(CLI::IsMember({"literal", "standard"}));
    run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    const auto kind = tools::parse_experiment(experiment);
    if (!kind) {
        std::cerr << "satsc: unknown experiment '" << experiment << "'\n";
        return kConfig;
    }

    if (out_dir.empty()) {
        if (const char* env = std::getenv("SATSC_OUT_DIR"); env && *env)
            out_dir = env;
    }
    if (out_dir.empty()) {
        std::cerr << "satsc: no output directory (use --out or SATSC_OUT_DIR)\n";
        return kConfig;
    }

    try {
        tools::RunOptions opts;
        opts.kind = *kind;
        opts.config = config_path.empty() ? ScenarioConfig{} : load_config(config_path);
        if (seed)
            opts.config.seed = *seed;
        if (!mode.empty())
            opts.config.formula_mode = parse_formula_mode(mode);
        opts.out_dir = out_dir;
        opts.threads = threads;

        const auto result = tools::run_experiment(opts);
        for (const auto& f : result.files)
            std::cout << (opts.out_dir / f).string() << '\n';
        std::cout << (opts.out_dir / "manifest.json").string() << '\n';
        return kOk;
    } catch (const ConfigError& e) {
        std::cerr << "satsc: config error: " << e.what() << '\n';
        return kConfig;
    } catch (const InfeasibleError& e) {
        std::cerr << "satsc: infeasible instance: " << e.what() << '\n';
        return kInfeasible;
    } catch (const UnservableLinkError& e) {
        std::cerr << "satsc: infeasible instance: " << e.what() << '\n';
        return kInfeasible;
    } catch (const tools::IoError& e) {
        std::cerr << "satsc: io error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "satsc: " << e.what() << '\n';
        return kFailure;
    }
}
