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
#ifndef SATSC_DWOA_HPP
#define SATSC_DWOA_HPP

#include "satsc/assignment.hpp"
#include "satsc/report.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace satsc {

struct WoaConfig {
    std::size_t population_n = 30;
    std::size_t max_it = 200;
    double spiral_b = 1.0;
    double penalty_nu = 100.0; // [s] per violation
    std::uint64_t rng_seed = 1;
    std::size_t threads = 1;   // >1 evaluates the population concurrently
    bool seed_with_greedy = true;

    void validate() const;
};

/// Penalized stage fitness: stage objective (Psi_1 or Psi_2) plus nu per
/// violation counted in that stage's scope. Lower is better.
double fitness(const Assignment& a, const Scenario& s, Stage stage, const QualityTable& table, double penalty_nu);

// Whale moves. Positions are real vectors of 1-based subcarrier coordinates.

/// best - A * |C * best - pos|
std::vector<double> step_exploit_encircle(std::span<const double> pos, std::span<const double> best, double A,
                                          double C);
/// |best - pos| * e^(b z) * cos(2 pi z) + best
std::vector<double> step_exploit_spiral(std::span<const double> pos, std::span<const double> best, double b,
                                        double z);
/// rand - A * |C * rand - pos|
std::vector<double> step_explore(std::span<const double> pos, std::span<const double> rand_pos, double A, double C);

/// Maps a real position onto distinct 0-based subcarriers.
///
/// Each coordinate is clamped to [1, K] and rounded to nearest. Where several
/// slots land on one subcarrier, the slot with the lower latency there keeps
/// it (ties: lower slot); the others move, in slot order, to the nearest free
/// subcarrier (ties: lower index). Throws InfeasibleError when K < slots.
std::vector<std::size_t> discretize_repair(std::span<const double> position, std::size_t subcarriers,
                                           const LatencyMatrix& latency);

/// One stage of the problem with everything outside the stage held fixed.
class StageProblem {
public:
    /// For Stage::Gateway, `context.stage1` holds the fixed satellite decisions.
    StageProblem(const Scenario& s, Stage stage, const QualityTable& table, double penalty_nu,
                 Assignment context);

    Stage stage() const { return stage_; }
    std::size_t slots() const { return latency_.rows; }
    std::size_t subcarriers() const { return latency_.cols; }
    const LatencyMatrix& latencies() const { return latency_; }
    const Scenario& scenario() const { return *scenario_; }

    Assignment with(const std::vector<std::size_t>& subcarriers) const;
    double evaluate(const std::vector<std::size_t>& subcarriers) const;

private:
    const Scenario* scenario_;
    Stage stage_;
    const QualityTable* table_;
    double nu_;
    Assignment context_;
    LatencyMatrix latency_;
};

struct StageResult {
    StageMap best;
    double fitness = 0.0;
    std::vector<TraceRow> trace; // row 0 is the initial population
};

/// Discrete WOA over one stage. Elitist: the trace's best column never rises.
/// Whale 0 starts from the greedy assignment when config.seed_with_greedy.
StageResult optimize_stage(const StageProblem& problem, const WoaConfig& config);

/// Stage 1 over the satellite slots, then stage 2 over the relayed users
/// with stage 1 held fixed. Stage 2 is skipped when nobody is relayed.
OptimizerReport optimize_two_stage(const Scenario& s, const QualityTable& table, const WoaConfig& config);

} // namespace satsc

#endif // SATSC_DWOA_HPP
