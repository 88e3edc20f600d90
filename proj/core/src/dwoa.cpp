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
#include "satsc/dwoa.hpp"

#include "satsc/errors.hpp"
#include "satsc/greedy.hpp"
#include "satsc/latency.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace satsc {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream per (stage, whale) so the population can be updated in
// any order or concurrently with identical results.
std::mt19937_64 whale_stream(std::uint64_t master, Stage stage, std::size_t whale)
{
    const std::uint64_t tag = (static_cast<std::uint64_t>(stage) << 32) ^ static_cast<std::uint64_t>(whale);
    return std::mt19937_64(splitmix64(splitmix64(master) ^ splitmix64(tag)));
}

void check_lengths(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("whale positions must have equal length");
    }
}

std::vector<double> to_position(const std::vector<std::size_t>& subcarriers)
{
    std::vector<double> pos(subcarriers.size());
    for (std::size_t i = 0; i < subcarriers.size(); ++i) {
        pos[i] = static_cast<double>(subcarriers[i] + 1);
    }
    return pos;
}

template <typename F>
void for_each_index(std::size_t n, std::size_t threads, F&& body)
{
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    const std::size_t workers = std::min(threads, n);
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                body(i);
            }
        });
    }
}

struct WhaleState {
    std::vector<double> position;
    std::vector<std::size_t> discrete;
    double fitness = 0.0;
    std::mt19937_64 rng;
};

} // namespace

void WoaConfig::validate() const
{
    if (population_n < 2) {
        throw ConfigError("woa population must be at least 2");
    }
    if (max_it < 1) {
        throw ConfigError("woa max_it must be at least 1");
    }
    if (!(penalty_nu > 0.0)) {
        throw ConfigError("woa penalty_nu must be positive");
    }
    if (!std::isfinite(spiral_b)) {
        throw ConfigError("woa spiral_b must be finite");
    }
}

double fitness(const Assignment& a, const Scenario& s, Stage stage, const QualityTable& table, double penalty_nu)
{
    const bool first = stage == Stage::Satellite;
    const double o = first ? stage1_objective(a, s) : stage2_objective(a, s);
    const auto v = violations(a, s, table, first ? ViolationScope::Stage1 : ViolationScope::Stage2);
    return o + penalty_nu * static_cast<double>(v.total());
}

std::vector<double> step_exploit_encircle(std::span<const double> pos, std::span<const double> best, double A,
                                          double C)
{
    check_lengths(pos, best);
    std::vector<double> out(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        const double d = std::abs(C * best[i] - pos[i]);
        out[i] = best[i] - A * d;
    }
    return out;
}

std::vector<double> step_exploit_spiral(std::span<const double> pos, std::span<const double> best, double b,
                                        double z)
{
    check_lengths(pos, best);
    const double factor = std::exp(b * z) * std::cos(2.0 * std::numbers::pi * z);
    std::vector<double> out(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        out[i] = std::abs(best[i] - pos[i]) * factor + best[i];
    }
    return out;
}

std::vector<double> step_explore(std::span<const double> pos, std::span<const double> rand_pos, double A, double C)
{
    // Same move as encircling, anchored on a random whale instead of the leader.
    return step_exploit_encircle(pos, rand_pos, A, C);
}

std::vector<std::size_t> discretize_repair(std::span<const double> position, std::size_t subcarriers,
                                           const LatencyMatrix& latency)
{
    const std::size_t n = position.size();
    if (subcarriers < n) {
        throw InfeasibleError(std::to_string(n) + " links need distinct subcarriers but only " +
                              std::to_string(subcarriers) + " exist");
    }
    if (latency.rows != n || latency.cols != subcarriers) {
        throw std::invalid_argument("discretize_repair: latency matrix shape mismatch");
    }

    std::vector<std::size_t> wanted(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(position[i])) {
            throw std::domain_error("discretize_repair: non-finite position component");
        }
        const double clamped = std::clamp(position[i], 1.0, static_cast<double>(subcarriers));
        wanted[i] = static_cast<std::size_t>(std::lround(clamped)) - 1;
    }

    // Winner per subcarrier: lowest latency there, then lowest slot.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(subcarriers, none);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t& o = owner[wanted[i]];
        if (o == none || latency(i, wanted[i]) < latency(o, wanted[i])) {
            o = i;
        }
    }

    std::vector<std::size_t> out(n);
    std::vector<bool> taken(subcarriers, false);
    std::vector<std::size_t> losers;
    for (std::size_t i = 0; i < n; ++i) {
        if (owner[wanted[i]] == i) {
            out[i] = wanted[i];
            taken[wanted[i]] = true;
        } else {
            losers.push_back(i);
        }
    }
    for (auto i : losers) {
        const std::size_t w = wanted[i];
        for (std::size_t dist = 1;; ++dist) {
            if (dist <= w && !taken[w - dist]) {
                out[i] = w - dist;
                break;
            }
            if (w + dist < subcarriers && !taken[w + dist]) {
                out[i] = w + dist;
                break;
            }
        }
        taken[out[i]] = true;
    }
    return out;
}

StageProblem::StageProblem(const Scenario& s, Stage stage, const QualityTable& table, double penalty_nu,
                           Assignment context)
    : scenario_(&s), stage_(stage), table_(&table), nu_(penalty_nu), context_(std::move(context)),
      latency_(stage_latencies(s, stage))
{
    const auto shape = Assignment::unassigned(s);
    if (context_.stage1.size() != shape.stage1.size() || context_.stage2.size() != shape.stage2.size()) {
        throw std::invalid_argument("stage problem context does not match scenario slots");
    }
}

Assignment StageProblem::with(const std::vector<std::size_t>& subcarriers) const
{
    Assignment a = context_;
    auto& map = a.stage(stage_);
    if (subcarriers.size() != map.size()) {
        throw std::invalid_argument("stage problem: wrong number of decisions");
    }
    for (std::size_t i = 0; i < subcarriers.size(); ++i) {
        map[i] = subcarriers[i];
    }
    return a;
}

double StageProblem::evaluate(const std::vector<std::size_t>& subcarriers) const
{
    return fitness(with(subcarriers), *scenario_, stage_, *table_, nu_);
}

StageResult optimize_stage(const StageProblem& problem, const WoaConfig& config)
{
    config.validate();
    const std::size_t dims = problem.slots();
    const std::size_t k = problem.subcarriers();
    if (k < dims) {
        throw InfeasibleError("stage " + std::to_string(static_cast<int>(problem.stage())) + ": " +
                              std::to_string(dims) + " links but only " + std::to_string(k) + " subcarriers");
    }

    StageResult result;
    if (dims == 0) {
        result.fitness = problem.evaluate({});
        for (std::size_t t = 0; t <= config.max_it; ++t) {
            result.trace.push_back({t, result.fitness, result.fitness});
        }
        return result;
    }

    const std::size_t n = config.population_n;
    std::vector<WhaleState> whales(n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for_each_index(n, config.threads, [&](std::size_t i) {
        auto& w = whales[i];
        w.rng = whale_stream(config.rng_seed, problem.stage(), i);
        if (i == 0 && config.seed_with_greedy) {
            const auto greedy = greedy_assign(problem.latencies());
            w.discrete.resize(dims);
            for (std::size_t d = 0; d < dims; ++d) {
                w.discrete[d] = *greedy[d];
            }
        } else {
            std::vector<double> start(dims);
            for (auto& x : start) {
                x = 1.0 + unit(w.rng) * static_cast<double>(k - 1);
            }
            w.discrete = discretize_repair(start, k, problem.latencies());
        }
        w.position = to_position(w.discrete);
        w.fitness = problem.evaluate(w.discrete);
    });

    std::size_t leader = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (whales[i].fitness < whales[leader].fitness) {
            leader = i;
        }
    }
    std::vector<std::size_t> best = whales[leader].discrete;
    double best_fitness = whales[leader].fitness;

    const auto record = [&](std::size_t iteration) {
        double sum = 0.0;
        for (const auto& w : whales) {
            sum += w.fitness;
        }
        result.trace.push_back({iteration, best_fitness, sum / static_cast<double>(n)});
    };
    record(0);

    std::vector<std::vector<double>> snapshot(n);
    for (std::size_t t = 0; t < config.max_it; ++t) {
        const double a = 2.0 - 2.0 * static_cast<double>(t) / static_cast<double>(config.max_it);
        for (std::size_t i = 0; i < n; ++i) {
            snapshot[i] = whales[i].position;
        }
        const std::vector<double> leader_pos = to_position(best);

        for_each_index(n, config.threads, [&](std::size_t i) {
            auto& w = whales[i];
            // Fixed draw order per whale keeps every stream aligned across branches.
            const double r1 = unit(w.rng);
            const double r2 = unit(w.rng);
            const double p = unit(w.rng);
            const double z = 2.0 * unit(w.rng) - 1.0;
            const auto partner = static_cast<std::size_t>(unit(w.rng) * static_cast<double>(n)) % n;
            const double A = 2.0 * a * r1 - a;
            const double C = 2.0 * r2;

            std::vector<double> next;
            if (p < 0.5) {
                if (std::abs(A) < 1.0) {
                    next = step_exploit_encircle(snapshot[i], leader_pos, A, C);
                } else {
                    next = step_explore(snapshot[i], snapshot[partner], A, C);
                }
            } else {
                next = step_exploit_spiral(snapshot[i], leader_pos, config.spiral_b, z);
            }
            w.discrete = discretize_repair(next, k, problem.latencies());
            w.position = to_position(w.discrete);
            w.fitness = problem.evaluate(w.discrete);
        });

        for (std::size_t i = 0; i < n; ++i) {
            if (whales[i].fitness < best_fitness) {
                best_fitness = whales[i].fitness;
                best = whales[i].discrete;
            }
        }
        record(t + 1);
    }

    result.best.assign(best.begin(), best.end());
    result.fitness = best_fitness;
    return result;
}

OptimizerReport optimize_two_stage(const Scenario& s, const QualityTable& table, const WoaConfig& config)
{
    Assignment a = Assignment::unassigned(s);

    const StageProblem first(s, Stage::Satellite, table, config.penalty_nu, a);
    auto r1 = optimize_stage(first, config);
    a.stage1 = r1.best;

    StageResult r2;
    if (s.has_relayed()) {
        const StageProblem second(s, Stage::Gateway, table, config.penalty_nu, a);
        r2 = optimize_stage(second, config);
        a.stage2 = r2.best;
    }

    auto report = make_report("dwoa", s, std::move(a), table);
    report.stage1_fitness = r1.fitness;
    report.stage1_trace = std::move(r1.trace);
    report.stage2_fitness = r2.fitness;
    report.stage2_trace = std::move(r2.trace);
    return report;
}

} // namespace satsc
