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
#include "satsc/oracle.hpp"

#include "satsc/dwoa.hpp"
#include "satsc/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace satsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double db_or_floor(double linear)
{
    return linear > 0.0 ? snr_to_db(linear) : -kInf;
}

// Latency straight from the link model, independent of assignment.cpp.
double link_latency(const LinkParams& p, SnrFormulaMode mode, double tx_bits)
{
    const double r = rate(snr(p, mode), p.bandwidth_hz);
    return r > 0.0 ? tx_bits / r : kInf;
}

} // namespace

std::uint64_t expected_enumeration_count(std::size_t slots, std::size_t subcarriers, bool allow_partial)
{
    const auto falling = [](std::size_t n, std::size_t k) {
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < k; ++i) {
            v *= n - i;
        }
        return v;
    };
    const auto choose = [&](std::size_t n, std::size_t k) {
        std::uint64_t v = falling(n, k);
        for (std::size_t i = 2; i <= k; ++i) {
            v /= i;
        }
        return v;
    };
    if (!allow_partial) {
        return subcarriers >= slots ? falling(subcarriers, slots) : 0;
    }
    std::uint64_t total = 0;
    for (std::size_t j = 0; j <= std::min(slots, subcarriers); ++j) {
        total += choose(slots, j) * falling(subcarriers, j);
    }
    return total;
}

OracleResult brute_force(const Scenario& s, Stage stage, const QualityTable& table, double penalty_nu,
                         const Assignment& context, bool allow_partial)
{
    const std::size_t n = stage_slots(s, stage).size();
    const std::size_t k = stage_subcarriers(s, stage);
    if (n > kOracleMaxSlots || k > kOracleMaxSubcarriers) {
        throw OracleRefused("brute force refused: " + std::to_string(n) + " slots x " + std::to_string(k) +
                            " subcarriers exceeds " + std::to_string(kOracleMaxSlots) + " x " +
                            std::to_string(kOracleMaxSubcarriers));
    }
    if (!allow_partial && k < n) {
        throw InfeasibleError("brute force: " + std::to_string(n) + " slots but only " + std::to_string(k) +
                              " subcarriers");
    }

    OracleResult result;
    result.best_fitness = kInf;
    Assignment a = context;
    StageMap& map = a.stage(stage);
    map.assign(n, std::nullopt);
    std::vector<bool> used(k, false);

    const auto visit = [&](auto&& self, std::size_t slot) -> void {
        if (slot == n) {
            ++result.enumerated_count;
            const double f = fitness(a, s, stage, table, penalty_nu);
            if (f < result.best_fitness) {
                result.best_fitness = f;
                result.best = map;
            }
            return;
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) {
                continue;
            }
            used[c] = true;
            map[slot] = c;
            self(self, slot + 1);
            used[c] = false;
        }
        if (allow_partial) {
            map[slot] = std::nullopt;
            self(self, slot + 1);
        }
    };
    visit(visit, 0);
    return result;
}

std::optional<std::vector<std::size_t>> solve_assignment(const LatencyMatrix& cost)
{
    const std::size_t n = cost.rows;
    const std::size_t m = cost.cols;
    if (n == 0) {
        return std::vector<std::size_t>{};
    }
    if (m < n) {
        return std::nullopt;
    }
    // Shortest augmenting path with potentials, 1-based with column 0 as a sentinel.
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<bool> used(m + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (used[j]) {
                    continue;
                }
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (!std::isfinite(delta)) {
                return std::nullopt;
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> out(n);
    for (std::size_t j = 1; j <= m; ++j) {
        if (p[j] != 0) {
            out[p[j] - 1] = j - 1;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(cost(i, out[i]))) {
            return std::nullopt;
        }
    }
    return out;
}

std::optional<ExactResult> exact_linear_assignment(const Scenario& s, Stage stage, const QualityTable& table,
                                                   const Assignment& context)
{
    const auto slots = stage_slots(s, stage);
    const std::size_t n = slots.size();
    LatencyMatrix cost;
    cost.rows = n;
    cost.cols = stage_subcarriers(s, stage);
    cost.values.assign(cost.rows * cost.cols, kInf);
    if (n == 0) {
        return ExactResult{};
    }
    const double tx_bits = s.payload.tx_bits();
    const double weight = 1.0 / static_cast<double>(n);
    const auto relayed = s.relayed_users();

    std::optional<double> gateway_db;
    if (stage == Stage::Gateway) {
        const auto st1 = stage_slots(s, Stage::Satellite);
        for (std::size_t m = 0; m < st1.size(); ++m) {
            if (st1[m].is_gateway && context.stage1.at(m)) {
                gateway_db = db_or_floor(snr(s.satellite_link(s.gateway, *context.stage1[m]), s.formula_mode));
            }
        }
        if (!gateway_db) {
            return std::nullopt;
        }
    }

    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < cost.cols; ++c) {
            bool ok = true;
            double t = kInf;
            if (stage == Stage::Satellite) {
                const GroundNode& node = slots[r].is_gateway ? s.gateway : s.gus[slots[r].gu];
                const LinkParams p = s.satellite_link(node, c);
                const double db = db_or_floor(snr(p, s.formula_mode));
                t = link_latency(p, s.formula_mode, tx_bits);
                if (slots[r].is_gateway) {
                    const double q = table.psnr_at(db, gateway_receiver(s.denoise), s.channel);
                    for (auto g : relayed) {
                        ok = ok && q >= s.gus[g].psnr_demand_db;
                    }
                } else {
                    ok = table.psnr_at(db, ReceiverModel::GroundUser, s.channel) >= node.psnr_demand_db;
                }
            } else {
                const GroundNode& gu = s.gus[slots[r].gu];
                const LinkParams p = s.gateway_link(gu, c);
                const double db = db_or_floor(snr(p, s.formula_mode));
                t = link_latency(p, s.formula_mode, tx_bits);
                ok = end_to_end_psnr(table, *gateway_db, db, s.channel, s.denoise) >= gu.psnr_demand_db;
            }
            ok = ok && t >= 0.0 && t <= s.access_window_s;
            if (ok) {
                cost.values[r * cost.cols + c] = t * weight;
            }
        }
    }

    auto solved = solve_assignment(cost);
    if (!solved) {
        return std::nullopt;
    }
    ExactResult out;
    out.assignment.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        out.assignment[r] = (*solved)[r];
        out.objective += cost(r, (*solved)[r]);
    }
    return out;
}

} // namespace satsc
