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
#ifndef SATSC_ORACLE_HPP
#define SATSC_ORACLE_HPP

#include "satsc/assignment.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace satsc {

/// Raised when an instance is too large to enumerate.
class OracleRefused : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t kOracleMaxSlots = 6;
inline constexpr std::size_t kOracleMaxSubcarriers = 6;

struct OracleResult {
    StageMap best;
    double best_fitness = 0.0;
    std::uint64_t enumerated_count = 0;
};

/// Number of assignments brute_force() visits for a slots x subcarriers stage.
std::uint64_t expected_enumeration_count(std::size_t slots, std::size_t subcarriers, bool allow_partial);

/// Exhaustive minimum of the penalized stage fitness over every injective
/// slot -> subcarrier map (plus partial maps when allow_partial). Ties keep the
/// lexicographically first map, unassigned ordered after every subcarrier.
/// `context` supplies the other stage (stage 1 decisions for Stage::Gateway).
OracleResult brute_force(const Scenario& s, Stage stage, const QualityTable& table, double penalty_nu,
                         const Assignment& context, bool allow_partial = false);

struct ExactResult {
    StageMap assignment;
    double objective = 0.0; // stage objective; no penalty since no cell violates
};

/// Optimal zero-violation stage assignment by the Hungarian method on the
/// slot x subcarrier latency matrix, QoS- or window-violating cells forbidden.
/// Returns nullopt when no zero-violation assignment exists.
std::optional<ExactResult> exact_linear_assignment(const Scenario& s, Stage stage, const QualityTable& table,
                                                   const Assignment& context);

/// Hungarian method on a rows x cols cost matrix (rows <= cols). Entries equal
/// to +inf are forbidden. Returns the column of each row, or nullopt if every
/// complete matching uses a forbidden entry.
std::optional<std::vector<std::size_t>> solve_assignment(const LatencyMatrix& cost);

} // namespace satsc

#endif // SATSC_ORACLE_HPP
