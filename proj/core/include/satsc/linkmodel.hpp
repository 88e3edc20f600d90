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
#ifndef SATSC_LINKMODEL_HPP
#define SATSC_LINKMODEL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace satsc {

/// Speed of light in vacuum [m/s].
inline constexpr double kSpeedOfLight = 299792458.0;

/// How the noise term enters the free-space SNR.
///
/// LiteralPaper keeps the noise power inside the squared path term,
/// G_t G_r P (c / (4 pi d f N))^2. StandardBudget is the textbook
/// received-power-over-noise form G_t G_r P (c / (4 pi d f))^2 / N.
/// Both agree exactly when N = 1 W.
enum class SnrFormulaMode { LiteralPaper, StandardBudget };

std::string to_string(SnrFormulaMode mode);
SnrFormulaMode parse_formula_mode(const std::string& text);

/// Physical description of one downlink.
struct LinkParams {
    double tx_gain_lin = 1.0;  // [-]
    double rx_gain_lin = 1.0;  // [-]
    double tx_power_w = 1.0;   // [W]
    double distance_m = 1.0;   // [m]
    double carrier_hz = 1.0;   // [Hz]
    double noise_w = 1.0;      // [W]
    double bandwidth_hz = 1.0; // [Hz]

    /// Throws std::domain_error naming the first non-positive field.
    void validate() const;
};

/// Evenly spaced carriers spanning [band_low_hz, band_high_hz] inclusive.
class SubcarrierPlan {
public:
    SubcarrierPlan() = default;
    SubcarrierPlan(double band_low_hz, double band_high_hz, std::size_t count, double bandwidth_hz);

    double band_low_hz() const { return low_; }
    double band_high_hz() const { return high_; }
    std::size_t count() const { return count_; }
    double bandwidth_hz() const { return bandwidth_; }

    /// Carrier of subcarrier k (0-based). A single-carrier plan sits at band_low_hz.
    double frequency(std::size_t k) const;
    std::vector<double> frequencies() const;

    bool operator==(const SubcarrierPlan&) const = default;

private:
    double low_ = 0.0;
    double high_ = 0.0;
    std::size_t count_ = 0;
    double bandwidth_ = 0.0;
};

/// Linear SNR of a free-space link.
double snr(const LinkParams& link, SnrFormulaMode mode);

/// Shannon rate B log2(1 + snr) in bit/s.
double rate(double snr_lin, double bandwidth_hz);

double snr_to_db(double linear);
double db_to_snr(double db);

double dbi_to_linear(double dbi);
/// dBm to watts: 10^((x - 30) / 10).
double dbm_to_watts(double dbm);

} // namespace satsc

#endif // SATSC_LINKMODEL_HPP
