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
#include "satsc/linkmodel.hpp"

#include <cmath>
#include <numbers>

namespace satsc {

namespace {

void require_positive(double value, const char* field)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::domain_error(std::string("link parameter '") + field +
                                "' must be positive and finite, got " + std::to_string(value));
    }
}

} // namespace

std::string to_string(SnrFormulaMode mode)
{
    return mode == SnrFormulaMode::LiteralPaper ? "literal" : "standard";
}

SnrFormulaMode parse_formula_mode(const std::string& text)
{
    if (text == "literal") {
        return SnrFormulaMode::LiteralPaper;
    }
    if (text == "standard") {
        return SnrFormulaMode::StandardBudget;
    }
    throw std::invalid_argument("unknown formula mode '" + text + "' (expected literal|standard)");
}

void LinkParams::validate() const
{
    require_positive(tx_gain_lin, "tx_gain_lin");
    require_positive(rx_gain_lin, "rx_gain_lin");
    require_positive(tx_power_w, "tx_power_w");
    require_positive(distance_m, "distance_m");
    require_positive(carrier_hz, "carrier_hz");
    require_positive(noise_w, "noise_w");
    require_positive(bandwidth_hz, "bandwidth_hz");
}

SubcarrierPlan::SubcarrierPlan(double band_low_hz, double band_high_hz, std::size_t count,
                               double bandwidth_hz)
    : low_(band_low_hz), high_(band_high_hz), count_(count), bandwidth_(bandwidth_hz)
{
    if (count_ == 0) {
        throw std::domain_error("subcarrier plan needs at least one subcarrier");
    }
    require_positive(low_, "band_low_hz");
    require_positive(bandwidth_, "bandwidth_hz");
    if (!(low_ < high_)) {
        throw std::domain_error("subcarrier plan band must satisfy low < high");
    }
}

double SubcarrierPlan::frequency(std::size_t k) const
{
    if (k >= count_) {
        throw std::out_of_range("subcarrier index " + std::to_string(k) + " outside plan of " +
                                std::to_string(count_));
    }
    if (count_ == 1) {
        return low_;
    }
    if (k + 1 == count_) {
        return high_;
    }
    const double step = (high_ - low_) / static_cast<double>(count_ - 1);
    return low_ + step * static_cast<double>(k);
}

std::vector<double> SubcarrierPlan::frequencies() const
{
    std::vector<double> out(count_);
    for (std::size_t k = 0; k < count_; ++k) {
        out[k] = frequency(k);
    }
    return out;
}

double snr(const LinkParams& link, SnrFormulaMode mode)
{
    link.validate();
    const double path = kSpeedOfLight / (4.0 * std::numbers::pi * link.distance_m * link.carrier_hz);
    const double gains = link.tx_gain_lin * link.rx_gain_lin * link.tx_power_w;
    if (mode == SnrFormulaMode::LiteralPaper) {
        const double term = path / link.noise_w;
        return gains * term * term;
    }
    return gains * path * path / link.noise_w;
}

double rate(double snr_lin, double bandwidth_hz)
{
    if (!(snr_lin >= 0.0)) {
        throw std::domain_error("rate: snr must be non-negative, got " + std::to_string(snr_lin));
    }
    require_positive(bandwidth_hz, "bandwidth_hz");
    return bandwidth_hz * std::log1p(snr_lin) / std::numbers::ln2;
}

double snr_to_db(double linear)
{
    if (!(linear > 0.0)) {
        throw std::domain_error("snr_to_db: linear value must be positive, got " +
                                std::to_string(linear));
    }
    return 10.0 * std::log10(linear);
}

double db_to_snr(double db)
{
    return std::pow(10.0, db / 10.0);
}

double dbi_to_linear(double dbi)
{
    return std::pow(10.0, dbi / 10.0);
}

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

} // namespace satsc
