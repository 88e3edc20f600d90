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
#include "satsc/quality.hpp"

#include "satsc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace satsc {

namespace {

// Measured PSNR / MS-SSIM averages for the GU decoder, the gateway decoder and
// the gateway decoder followed by the denoising autoencoder.
constexpr const char* kBuiltinTable = R"(channel,receiver,snr_db,psnr,ms_ssim
awgn,gu,1,28.7946,0.9271
awgn,gu,3,29.8556,0.9464
awgn,gu,5,30.7371,0.9588
awgn,gu,7,31.4642,0.9672
awgn,gu,9,32.0508,0.9731
awgn,gu,11,32.5138,0.9774
awgn,gu,13,32.8659,0.9805
awgn,gu,15,33.1127,0.9825
awgn,gu,17,33.2809,0.9838
awgn,gu,19,33.3895,0.9846
awgn,gateway,1,28.8807,0.9270
awgn,gateway,3,29.9619,0.9472
awgn,gateway,5,30.8415,0.9597
awgn,gateway,7,31.5562,0.9679
awgn,gateway,9,32.1337,0.9736
awgn,gateway,11,32.5930,0.9777
awgn,gateway,13,32.9466,0.9807
awgn,gateway,15,33.1990,0.9827
awgn,gateway,17,33.3716,0.9841
awgn,gateway,19,33.4859,0.9850
awgn,gateway_denoise,1,29.1045,0.9309
awgn,gateway_denoise,3,30.1458,0.9493
awgn,gateway_denoise,5,30.9989,0.9610
awgn,gateway_denoise,7,31.7009,0.9689
awgn,gateway_denoise,9,32.2722,0.9745
awgn,gateway_denoise,11,32.7236,0.9785
awgn,gateway_denoise,13,33.0690,0.9813
awgn,gateway_denoise,15,33.3242,0.9833
awgn,gateway_denoise,17,33.5036,0.9847
awgn,gateway_denoise,19,33.6214,0.9855
rayleigh,gu,1,27.4347,0.9061
rayleigh,gu,3,28.1708,0.9253
rayleigh,gu,5,28.7268,0.9382
rayleigh,gu,7,29.1212,0.9465
rayleigh,gu,9,29.3953,0.9520
rayleigh,gu,11,29.5796,0.9556
rayleigh,gu,13,29.7065,0.9580
rayleigh,gu,15,29.7919,0.9594
rayleigh,gu,17,29.8467,0.9604
rayleigh,gu,19,29.8817,0.9610
rayleigh,gateway,1,27.5441,0.9077
rayleigh,gateway,3,28.2585,0.9266
rayleigh,gateway,5,28.7890,0.9387
rayleigh,gateway,7,29.1658,0.9466
rayleigh,gateway,9,29.4291,0.9518
rayleigh,gateway,11,29.6113,0.9553
rayleigh,gateway,13,29.7325,0.9577
rayleigh,gateway,15,29.8110,0.9592
rayleigh,gateway,17,29.8625,0.9605
rayleigh,gateway,19,29.8957,0.9611
rayleigh,gateway_denoise,1,27.7571,0.9124
rayleigh,gateway_denoise,3,28.4689,0.9300
rayleigh,gateway_denoise,5,29.0160,0.9415
rayleigh,gateway_denoise,7,29.4114,0.9488
rayleigh,gateway_denoise,9,29.7158,0.9545
rayleigh,gateway_denoise,11,29.9221,0.9583
rayleigh,gateway_denoise,13,30.0607,0.9609
rayleigh,gateway_denoise,15,30.1534,0.9625
rayleigh,gateway_denoise,17,30.2149,0.9635
rayleigh,gateway_denoise,19,30.2549,0.9642
)";

constexpr std::array<ReceiverModel, 3> kReceivers{ReceiverModel::GroundUser, ReceiverModel::Gateway,
                                                  ReceiverModel::GatewayWithDenoise};
constexpr std::array<ChannelKind, 2> kChannels{ChannelKind::Awgn, ChannelKind::Rayleigh};

std::string trim(std::string s)
{
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

double parse_number(const std::string& field, std::size_t line, const char* column)
{
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw ConfigError("quality table line " + std::to_string(line) + ": column '" + column +
                          "' is not a finite number: '" + field + "'");
    }
    return value;
}

} // namespace

std::string to_string(ReceiverModel rx)
{
    switch (rx) {
    case ReceiverModel::GroundUser:
        return "gu";
    case ReceiverModel::Gateway:
        return "gateway";
    case ReceiverModel::GatewayWithDenoise:
        return "gateway_denoise";
    }
    return "?";
}

std::string to_string(ChannelKind ch)
{
    return ch == ChannelKind::Awgn ? "awgn" : "rayleigh";
}

ReceiverModel parse_receiver(const std::string& text)
{
    for (auto rx : kReceivers) {
        if (to_string(rx) == text) {
            return rx;
        }
    }
    throw ConfigError("unknown receiver model '" + text + "'");
}

ChannelKind parse_channel(const std::string& text)
{
    for (auto ch : kChannels) {
        if (to_string(ch) == text) {
            return ch;
        }
    }
    throw ConfigError("unknown channel kind '" + text + "' (expected awgn|rayleigh)");
}

const QualityTable& QualityTable::builtin()
{
    static const QualityTable table = [] {
        std::istringstream in(kBuiltinTable);
        return parse_csv(in);
    }();
    return table;
}

std::size_t QualityTable::slot(ReceiverModel rx, ChannelKind ch)
{
    return static_cast<std::size_t>(ch) * kReceivers.size() + static_cast<std::size_t>(rx);
}

QualityTable QualityTable::parse_csv(std::istream& in)
{
    QualityTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(trim(field));
        }
        if (!header_seen) {
            const std::vector<std::string> expected{"channel", "receiver", "snr_db", "psnr", "ms_ssim"};
            if (fields != expected) {
                throw ConfigError("quality table line " + std::to_string(line_no) +
                                  ": expected header 'channel,receiver,snr_db,psnr,ms_ssim'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 5) {
            throw ConfigError("quality table line " + std::to_string(line_no) + ": expected 5 columns, got " +
                              std::to_string(fields.size()));
        }
        const ChannelKind ch = parse_channel(fields[0]);
        const ReceiverModel rx = parse_receiver(fields[1]);
        QualityPoint point{parse_number(fields[2], line_no, "snr_db"), parse_number(fields[3], line_no, "psnr"),
                           parse_number(fields[4], line_no, "ms_ssim")};
        if (point.ms_ssim < 0.0 || point.ms_ssim > 1.0) {
            throw ConfigError("quality table line " + std::to_string(line_no) + ": ms_ssim outside [0, 1]");
        }
        auto& series = table.series_[slot(rx, ch)];
        if (!series.empty() && !(point.snr_db > series.back().snr_db)) {
            throw ConfigError("quality table line " + std::to_string(line_no) +
                              ": snr_db must be strictly increasing within a series");
        }
        series.push_back(point);
    }
    if (!header_seen) {
        throw ConfigError("quality table is empty");
    }
    return table;
}

QualityTable QualityTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open quality table '" + path.string() + "'");
    }
    return parse_csv(in);
}

void QualityTable::write_csv(std::ostream& out) const
{
    out << "channel,receiver,snr_db,psnr,ms_ssim\n";
    char buf[128];
    for (auto ch : kChannels) {
        for (auto rx : kReceivers) {
            for (const auto& p : series_[slot(rx, ch)]) {
                std::snprintf(buf, sizeof(buf), "%s,%s,%.10g,%.4f,%.4f\n", to_string(ch).c_str(),
                              to_string(rx).c_str(), p.snr_db, p.psnr, p.ms_ssim);
                out << buf;
            }
        }
    }
}

const std::vector<QualityPoint>& QualityTable::series(ReceiverModel rx, ChannelKind ch) const
{
    return series_[slot(rx, ch)];
}

double QualityTable::lookup(double snr_db, ReceiverModel rx, ChannelKind ch, bool psnr) const
{
    const auto& s = series(rx, ch);
    if (s.empty()) {
        throw ConfigError("quality table has no series for " + to_string(ch) + "/" + to_string(rx));
    }
    if (std::isnan(snr_db)) {
        throw std::domain_error("quality lookup: snr_db is NaN");
    }
    const auto value = [psnr](const QualityPoint& p) { return psnr ? p.psnr : p.ms_ssim; };
    if (snr_db <= s.front().snr_db) {
        return value(s.front());
    }
    if (snr_db >= s.back().snr_db) {
        return value(s.back());
    }
    auto hi = std::lower_bound(s.begin(), s.end(), snr_db,
                               [](const QualityPoint& p, double x) { return p.snr_db < x; });
    if (hi->snr_db == snr_db) {
        return value(*hi);
    }
    auto lo = std::prev(hi);
    const double t = (snr_db - lo->snr_db) / (hi->snr_db - lo->snr_db);
    return value(*lo) + t * (value(*hi) - value(*lo));
}

double QualityTable::psnr_at(double snr_db, ReceiverModel rx, ChannelKind ch) const
{
    return lookup(snr_db, rx, ch, true);
}

double QualityTable::mssim_at(double snr_db, ReceiverModel rx, ChannelKind ch) const
{
    return lookup(snr_db, rx, ch, false);
}

double end_to_end_psnr(const QualityTable& table, double snr_sat_gw_db, double snr_gw_gu_db, ChannelKind ch,
                       bool denoise)
{
    if (!std::isfinite(snr_sat_gw_db) || !std::isfinite(snr_gw_gu_db)) {
        throw std::domain_error("end_to_end_psnr: leg SNRs must be finite");
    }
    const double sat_leg = table.psnr_at(snr_sat_gw_db, gateway_receiver(denoise), ch);
    const double gu_leg = table.psnr_at(snr_gw_gu_db, ReceiverModel::GroundUser, ch);
    return std::min(sat_leg, gu_leg);
}

} // namespace satsc
