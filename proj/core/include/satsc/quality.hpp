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
#ifndef SATSC_QUALITY_HPP
#define SATSC_QUALITY_HPP

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace satsc {

/// Which decoder reconstructs the image.
enum class ReceiverModel { GroundUser, Gateway, GatewayWithDenoise };

enum class ChannelKind { Awgn, Rayleigh };

std::string to_string(ReceiverModel rx);
std::string to_string(ChannelKind ch);
ReceiverModel parse_receiver(const std::string& text);
ChannelKind parse_channel(const std::string& text);

struct QualityPoint {
    double snr_db = 0.0;
    double psnr = 0.0;    // [dB]
    double ms_ssim = 0.0; // [-]

    bool operator==(const QualityPoint&) const = default;
};

/// Expected reconstruction quality as a function of received SNR.
///
/// One series per (receiver, channel). Lookups interpolate linearly in dB
/// between grid points, return the stored value exactly on a grid point and
/// clamp to the end rows outside the grid. Immutable once constructed.
class QualityTable {
public:
    QualityTable() = default;

    /// The measured table shipped with the project (SNR 1..19 dB, 60 rows).
    static const QualityTable& builtin();

    /// Parses `channel,receiver,snr_db,psnr,ms_ssim` rows (header required).
    /// Throws ConfigError with the offending line number.
    static QualityTable parse_csv(std::istream& in);
    static QualityTable load(const std::filesystem::path& path);

    /// Writes the table in the same format parse_csv() reads, 4 decimals per value.
    void write_csv(std::ostream& out) const;

    const std::vector<QualityPoint>& series(ReceiverModel rx, ChannelKind ch) const;

    double psnr_at(double snr_db, ReceiverModel rx, ChannelKind ch) const;
    double mssim_at(double snr_db, ReceiverModel rx, ChannelKind ch) const;

    bool operator==(const QualityTable&) const = default;

private:
    static std::size_t slot(ReceiverModel rx, ChannelKind ch);
    double lookup(double snr_db, ReceiverModel rx, ChannelKind ch, bool psnr) const;

    std::array<std::vector<QualityPoint>, 6> series_{};
};

/// Expected PSNR of a relayed image: the weaker of the satellite->gateway
/// reconstruction (with or without denoising) and the gateway->user leg.
double end_to_end_psnr(const QualityTable& table, double snr_sat_gw_db, double snr_gw_gu_db,
                       ChannelKind ch, bool denoise);

/// Receiver model used on the satellite leg of a relayed path.
inline ReceiverModel gateway_receiver(bool denoise)
{
    return denoise ? ReceiverModel::GatewayWithDenoise : ReceiverModel::Gateway;
}

} // namespace satsc

#endif // SATSC_QUALITY_HPP
