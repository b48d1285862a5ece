#include "jamlink/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jamlink {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
constexpr double kMinDistanceM = 0.1;  // Friis singularity guard
}  // namespace

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double noise_floor_dbm(const ChannelParams& params) {
  return -174.0 + 10.0 * std::log10(params.bandwidth_hz) +
         params.noise_figure_db;
}

double fspl_db(double distance_m, double frequency_hz) {
  const double d = std::max(distance_m, kMinDistanceM);
  return 20.0 *
         std::log10(4.0 * std::numbers::pi * d * frequency_hz / kSpeedOfLight);
}

double rx_power_dbm(const ChannelParams& params, double tx_power_dbm,
                    double distance_m, std::optional<double> fading_power) {
  double rx = tx_power_dbm - fspl_db(distance_m, params.frequency_hz);
  if (fading_power) {
    rx += 10.0 * std::log10(std::max(*fading_power, 1e-12));
  }
  return rx;
}

double sinr_db(double signal_dbm, std::span<const double> interferers_dbm,
               double noise_floor_dbm) {
  double denom_mw = dbm_to_mw(noise_floor_dbm);
  for (double i : interferers_dbm) denom_mw += dbm_to_mw(i);
  return mw_to_dbm(dbm_to_mw(signal_dbm) / denom_mw);
}

double per(double sinr_db, int mcs, double frame_bits,
           const ChannelParams& params) {
  if (mcs < 0 || mcs >= kNumMcs) {
    throw std::out_of_range("per: mcs index out of range");
  }
  if (frame_bits <= 0.0) {
    throw std::invalid_argument("per: frame_bits must be positive");
  }
  // BER that yields per_ref_target PER for a per_ref_bits frame; the logistic
  // center sits below min_sinr by the matching offset.
  const double ref_ber =
      1.0 - std::pow(1.0 - params.per_ref_target, 1.0 / params.per_ref_bits);
  const double center = params.min_sinr_db[mcs] -
                        params.per_width_db * std::log((1.0 - ref_ber) / ref_ber);
  const double ber =
      1.0 / (1.0 + std::exp((sinr_db - center) / params.per_width_db));
  // 1 - (1 - ber)^n, computed stably for tiny ber.
  const double log_ok = frame_bits * std::log1p(-std::min(ber, 1.0 - 1e-300));
  return std::clamp(1.0 - std::exp(log_ok), 0.0, 1.0);
}

double nakagami_power_draw(RngStream& rng, double m) {
  return rng.gamma(m, 1.0 / m);
}

Micros airtime_us(const FrameSpec& frame, const ChannelParams& params) {
  const auto& entry = mcs_table().at(static_cast<std::size_t>(frame.mcs));
  const double bits_per_mpdu =
      8.0 * (frame.mpdu_payload_bytes + params.mpdu_overhead_bytes);
  const double payload_us =
      frame.n_aggregated * bits_per_mpdu / entry.phy_rate_mbps;
  return params.preamble_us + static_cast<Micros>(std::ceil(payload_us));
}

}  // namespace jamlink
