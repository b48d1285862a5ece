#pragma once

#include <array>
#include <optional>
#include <span>

#include "jamlink/mcs.hpp"
#include "jamlink/rng.hpp"
#include "jamlink/time.hpp"

namespace jamlink {

struct ChannelParams {
  double frequency_hz = 5.2e9;
  double bandwidth_hz = 160e6;
  double noise_figure_db = 7.0;
  bool fading_enabled = true;
  double nakagami_m = 1.5;
  // Clear-channel assessment threshold at the transmitter. Only consulted
  // when carrier_sense_interference is set; the default models an interferer
  // on a separate port that the station does not defer to.
  double cca_threshold_dbm = -82.0;
  bool carrier_sense_interference = false;

  // Frame error model: per-bit error probability follows a logistic curve in
  // SINR; a frame of n bits survives with (1-ber)^n. The curve is anchored so
  // that a reference MPDU hits per_ref_target PER exactly at min_sinr[mcs].
  double per_width_db = 1.5;
  double per_ref_bits = 12096.0;  // 1472 B payload + 40 B overhead
  double per_ref_target = 0.1;
  std::array<double, kNumMcs> min_sinr_db = default_min_sinr_db();

  // Airtime model.
  Micros preamble_us = 44;       // VHT preamble estimate
  int mpdu_overhead_bytes = 40;  // MAC header + A-MPDU delimiter + FCS
};

struct FrameSpec {
  int mpdu_payload_bytes = 1472;
  int n_aggregated = 1;  // 1..64 MPDUs per A-MPDU
  int mcs = 0;
  double tx_power_dbm = 10.0;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

// Thermal noise floor: -174 dBm/Hz + 10 log10(bandwidth) + noise figure.
double noise_floor_dbm(const ChannelParams& params);

// Free-space path loss, 20 log10(4 pi d f / c). Distance is clamped to 0.1 m.
double fspl_db(double distance_m, double frequency_hz);

// Received power over a Friis line-of-sight link; fading_power, when present,
// is a linear power scale factor (Nakagami draw).
double rx_power_dbm(const ChannelParams& params, double tx_power_dbm,
                    double distance_m,
                    std::optional<double> fading_power = std::nullopt);

// signal / (noise + sum of interferers), computed in milliwatts.
double sinr_db(double signal_dbm, std::span<const double> interferers_dbm,
               double noise_floor_dbm);

// Frame error probability for frame_bits bits at the given MCS.
double per(double sinr_db, int mcs, double frame_bits,
           const ChannelParams& params);

// Nakagami-m power factor: Gamma(m, 1/m), unit mean.
double nakagami_power_draw(RngStream& rng, double m);

// Time on air for one PPDU: preamble plus payload bits at the MCS PHY rate.
Micros airtime_us(const FrameSpec& frame, const ChannelParams& params);

}  // namespace jamlink
