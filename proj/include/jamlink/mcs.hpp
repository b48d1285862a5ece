#pragma once

#include <array>

namespace jamlink {

inline constexpr int kNumMcs = 10;

// One VHT modulation/coding scheme at 160 MHz, 1 spatial stream, 800 ns GI.
// min_sinr_db is the receiver sensitivity point used by the error model: the
// SINR at which a full-size MPDU decodes with ~90% probability.
struct McsEntry {
  int index;
  const char* modulation;
  int bits_per_symbol;
  double coding_rate;
  double phy_rate_mbps;
  double min_sinr_db;
};

// IEEE 802.11ac VHT-MCS 0..9 for 160 MHz, NSS=1, 800 ns guard interval.
const std::array<McsEntry, kNumMcs>& mcs_table();

std::array<double, kNumMcs> default_min_sinr_db();

}  // namespace jamlink
