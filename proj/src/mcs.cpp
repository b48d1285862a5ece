#include "jamlink/mcs.hpp"

namespace jamlink {

// phy_rate = 468 data subcarriers x bits/symbol x coding rate / 4 us symbol.
const std::array<McsEntry, kNumMcs>& mcs_table() {
  static const std::array<McsEntry, kNumMcs> table{{
      {0, "BPSK", 1, 1.0 / 2.0, 58.5, 5.0},
      {1, "QPSK", 2, 1.0 / 2.0, 117.0, 8.0},
      {2, "QPSK", 2, 3.0 / 4.0, 175.5, 11.0},
      {3, "16-QAM", 4, 1.0 / 2.0, 234.0, 14.0},
      {4, "16-QAM", 4, 3.0 / 4.0, 351.0, 18.0},
      {5, "64-QAM", 6, 2.0 / 3.0, 468.0, 22.0},
      {6, "64-QAM", 6, 3.0 / 4.0, 526.5, 24.0},
      {7, "64-QAM", 6, 5.0 / 6.0, 585.0, 26.0},
      {8, "256-QAM", 8, 3.0 / 4.0, 702.0, 30.0},
      {9, "256-QAM", 8, 5.0 / 6.0, 780.0, 32.0},
  }};
  return table;
}

std::array<double, kNumMcs> default_min_sinr_db() {
  std::array<double, kNumMcs> out{};
  for (int i = 0; i < kNumMcs; ++i) out[i] = mcs_table()[i].min_sinr_db;
  return out;
}

}  // namespace jamlink
