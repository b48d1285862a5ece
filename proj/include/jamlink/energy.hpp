#pragma once

#include "jamlink/time.hpp"

namespace jamlink {

// Current demand per radio state, after the ns-3 Wi-Fi radio energy model
// convention. TX current follows the linear model
// I = P_watts / (voltage * eta) + base.
struct RadioEnergyParams {
  double voltage_v = 3.0;
  double idle_a = 0.273;
  double busy_a = 0.273;
  double rx_a = 0.313;
  double sleep_a = 0.033;
  double tx_eta = 0.1;
  double tx_base_a = 0.273;
};

enum class RadioState { kIdle, kBusy, kRx, kTx, kSleep };

// Transmit current draw in amperes for a nominal power in the 1..10 dBm
// action range.
double tx_current_a(const RadioEnergyParams& params, double power_dbm);

// Battery bookkeeping for the transmitter. Energy only ever leaves; the
// level floors at zero.
class EnergyMeter {
 public:
  EnergyMeter(const RadioEnergyParams& params, double capacity_j)
      : params_(params), capacity_j_(capacity_j), remaining_j_(capacity_j) {}

  // Charges the battery for `duration` spent in `state` (tx_power_dbm is
  // only used for kTx). Returns the energy actually drawn in joules.
  double accrue(RadioState state, Micros duration, double tx_power_dbm = 10.0);

  // Battery level as a multiple of 10 in [10, 100]: ceil(fraction * 10) * 10.
  int level_bucket() const;

  double capacity_j() const { return capacity_j_; }
  double remaining_j() const { return remaining_j_; }
  double consumed_j() const { return capacity_j_ - remaining_j_; }
  double remaining_fraction() const {
    return capacity_j_ > 0.0 ? remaining_j_ / capacity_j_ : 0.0;
  }
  bool depleted() const { return remaining_j_ <= 0.0; }

  double current_a(RadioState state, double tx_power_dbm = 10.0) const;

 private:
  RadioEnergyParams params_;
  double capacity_j_;
  double remaining_j_;
};

}  // namespace jamlink
