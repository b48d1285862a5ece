#include "jamlink/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jamlink {

double tx_current_a(const RadioEnergyParams& params, double power_dbm) {
  if (power_dbm < 1.0 || power_dbm > 10.0) {
    throw std::out_of_range("tx_current_a: power outside 1..10 dBm range");
  }
  const double p_watts = std::pow(10.0, (power_dbm - 30.0) / 10.0);
  return p_watts / (params.voltage_v * params.tx_eta) + params.tx_base_a;
}

double EnergyMeter::current_a(RadioState state, double tx_power_dbm) const {
  switch (state) {
    case RadioState::kIdle:
      return params_.idle_a;
    case RadioState::kBusy:
      return params_.busy_a;
    case RadioState::kRx:
      return params_.rx_a;
    case RadioState::kTx:
      return tx_current_a(params_, tx_power_dbm);
    case RadioState::kSleep:
      return params_.sleep_a;
  }
  return params_.idle_a;
}

double EnergyMeter::accrue(RadioState state, Micros duration,
                           double tx_power_dbm) {
  if (duration < 0) {
    throw std::invalid_argument("EnergyMeter::accrue: negative duration");
  }
  const double wanted =
      current_a(state, tx_power_dbm) * params_.voltage_v * to_seconds(duration);
  const double drawn = std::min(wanted, remaining_j_);
  remaining_j_ -= drawn;
  return drawn;
}

int EnergyMeter::level_bucket() const {
  const int bucket =
      static_cast<int>(std::ceil(remaining_fraction() * 10.0)) * 10;
  return std::clamp(bucket, 10, 100);
}

}  // namespace jamlink
