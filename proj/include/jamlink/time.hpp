#pragma once

#include <cstdint>

namespace jamlink {

// Simulation time in integer microseconds. Integer ticks keep event
// ordering exact and runs reproducible.
using Micros = std::int64_t;

// Control epoch: the cadence at which the link is observed and actions apply.
inline constexpr Micros kEpochUs = 5000;

inline constexpr Micros kMicrosPerSecond = 1'000'000;

constexpr double to_seconds(Micros t) { return static_cast<double>(t) / 1e6; }

constexpr Micros from_seconds(double s) {
  return static_cast<Micros>(s * 1e6 + 0.5);
}

}  // namespace jamlink
