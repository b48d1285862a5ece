#include "jamlink/jammer.hpp"

#include <algorithm>
#include <cmath>

namespace jamlink {

JammerSchedule JammerSchedule::materialize(const JammerConfig& config,
                                           Micros horizon, RngStream& rng) {
  JammerSchedule s;
  if (config.duty_cycle <= 0.0 || config.burst_us <= 0) return s;
  if (config.duty_cycle >= 1.0) {
    s.bursts_.emplace_back(0, horizon);
    return s;
  }
  // Bursts start on an exponentially jittered regular grid. The jitter keeps
  // burst phases random while the grid pins the long-run duty cycle to the
  // configured value instead of letting it drift with the gap draws.
  const double mean_gap_us = static_cast<double>(config.burst_us) *
                             (1.0 - config.duty_cycle) / config.duty_cycle;
  const double cycle_us = static_cast<double>(config.burst_us) + mean_gap_us;
  Micros prev_end = 0;
  for (std::int64_t k = 0;; ++k) {
    const double ideal = static_cast<double>(k) * cycle_us;
    if (ideal >= static_cast<double>(horizon)) break;
    const double jitter = rng.exponential(mean_gap_us) - mean_gap_us;
    const Micros start = std::max(
        prev_end, static_cast<Micros>(std::llround(ideal + jitter)));
    if (start >= horizon) continue;
    const Micros end = std::min<Micros>(start + config.burst_us, horizon);
    s.bursts_.emplace_back(start, end);
    prev_end = end;
  }
  return s;
}

bool JammerSchedule::active_at(Micros t) const { return overlaps(t, t + 1); }

bool JammerSchedule::overlaps(Micros from, Micros to) const {
  // First burst ending after `from`.
  auto it = std::lower_bound(
      bursts_.begin(), bursts_.end(), from,
      [](const auto& burst, Micros v) { return burst.second <= v; });
  return it != bursts_.end() && it->first < to;
}

Micros JammerSchedule::burst_end_after(Micros t) const {
  auto it = std::lower_bound(
      bursts_.begin(), bursts_.end(), t,
      [](const auto& burst, Micros v) { return burst.second <= v; });
  if (it != bursts_.end() && it->first <= t) return it->second;
  return t;
}

double JammerSchedule::realized_duty(Micros horizon) const {
  Micros active = 0;
  for (const auto& [start, end] : bursts_) {
    if (start >= horizon) break;
    active += std::min(end, horizon) - start;
  }
  return horizon > 0 ? static_cast<double>(active) / static_cast<double>(horizon)
                     : 0.0;
}

std::vector<double> interference_over(std::span<const JammerNode> jammers,
                                      Micros from, Micros to,
                                      const World& world, int receiver,
                                      const ChannelParams& channel) {
  std::vector<double> powers;
  for (const auto& j : jammers) {
    if (!j.schedule.overlaps(from, to)) continue;
    const double d = world.distance(j.node_id, receiver);
    powers.push_back(rx_power_dbm(channel, j.config.tx_power_dbm, d));
  }
  return powers;
}

}  // namespace jamlink
