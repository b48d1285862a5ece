#pragma once

#include <span>
#include <utility>
#include <vector>

#include "jamlink/channel.hpp"
#include "jamlink/mobility.hpp"
#include "jamlink/rng.hpp"
#include "jamlink/time.hpp"

namespace jamlink {

struct JammerConfig {
  double tx_power_dbm = 10.0;
  double duty_cycle = 0.2;    // long-run fraction of time transmitting
  Micros burst_us = 500;      // fixed burst length
  double distance_m = 10.0;   // from the receiver
};

// Transmission schedule of one non-carrier-sensing interferer: fixed-length
// bursts separated by exponentially distributed gaps. The schedule is
// materialized up front from its own random stream, so it is independent of
// anything the transmitter does.
class JammerSchedule {
 public:
  static JammerSchedule materialize(const JammerConfig& config, Micros horizon,
                                    RngStream& rng);

  bool active_at(Micros t) const;
  // True when any burst intersects [from, to).
  bool overlaps(Micros from, Micros to) const;
  // End of the burst covering t, or t itself if none.
  Micros burst_end_after(Micros t) const;

  double realized_duty(Micros horizon) const;
  const std::vector<std::pair<Micros, Micros>>& bursts() const {
    return bursts_;
  }

 private:
  std::vector<std::pair<Micros, Micros>> bursts_;  // [start, end)
};

struct JammerNode {
  int node_id = 0;
  JammerConfig config;
  JammerSchedule schedule;
};

// Received interference power at `receiver` from every jammer active at some
// point of [from, to); one dBm entry per active jammer.
std::vector<double> interference_over(std::span<const JammerNode> jammers,
                                      Micros from, Micros to,
                                      const World& world, int receiver,
                                      const ChannelParams& channel);

inline std::vector<double> interference_at(std::span<const JammerNode> jammers,
                                           Micros t, const World& world,
                                           int receiver,
                                           const ChannelParams& channel) {
  return interference_over(jammers, t, t + 1, world, receiver, channel);
}

}  // namespace jamlink
