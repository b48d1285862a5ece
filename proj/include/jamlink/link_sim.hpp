#pragma once

#include <cstdint>
#include <vector>

#include "jamlink/channel.hpp"
#include "jamlink/contention.hpp"
#include "jamlink/energy.hpp"
#include "jamlink/events.hpp"
#include "jamlink/jammer.hpp"
#include "jamlink/mobility.hpp"
#include "jamlink/observation.hpp"
#include "jamlink/packet_queue.hpp"
#include "jamlink/rng.hpp"
#include "jamlink/time.hpp"

namespace jamlink {

inline constexpr int kTxNode = 0;
inline constexpr int kRxNode = 1;
inline constexpr int kFirstJammerNode = 2;

struct MacParams {
  Micros slot_us = 9;    // 5 GHz OFDM slot
  Micros sifs_us = 16;
  Micros difs_us = 34;
  Micros ack_us = 32;    // block-ack exchange estimate
  int max_aggregation = 64;
  int retry_limit = 7;
};

// Full description of one simulated link run.
struct SimParams {
  std::uint64_t seed = 1;
  Micros sim_time_us = from_seconds(10.0);

  std::uint64_t arrival_rate_pps = 60000;
  int payload_bytes = 1472;
  std::size_t queue_capacity = 5000;
  Micros queue_max_delay_us = 1'000'000;

  double distance_m = 10.0;
  int n_jammers = 1;
  bool rx_random_walk = false;
  RandomWalkParams walk;

  ChannelParams channel;
  MacParams mac;
  RadioEnergyParams energy;
  double battery_capacity_j = 5.0;
  JammerConfig jammer;
};

// Counters aggregated over one 5 ms control epoch.
struct EpochOutcome {
  long delivered = 0;
  long dropped = 0;
  long arrived = 0;
  long mpdus_attempted = 0;
  long retransmissions = 0;
  std::size_t queue_len = 0;
  double energy_j = 0.0;
  bool last_ack = false;
  int cw = 15;
  int last_backoff = 0;
  int battery_bucket = 100;
  bool battery_depleted = false;
};

struct RunTotals {
  long arrived = 0;
  long delivered = 0;
  long dropped = 0;
  long retransmissions = 0;
};

// Event-driven model of one 802.11ac link: FIFO queue, DCF contention with
// A-MPDU aggregation, Friis/Nakagami channel, per-MPDU error draws against
// jammer overlap, and transmitter-side energy accounting. Single-threaded;
// one instance per run.
class LinkSimulator {
 public:
  explicit LinkSimulator(const SimParams& params);

  // Advances the clock exactly one epoch under the given action and returns
  // the epoch's counters.
  EpochOutcome run_epoch(ControlAction action);

  Micros now() const { return events_.now(); }
  const RunTotals& totals() const { return totals_; }
  std::size_t queue_len() const { return queue_.size(); }
  const EnergyMeter& energy() const { return energy_; }
  const Contention& contention() const { return contention_; }
  bool last_ack() const { return last_ack_; }
  const SimParams& params() const { return params_; }
  const std::vector<JammerNode>& jammers() const { return jammers_; }
  double distance(int a, int b) const { return world_.distance(a, b); }

 private:
  enum class MacPhase { kIdle, kWaiting, kTransmitting, kAcking };

  void schedule_arrivals(Micros start, Micros end);
  void schedule_mobility_step(Micros at);
  void on_arrival();
  void kick();
  void on_contention_done();
  void start_frame(bool chained);
  void on_tx_end();
  void on_ack_done();
  void drop_expired();
  void set_radio(RadioState state, double tx_power_dbm = 10.0);
  void accrue_radio(Micros until);

  SimParams params_;
  EventQueue events_;
  World world_;
  PacketQueue queue_;
  Contention contention_;
  EnergyMeter energy_;
  std::vector<JammerNode> jammers_;

  RngStream channel_rng_;
  RngStream backoff_rng_;
  RngStream mobility_rng_;

  double noise_floor_dbm_;
  double bits_per_mpdu_;

  MacPhase phase_ = MacPhase::kIdle;
  ControlAction action_{};
  Micros epoch_end_ = 0;
  bool last_ack_ = false;

  std::vector<QueuedPacket> inflight_;
  std::vector<bool> inflight_ok_;

  RadioState radio_state_ = RadioState::kIdle;
  double radio_tx_power_ = 10.0;
  Micros radio_since_ = 0;
  double epoch_energy_j_ = 0.0;

  EpochOutcome epoch_;
  RunTotals totals_;
};

}  // namespace jamlink
