#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jamlink/env.hpp"
#include "jamlink/link_sim.hpp"
#include "jamlink/minstrel.hpp"
#include "jamlink/sarsa.hpp"

namespace jamlink {

enum class AgentKind { kSarsa, kMinstrel, kFixed };

// Full experiment description, read from a flat dotted-key config file
// (one `key = value` per line, `#` comments, comma-separated lists for
// sweeps). Unknown keys are errors.
struct ExperimentConfig {
  std::string scale = "full";  // "full" (10 s) or "desk" (1 s)
  std::uint64_t seed = 1;
  double sim_time_s = 10.0;

  std::vector<std::uint64_t> arrival_rates_pps{60000};
  int payload_bytes = 1472;
  std::size_t queue_capacity = 5000;
  double queue_max_delay_s = 1.0;

  std::vector<double> distances_m{10.0};
  int jammers = 1;
  bool rx_random_walk = false;
  RandomWalkParams walk;

  ChannelParams channel;
  MacParams mac;
  RadioEnergyParams energy;
  double battery_capacity_j = 5.0;
  JammerConfig jammer;

  AgentKind agent = AgentKind::kSarsa;
  SarsaParams sarsa;
  double lambda = 0.8;
  EnergyTotalRef energy_total = EnergyTotalRef::kCapacity;
  MinstrelParams minstrel;
  int fixed_power_dbm = 10;
  int fixed_mcs = 9;

  int train_episodes = 500;
  int test_episodes = 30;

  static ExperimentConfig from_file(const std::string& path);
  // Applies one `key = value` assignment (same grammar as the file).
  void apply(const std::string& key, const std::string& value);
  void validate() const;

  // Assembles simulator parameters for one sweep point.
  SimParams sim_params(double distance_m, std::uint64_t arrival_rate_pps,
                       int n_jammers, std::uint64_t run_seed) const;

  RewardParams reward_params() const { return {lambda, energy_total}; }

  // Stable controller label used in result files.
  std::string controller_name() const;
};

}  // namespace jamlink
