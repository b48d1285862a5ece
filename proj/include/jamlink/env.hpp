#pragma once

#include <memory>

#include "jamlink/link_sim.hpp"
#include "jamlink/observation.hpp"

namespace jamlink {

// What "total available energy" means in the energy term of the reward:
// the battery's rated capacity (stationary across episodes) or whatever was
// left when the episode started.
enum class EnergyTotalRef { kCapacity, kEpisodeStart };

struct RewardParams {
  double lambda = 0.8;
  EnergyTotalRef energy_total = EnergyTotalRef::kCapacity;
};

enum class Terminal { kNone, kBattery, kLoss };

const char* terminal_name(Terminal t);

// Normalized convex combination of per-epoch delivery and (negated) energy:
// lambda * r_p * 100 / n_total - (1 - lambda) * e_c * 100 / e_total.
double reward(long r_p_count, double e_c_joules, double n_t_total,
              double e_t_total, double lambda);

// Delivered payload bits over wall-clock time, in Mbps.
double throughput_mbps(long n_packets, int payload_bytes, double seconds);

struct StepResult {
  StateObservation next_state;
  double reward = 0.0;
  Terminal terminal = Terminal::kNone;
  bool done = false;
  EpochOutcome info;
};

// Episodic control interface over LinkSimulator: observe the discretized
// state at each epoch boundary, apply one action per epoch, reward per
// the normalized objective, and end the episode on battery or loss
// terminals (training) or on full depletion / time (testing).
class LinkEnv {
 public:
  LinkEnv(const SimParams& sim_params, const RewardParams& reward_params,
          bool terminals_enabled = true);

  StateObservation reset();
  StateObservation reset(std::uint64_t seed);

  // Applies the action for one epoch. Throws if the episode already ended.
  StepResult step(ControlAction action);

  StateObservation observe() const;

  bool done() const { return done_; }
  Terminal terminal() const { return terminal_; }
  int epochs() const { return epochs_; }
  int max_epochs() const { return max_epochs_; }

  double episode_reward() const { return episode_reward_; }
  double episode_energy_j() const;
  double episode_loss_pct() const;
  double episode_throughput_mbps() const;
  long episode_delivered() const { return sim_->totals().delivered; }
  long episode_arrived() const { return sim_->totals().arrived; }

  const LinkSimulator& sim() const { return *sim_; }
  double packets_total() const { return packets_total_; }
  double energy_total_j() const { return energy_total_j_; }

 private:
  SimParams sim_params_;
  RewardParams reward_params_;
  bool terminals_enabled_;

  std::unique_ptr<LinkSimulator> sim_;
  double packets_total_ = 1.0;  // N over the whole episode, from the config
  double energy_total_j_ = 1.0;
  int max_epochs_ = 0;
  int epochs_ = 0;
  bool done_ = false;
  Terminal terminal_ = Terminal::kNone;
  double episode_reward_ = 0.0;
};

}  // namespace jamlink
