#include "jamlink/env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jamlink {

const char* terminal_name(Terminal t) {
  switch (t) {
    case Terminal::kNone:
      return "none";
    case Terminal::kBattery:
      return "battery";
    case Terminal::kLoss:
      return "loss";
  }
  return "none";
}

double reward(long r_p_count, double e_c_joules, double n_t_total,
              double e_t_total, double lambda) {
  if (n_t_total <= 0.0 || e_t_total <= 0.0) {
    throw std::invalid_argument("reward: totals must be positive");
  }
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("reward: lambda outside [0, 1]");
  }
  return lambda * (static_cast<double>(r_p_count) * 100.0 / n_t_total) +
         (1.0 - lambda) * (-1.0 * e_c_joules * 100.0 / e_t_total);
}

double throughput_mbps(long n_packets, int payload_bytes, double seconds) {
  if (seconds <= 0.0) {
    throw std::invalid_argument("throughput_mbps: time must be positive");
  }
  return static_cast<double>(n_packets) * payload_bytes * 8.0 /
         (seconds * 1e6);
}

LinkEnv::LinkEnv(const SimParams& sim_params, const RewardParams& reward_params,
                 bool terminals_enabled)
    : sim_params_(sim_params),
      reward_params_(reward_params),
      terminals_enabled_(terminals_enabled) {
  reset();
}

StateObservation LinkEnv::reset() { return reset(sim_params_.seed); }

StateObservation LinkEnv::reset(std::uint64_t seed) {
  sim_params_.seed = seed;
  sim_ = std::make_unique<LinkSimulator>(sim_params_);
  packets_total_ =
      std::max(1.0, static_cast<double>(sim_params_.arrival_rate_pps) *
                        to_seconds(sim_params_.sim_time_us));
  energy_total_j_ = reward_params_.energy_total == EnergyTotalRef::kCapacity
                        ? sim_params_.battery_capacity_j
                        : sim_->energy().remaining_j();
  max_epochs_ = static_cast<int>(sim_params_.sim_time_us / kEpochUs);
  epochs_ = 0;
  done_ = false;
  terminal_ = Terminal::kNone;
  episode_reward_ = 0.0;
  return observe();
}

StateObservation LinkEnv::observe() const {
  StateObservation s;
  s.n_t = queue_occupancy_bucket(sim_->queue_len(), sim_params_.queue_capacity);
  s.c_w_index = sim_->contention().cw_index();
  s.b_fs = discretize_backoff(sim_->contention().last_backoff());
  s.r_p = sim_->last_ack() ? 1 : 0;
  s.b_l = sim_->energy().level_bucket();
  return s;
}

StepResult LinkEnv::step(ControlAction action) {
  if (done_) {
    throw std::logic_error("LinkEnv::step: episode already ended");
  }
  StepResult result;
  result.info = sim_->run_epoch(action);
  ++epochs_;

  result.reward = reward(result.info.delivered, result.info.energy_j,
                         packets_total_, energy_total_j_,
                         reward_params_.lambda);
  episode_reward_ += result.reward;

  const auto& totals = sim_->totals();
  if (terminals_enabled_) {
    if (sim_->energy().remaining_fraction() < 0.10) {
      terminal_ = Terminal::kBattery;
    } else if (totals.arrived > 0 &&
               static_cast<double>(totals.dropped) >
                   0.05 * static_cast<double>(totals.arrived)) {
      terminal_ = Terminal::kLoss;
    }
  }
  done_ = terminal_ != Terminal::kNone || epochs_ >= max_epochs_ ||
          sim_->energy().depleted();
  result.terminal = terminal_;
  result.done = done_;
  result.next_state = observe();
  return result;
}

double LinkEnv::episode_energy_j() const { return sim_->energy().consumed_j(); }

double LinkEnv::episode_loss_pct() const {
  const auto& t = sim_->totals();
  if (t.arrived == 0) return 0.0;
  return 100.0 * static_cast<double>(t.dropped) /
         static_cast<double>(t.arrived);
}

double LinkEnv::episode_throughput_mbps() const {
  return throughput_mbps(sim_->totals().delivered, sim_params_.payload_bytes,
                         to_seconds(sim_params_.sim_time_us));
}

}  // namespace jamlink
