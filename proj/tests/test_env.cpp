#include <doctest.h>

#include <random>
#include <stdexcept>

#include "jamlink/env.hpp"
#include "jamlink/observation.hpp"

using namespace jamlink;

TEST_CASE("backoff discretization") {
  CHECK(discretize_backoff(0) == 0);
  CHECK(discretize_backoff(512) == 64);
  CHECK(discretize_backoff(1023) == 127);
  CHECK_THROWS_AS(discretize_backoff(-1), std::out_of_range);
  CHECK_THROWS_AS(discretize_backoff(1024), std::out_of_range);
}

TEST_CASE("queue occupancy buckets") {
  CHECK(queue_occupancy_bucket(2500, 5000) == 50);
  CHECK(queue_occupancy_bucket(0, 5000) == 10);     // floor bucket
  CHECK(queue_occupancy_bucket(5000, 5000) == 100);
  CHECK(queue_occupancy_bucket(1, 5000) == 10);
  CHECK(queue_occupancy_bucket(4999, 5000) == 100);
}

TEST_CASE("action flattening is a bijection over all 100 actions") {
  for (int i = 0; i < kActionCount; ++i) {
    const ControlAction a = ControlAction::from_index(i);
    CHECK(a.power_dbm >= 1);
    CHECK(a.power_dbm <= 10);
    CHECK(a.mcs >= 0);
    CHECK(a.mcs <= 9);
    CHECK(a.index() == i);
  }
  CHECK(ControlAction::from_index(37) == ControlAction{4, 7});
  CHECK_THROWS_AS(ControlAction::from_index(100), std::out_of_range);
}

TEST_CASE("state encoding: corners and exhaustive round-trip") {
  CHECK(state_index(StateObservation{10, 0, 0, 0, 10}) == 0);
  CHECK(state_index(StateObservation{100, 6, 127, 1, 100}) == kStateCount - 1);
  for (int i = 0; i < kStateCount; ++i) {
    CHECK(state_index(state_from_index(i)) == i);
  }
}

TEST_CASE("reward: extremes and worked example") {
  CHECK(reward(600, 0.123, 600.0, 5.0, 1.0) == doctest::Approx(100.0));
  CHECK(reward(0, 5.0, 600.0, 5.0, 0.0) == doctest::Approx(-100.0));
  CHECK(reward(300, 0.001, 600000.0, 5.0, 0.8) ==
        doctest::Approx(0.036).epsilon(1e-12));
  CHECK_THROWS_AS(reward(1, 1.0, 0.0, 5.0, 0.5), std::invalid_argument);
}

TEST_CASE("reward: bounds and monotonicity over random inputs") {
  std::mt19937 gen(1234);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double lambda = unit(gen);
    const double n_total = 1.0 + unit(gen) * 1e6;
    const double e_total = 0.1 + unit(gen) * 10.0;
    const long r_p = static_cast<long>(unit(gen) * n_total);
    const double e_c = unit(gen) * e_total;
    const double r = reward(r_p, e_c, n_total, e_total, lambda);
    CHECK(r <= lambda * 100.0 + 1e-9);
    CHECK(r >= -(1.0 - lambda) * 100.0 - 1e-9);
    // More energy never helps; more delivieries never hurt.
    CHECK(reward(r_p, e_c + 0.01, n_total, e_total, lambda) <= r + 1e-12);
    CHECK(reward(r_p + 1, e_c, n_total, e_total, lambda) >= r - 1e-12);
  }
}

TEST_CASE("throughput metric") {
  CHECK(throughput_mbps(0, 1472, 10.0) == 0.0);
  CHECK(throughput_mbps(10000, 1472, 10.0) == doctest::Approx(11.776));
  CHECK(throughput_mbps(594466, 1472, 10.0) ==
        doctest::Approx(700.0).epsilon(1e-3));
  CHECK_THROWS_AS(throughput_mbps(1, 1472, 0.0), std::invalid_argument);
}

namespace {

SimParams desk_params() {
  SimParams p;
  p.seed = 3;
  p.sim_time_us = from_seconds(1.0);
  p.arrival_rate_pps = 6000;
  p.queue_capacity = 500;
  p.distance_m = 5.0;
  p.n_jammers = 0;
  p.channel.fading_enabled = false;
  p.battery_capacity_j = 0.9;
  return p;
}

}  // namespace

TEST_CASE("healthy epoch: no terminal, reward within bounds") {
  LinkEnv env(desk_params(), RewardParams{0.8, EnergyTotalRef::kCapacity});
  const StepResult r = env.step(ControlAction{10, 9});
  CHECK(r.terminal == Terminal::kNone);
  CHECK_FALSE(r.done);
  CHECK(r.reward <= 0.8 * 100.0);
  CHECK(r.reward >= -0.2 * 100.0);
  CHECK(r.info.delivered > 0);
}

TEST_CASE("battery terminal fires below 10% remaining") {
  SimParams p = desk_params();
  // Battery sized so one epoch of idle-dominated draw burns past 90%.
  p.battery_capacity_j = 4.5e-3;
  LinkEnv env(p, RewardParams{0.8, EnergyTotalRef::kCapacity});
  const StepResult r = env.step(ControlAction{1, 0});
  CHECK(r.terminal == Terminal::kBattery);
  CHECK(r.done);
  CHECK_THROWS_AS(env.step(ControlAction{1, 0}), std::logic_error);
}

TEST_CASE("loss terminal fires above 5% cumulative drops") {
  SimParams p = desk_params();
  p.arrival_rate_pps = 60000;
  p.queue_capacity = 50;  // overflow quickly
  p.n_jammers = 1;
  p.jammer.duty_cycle = 1.0;
  p.distance_m = 10.0;
  LinkEnv env(p, RewardParams{0.8, EnergyTotalRef::kCapacity});
  StepResult r;
  int steps = 0;
  while (!env.done() && ++steps < 50) r = env.step(ControlAction{10, 9});
  CHECK(r.terminal == Terminal::kLoss);
  CHECK(env.episode_loss_pct() > 5.0);
}

TEST_CASE("episode ends cleanly at the configured horizon") {
  SimParams p = desk_params();
  p.sim_time_us = from_seconds(0.05);  // 10 epochs
  LinkEnv env(p, RewardParams{0.8, EnergyTotalRef::kCapacity});
  int steps = 0;
  while (!env.done()) {
    env.step(ControlAction{10, 9});
    ++steps;
  }
  CHECK(steps == 10);
  CHECK(env.terminal() == Terminal::kNone);
}

TEST_CASE("observation reflects the simulator state") {
  SimParams p = desk_params();
  p.arrival_rate_pps = 60000;
  p.queue_capacity = 5000;
  p.battery_capacity_j = 50.0;
  p.n_jammers = 1;
  p.jammer.duty_cycle = 1.0;  // nothing gets through: the queue only fills
  p.distance_m = 10.0;
  LinkEnv env(p, RewardParams{0.8, EnergyTotalRef::kCapacity}, false);
  const StateObservation s0 = env.observe();
  CHECK(s0.n_t == 10);
  CHECK(s0.c_w_index == 0);
  CHECK(s0.b_fs == 0);
  CHECK(s0.r_p == 0);
  CHECK(s0.b_l == 100);

  StateObservation s = s0;
  for (int i = 0; i < 42 && !env.done(); ++i) {
    s = env.step(ControlAction{10, 9}).next_state;
  }
  // 42 epochs x 300 arrivals fill the 5000-capacity queue; every
  // transmission fails, so the ack flag stays down and the ladder tops out.
  CHECK(s.n_t == 100);
  CHECK(s.r_p == 0);
  CHECK(s.c_w_index == 6);
}

TEST_CASE("terminals can be disabled for test-mode rollouts") {
  SimParams p = desk_params();
  p.arrival_rate_pps = 60000;
  p.queue_capacity = 50;
  p.n_jammers = 1;
  p.jammer.duty_cycle = 1.0;
  LinkEnv env(p, RewardParams{0.8, EnergyTotalRef::kCapacity},
              /*terminals_enabled=*/false);
  int steps = 0;
  while (!env.done() && steps < 500) {
    env.step(ControlAction{10, 9});
    ++steps;
  }
  CHECK(env.terminal() == Terminal::kNone);
  CHECK(env.episode_loss_pct() > 5.0);  // losses happen, episode keeps going
}
