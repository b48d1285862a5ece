#include <doctest.h>

#include <cmath>

#include "jamlink/contention.hpp"
#include "jamlink/link_sim.hpp"
#include "jamlink/packet_queue.hpp"

using namespace jamlink;

namespace {

// Desk-sized baseline: clean short link, no jammer, no fading.
SimParams base_params() {
  SimParams p;
  p.seed = 11;
  p.sim_time_us = from_seconds(1.0);
  p.arrival_rate_pps = 6000;
  p.queue_capacity = 500;
  p.distance_m = 5.0;
  p.n_jammers = 0;
  p.channel.fading_enabled = false;
  p.battery_capacity_j = 10.0;
  return p;
}

}  // namespace

TEST_CASE("packet queue: fifo order, overflow, age eviction") {
  PacketQueue q(3, 1000);
  CHECK(q.push(10));
  CHECK(q.push(20));
  CHECK(q.push(30));
  CHECK_FALSE(q.push(40));  // full
  CHECK(q.size() == 3);
  CHECK(q.pop_front().arrival_us == 10);
  CHECK(q.pop_front().arrival_us == 20);

  CHECK(q.push(2000));
  // Packet from t=30 is now older than max_delay at t=1500.
  CHECK(q.evict_expired(1500) == 1);
  CHECK(q.front().arrival_us == 2000);
}

TEST_CASE("contention window ladder: doubles on failure, resets on success") {
  Contention c;
  CHECK(c.cw() == 15);
  int expected[] = {31, 63, 127, 255, 511, 1023, 1023};
  for (int i = 0; i < 7; ++i) {
    c.on_failure();
    CHECK(c.cw() == expected[i]);
  }
  CHECK(c.cw() == 1023);  // pinned after repeated failures
  c.on_success();
  CHECK(c.cw() == 15);
}

TEST_CASE("backoff draws: in range, uniform mean") {
  Contention c;
  RngStream rng(5, Stream::kBackoff);
  for (int i = 0; i < 1000; ++i) {
    const int b = c.draw_backoff(rng);
    CHECK(b >= 0);
    CHECK(b <= 15);
  }
  for (int i = 0; i < 6; ++i) c.on_failure();
  CHECK(c.cw() == 1023);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const int b = c.draw_backoff(rng);
    CHECK(b >= 0);
    CHECK(b <= 1023);
    sum += b;
  }
  CHECK(sum / n == doctest::Approx(511.5).epsilon(0.02));
}

TEST_CASE("arrivals: deterministic spacing fills the queue when idle") {
  // An empty battery keeps the radio silent; arrivals still queue.
  SimParams p = base_params();
  p.arrival_rate_pps = 60000;
  p.battery_capacity_j = 0.0;
  p.queue_capacity = 5000;
  LinkSimulator sim(p);
  const EpochOutcome out = sim.run_epoch(ControlAction{10, 9});
  CHECK(out.arrived == 300);  // 60000/s x 5 ms
  CHECK(out.delivered == 0);
  CHECK(out.battery_depleted);
  CHECK(out.queue_len == 300);
  CHECK(out.dropped == 0);
}

TEST_CASE("arrivals: zero rate leaves the queue unchanged") {
  SimParams p = base_params();
  p.arrival_rate_pps = 0;
  LinkSimulator sim(p);
  const EpochOutcome out = sim.run_epoch(ControlAction{10, 9});
  CHECK(out.arrived == 0);
  CHECK(out.queue_len == 0);
}

TEST_CASE("arrivals beyond capacity are dropped") {
  SimParams p = base_params();
  p.arrival_rate_pps = 60000;
  p.battery_capacity_j = 0.0;
  p.queue_capacity = 100;
  LinkSimulator sim(p);
  const EpochOutcome out = sim.run_epoch(ControlAction{10, 9});
  CHECK(out.arrived == 300);
  CHECK(out.queue_len == 100);
  CHECK(out.dropped == 200);
}

TEST_CASE("stale packets are evicted as drops") {
  SimParams p = base_params();
  p.arrival_rate_pps = 10000;
  p.battery_capacity_j = 0.0;
  p.queue_max_delay_us = 10'000;
  LinkSimulator sim(p);
  long dropped = 0;
  for (int i = 0; i < 10; ++i) {
    dropped += sim.run_epoch(ControlAction{10, 9}).dropped;
  }
  // 50 ms of arrivals at 10k/s with a 10 ms deadline: most get evicted.
  CHECK(dropped > 100);
  const auto& t = sim.totals();
  CHECK(t.arrived ==
        t.delivered + t.dropped + static_cast<long>(sim.queue_len()));
}

TEST_CASE("clean channel: near-perfect delivery, cw pinned at minimum") {
  SimParams p = base_params();
  p.distance_m = 1.0;  // ~16 dB of margin over the MCS9 sensitivity point
  LinkSimulator sim(p);
  for (int i = 0; i < 200; ++i) {
    const EpochOutcome out = sim.run_epoch(ControlAction{10, 9});
    // Per-epoch payload throughput can never exceed the PHY rate.
    const double mbps = out.delivered * 1472 * 8.0 / kEpochUs;
    CHECK(mbps <= mcs_table()[9].phy_rate_mbps);
    CHECK(out.cw == 15);
  }
  const auto& t = sim.totals();
  CHECK(t.arrived == 6000);
  CHECK(t.dropped == 0);
  const double ratio = static_cast<double>(t.delivered) /
                       static_cast<double>(t.delivered + t.dropped);
  CHECK(ratio >= 0.999);
  CHECK(sim.last_ack());
}

TEST_CASE("always-on jammer overwhelms the link: failures climb the ladder") {
  SimParams p = base_params();
  p.n_jammers = 1;
  p.jammer.duty_cycle = 1.0;
  p.jammer.tx_power_dbm = 10.0;
  p.distance_m = 10.0;  // signal and jammer arrive at equal power: SINR ~ 0 dB
  LinkSimulator sim(p);
  EpochOutcome out{};
  for (int i = 0; i < 40; ++i) out = sim.run_epoch(ControlAction{10, 9});
  CHECK(out.cw == 1023);
  CHECK_FALSE(out.last_ack);
  CHECK(sim.totals().delivered == 0);
  CHECK(sim.totals().dropped > 0);  // retry exhaustion
}

TEST_CASE("jammed failures climb the ladder and redraw within the new cw") {
  SimParams p = base_params();
  p.arrival_rate_pps = 1000;
  p.n_jammers = 1;
  p.jammer.duty_cycle = 1.0;
  p.distance_m = 10.0;
  LinkSimulator sim(p);
  EpochOutcome out = sim.run_epoch(ControlAction{10, 9});
  int guard = 0;
  while (out.mpdus_attempted == 0 && ++guard < 10) {
    out = sim.run_epoch(ControlAction{10, 9});
  }
  CHECK(out.cw > 15);
  CHECK_FALSE(out.last_ack);
  CHECK(out.last_backoff <= out.cw);
  CHECK(out.delivered == 0);
}

TEST_CASE("epoch clock advances exactly 5 ms") {
  SimParams p = base_params();
  LinkSimulator sim(p);
  CHECK(sim.now() == 0);
  sim.run_epoch(ControlAction{10, 9});
  CHECK(sim.now() == 5000);
  sim.run_epoch(ControlAction{10, 9});
  CHECK(sim.now() == 10000);
}

TEST_CASE("packet conservation holds at teardown") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SimParams p = base_params();
    p.seed = seed;
    p.arrival_rate_pps = 30000 + seed * 5000;
    p.n_jammers = static_cast<int>(seed % 3);
    p.channel.fading_enabled = true;
    LinkSimulator sim(p);
    for (int i = 0; i < 100; ++i) {
      sim.run_epoch(ControlAction{static_cast<int>(seed % 10) + 1,
                                  static_cast<int>((seed + i) % 10)});
    }
    const auto& t = sim.totals();
    CHECK(t.arrived ==
          t.delivered + t.dropped + static_cast<long>(sim.queue_len()));
  }
}

TEST_CASE("identical seeds give identical epoch traces") {
  SimParams p = base_params();
  p.n_jammers = 1;
  p.channel.fading_enabled = true;
  LinkSimulator a(p);
  LinkSimulator b(p);
  for (int i = 0; i < 50; ++i) {
    const ControlAction act{(i % 10) + 1, (i * 3) % 10};
    const EpochOutcome oa = a.run_epoch(act);
    const EpochOutcome ob = b.run_epoch(act);
    CHECK(oa.delivered == ob.delivered);
    CHECK(oa.dropped == ob.dropped);
    CHECK(oa.energy_j == ob.energy_j);
    CHECK(oa.cw == ob.cw);
    CHECK(oa.last_backoff == ob.last_backoff);
  }
}

TEST_CASE("carrier sensing (when enabled) defers instead of failing") {
  SimParams p = base_params();
  p.n_jammers = 1;
  p.jammer.duty_cycle = 1.0;
  p.channel.carrier_sense_interference = true;
  LinkSimulator sim(p);
  for (int i = 0; i < 20; ++i) sim.run_epoch(ControlAction{10, 9});
  // The station hears the jammer above CCA and never transmits into it.
  CHECK(sim.totals().delivered == 0);
  CHECK(sim.contention().cw() == 15);
}
