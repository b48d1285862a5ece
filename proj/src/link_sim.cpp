#include "jamlink/link_sim.hpp"

#include <algorithm>
#include <cmath>

namespace jamlink {

LinkSimulator::LinkSimulator(const SimParams& params)
    : params_(params),
      queue_(params.queue_capacity, params.queue_max_delay_us),
      energy_(params.energy, params.battery_capacity_j),
      channel_rng_(params.seed, Stream::kChannel),
      backoff_rng_(params.seed, Stream::kBackoff),
      mobility_rng_(params.seed, Stream::kMobility) {
  world_.add_node(kTxNode, 0.0, 0.0);
  world_.add_node(kRxNode, params.distance_m, 0.0,
                  params.rx_random_walk ? MobilityModel::kRandomWalk
                                        : MobilityModel::kConstant);

  RngStream jammer_rng(params.seed, Stream::kJammer);
  const Micros horizon = params.sim_time_us + kEpochUs;
  for (int i = 0; i < params.n_jammers; ++i) {
    // Jammers sit at the configured offset from the receiver, one per side.
    const double side = (i % 2 == 0) ? 1.0 : -1.0;
    const int id = kFirstJammerNode + i;
    world_.add_node(id, params.distance_m, side * params.jammer.distance_m);
    jammers_.push_back(JammerNode{
        id, params.jammer,
        JammerSchedule::materialize(params.jammer, horizon, jammer_rng)});
  }

  noise_floor_dbm_ = noise_floor_dbm(params.channel);
  bits_per_mpdu_ =
      8.0 * (params.payload_bytes + params.channel.mpdu_overhead_bytes);

  if (params.rx_random_walk) {
    schedule_mobility_step(params.walk.interval_us);
  }
}

EpochOutcome LinkSimulator::run_epoch(ControlAction action) {
  action_ = action;
  epoch_ = EpochOutcome{};
  epoch_energy_j_ = 0.0;

  const Micros start = events_.now();
  epoch_end_ = start + kEpochUs;
  schedule_arrivals(start, epoch_end_);
  kick();
  events_.run_until(epoch_end_);
  accrue_radio(epoch_end_);

  epoch_.queue_len = queue_.size();
  epoch_.energy_j = epoch_energy_j_;
  epoch_.last_ack = last_ack_;
  epoch_.cw = contention_.cw();
  epoch_.last_backoff = contention_.last_backoff();
  epoch_.battery_bucket = energy_.level_bucket();
  epoch_.battery_depleted = energy_.depleted();
  return epoch_;
}

void LinkSimulator::schedule_arrivals(Micros start, Micros end) {
  const std::uint64_t rate = params_.arrival_rate_pps;
  if (rate == 0) return;
  // Deterministic spacing: arrival k (1-based) lands at ceil(k * 1e6 / rate),
  // so exactly floor(rate * t / 1e6) arrivals have happened by time t.
  const std::uint64_t before =
      rate * static_cast<std::uint64_t>(start) / 1'000'000ull;
  const std::uint64_t upto =
      rate * static_cast<std::uint64_t>(end) / 1'000'000ull;
  for (std::uint64_t k = before + 1; k <= upto; ++k) {
    const Micros at =
        static_cast<Micros>((k * 1'000'000ull + rate - 1) / rate);
    events_.schedule(at, [this] { on_arrival(); });
  }
}

void LinkSimulator::schedule_mobility_step(Micros at) {
  events_.schedule(at, [this] {
    world_.step_walkers(params_.walk, mobility_rng_);
    schedule_mobility_step(events_.now() + params_.walk.interval_us);
  });
}

void LinkSimulator::on_arrival() {
  ++totals_.arrived;
  ++epoch_.arrived;
  drop_expired();
  if (!queue_.push(events_.now())) {
    ++totals_.dropped;
    ++epoch_.dropped;
  }
  kick();
}

void LinkSimulator::kick() {
  if (phase_ != MacPhase::kIdle || energy_.depleted()) return;
  drop_expired();
  if (queue_.empty()) return;
  phase_ = MacPhase::kWaiting;
  const int slots = contention_.draw_backoff(backoff_rng_);
  const Micros wake =
      events_.now() + params_.mac.difs_us + slots * params_.mac.slot_us;
  events_.schedule(wake, [this] { on_contention_done(); });
}

void LinkSimulator::on_contention_done() {
  if (energy_.depleted()) {
    phase_ = MacPhase::kIdle;
    set_radio(RadioState::kIdle);
    return;
  }
  if (params_.channel.carrier_sense_interference) {
    // Defer while interferer energy at the transmitter exceeds the CCA
    // threshold; resume one DIFS after the latest overlapping burst ends.
    const Micros now = events_.now();
    Micros resume = now;
    for (const auto& j : jammers_) {
      if (!j.schedule.active_at(now)) continue;
      const double at_tx =
          rx_power_dbm(params_.channel, j.config.tx_power_dbm,
                       world_.distance(j.node_id, kTxNode));
      if (at_tx >= params_.channel.cca_threshold_dbm) {
        resume = std::max(resume, j.schedule.burst_end_after(now));
      }
    }
    if (resume > now) {
      set_radio(RadioState::kBusy);
      events_.schedule(resume + params_.mac.difs_us,
                       [this] { on_contention_done(); });
      return;
    }
  }
  start_frame(false);
}

void LinkSimulator::start_frame(bool chained) {
  (void)chained;
  drop_expired();
  if (queue_.empty() || energy_.depleted()) {
    phase_ = MacPhase::kIdle;
    set_radio(RadioState::kIdle);
    return;
  }
  const Micros now = events_.now();
  const auto& mcs = mcs_table()[static_cast<std::size_t>(action_.mcs)];

  // Size the aggregate so the frame and its ack complete inside the epoch;
  // the control decision must not leak across epoch boundaries.
  const Micros budget = epoch_end_ - now - params_.channel.preamble_us -
                        params_.mac.sifs_us - params_.mac.ack_us;
  if (budget <= 0) {
    phase_ = MacPhase::kIdle;
    set_radio(RadioState::kIdle);
    return;
  }
  const int n_fit = static_cast<int>(
      static_cast<double>(budget) * mcs.phy_rate_mbps / bits_per_mpdu_);
  const int n = std::min({params_.mac.max_aggregation,
                          static_cast<int>(queue_.size()), n_fit});
  if (n <= 0) {
    phase_ = MacPhase::kIdle;
    set_radio(RadioState::kIdle);
    return;
  }

  inflight_.clear();
  inflight_ok_.clear();
  for (int i = 0; i < n; ++i) inflight_.push_back(queue_.pop_front());

  const FrameSpec frame{params_.payload_bytes, n, action_.mcs,
                        static_cast<double>(action_.power_dbm)};
  const Micros duration = airtime_us(frame, params_.channel);

  // One fading draw per PPDU; each MPDU sees the interferers overlapping its
  // own slice of the payload, so bursts corrupt only what they cover.
  std::optional<double> fading;
  if (params_.channel.fading_enabled) {
    fading = nakagami_power_draw(channel_rng_, params_.channel.nakagami_m);
  }
  const double signal_dbm =
      rx_power_dbm(params_.channel, frame.tx_power_dbm,
                   world_.distance(kTxNode, kRxNode), fading);
  const Micros data_start = now + params_.channel.preamble_us;
  const Micros data_len = duration - params_.channel.preamble_us;
  for (int i = 0; i < n; ++i) {
    const Micros a = data_start + data_len * i / n;
    const Micros b = data_start + data_len * (i + 1) / n;
    const std::vector<double> interferers = interference_over(
        jammers_, a, std::max(b, a + 1), world_, kRxNode, params_.channel);
    const double s = sinr_db(signal_dbm, interferers, noise_floor_dbm_);
    const double p_err = per(s, action_.mcs, bits_per_mpdu_, params_.channel);
    inflight_ok_.push_back(channel_rng_.uniform() >= p_err);
  }
  epoch_.mpdus_attempted += n;

  phase_ = MacPhase::kTransmitting;
  set_radio(RadioState::kTx, frame.tx_power_dbm);
  events_.schedule(now + duration, [this] { on_tx_end(); });
}

void LinkSimulator::on_tx_end() {
  const bool any_ok =
      std::find(inflight_ok_.begin(), inflight_ok_.end(), true) !=
      inflight_ok_.end();
  set_radio(RadioState::kIdle);
  phase_ = MacPhase::kAcking;
  const Micros now = events_.now();
  if (any_ok) {
    // Block-ack comes back after SIFS; receiving it costs rx current.
    events_.schedule(now + params_.mac.sifs_us,
                     [this] { set_radio(RadioState::kRx); });
  }
  events_.schedule(now + params_.mac.sifs_us + params_.mac.ack_us,
                   [this] { on_ack_done(); });
}

void LinkSimulator::on_ack_done() {
  set_radio(RadioState::kIdle);
  bool any_ok = false;
  std::vector<QueuedPacket> survivors;
  for (std::size_t i = 0; i < inflight_.size(); ++i) {
    if (inflight_ok_[i]) {
      any_ok = true;
      ++epoch_.delivered;
      ++totals_.delivered;
    } else {
      QueuedPacket pkt = inflight_[i];
      ++pkt.retries;
      if (pkt.retries > params_.mac.retry_limit) {
        ++epoch_.dropped;
        ++totals_.dropped;
      } else {
        survivors.push_back(pkt);
        ++epoch_.retransmissions;
        ++totals_.retransmissions;
      }
    }
  }
  // Failed MPDUs go back to the head in their original order.
  for (auto it = survivors.rbegin(); it != survivors.rend(); ++it) {
    queue_.push_front(*it);
  }
  inflight_.clear();
  inflight_ok_.clear();

  last_ack_ = any_ok;
  if (any_ok) {
    contention_.on_success();
  } else {
    contention_.on_failure();
  }

  phase_ = MacPhase::kIdle;
  drop_expired();
  if (queue_.empty() || energy_.depleted()) return;
  if (any_ok) {
    // Keep the TXOP: the next aggregate follows after SIFS without a fresh
    // contention round. The epoch budget still caps the burst.
    phase_ = MacPhase::kWaiting;
    events_.schedule(events_.now() + params_.mac.sifs_us,
                     [this] { start_frame(true); });
  } else {
    kick();
  }
}

void LinkSimulator::drop_expired() {
  const std::size_t evicted = queue_.evict_expired(events_.now());
  epoch_.dropped += static_cast<long>(evicted);
  totals_.dropped += static_cast<long>(evicted);
}

void LinkSimulator::set_radio(RadioState state, double tx_power_dbm) {
  accrue_radio(events_.now());
  radio_state_ = state;
  radio_tx_power_ = tx_power_dbm;
}

void LinkSimulator::accrue_radio(Micros until) {
  if (until > radio_since_) {
    epoch_energy_j_ +=
        energy_.accrue(radio_state_, until - radio_since_, radio_tx_power_);
    radio_since_ = until;
  }
}

}  // namespace jamlink
