#include "jamlink/minstrel.hpp"

namespace jamlink {

MinstrelPolicy::MinstrelPolicy(const MinstrelParams& params)
    : params_(params), next_update_us_(params.update_interval_us) {
  // Optimistic start: every rate looks usable until probed.
  prob_.fill(1.0);
}

double MinstrelPolicy::ewma(double old_prob, double window_ratio,
                            double weight) {
  return weight * window_ratio + (1.0 - weight) * old_prob;
}

double MinstrelPolicy::estimated_throughput(int mcs) const {
  if (prob_[mcs] < params_.prob_floor) return 0.0;
  return prob_[mcs] * mcs_table()[static_cast<std::size_t>(mcs)].phy_rate_mbps;
}

int MinstrelPolicy::best_rate() const {
  int best = -1;
  double best_tp = 0.0;
  for (int m = 0; m < kNumMcs; ++m) {
    const double tp = estimated_throughput(m);
    if (tp > best_tp) {
      best_tp = tp;
      best = m;
    }
  }
  // Every rate looks dead: fall back to the most robust one.
  return best < 0 ? 0 : best;
}

ControlAction MinstrelPolicy::decide(RngStream& rng) {
  const int best = best_rate();
  int mcs = best;
  if (rng.uniform() < params_.lookaround) {
    // Round-robin over the non-best rates.
    sample_rate_ = (sample_rate_ + 1) % kNumMcs;
    if (sample_rate_ == best) sample_rate_ = (sample_rate_ + 1) % kNumMcs;
    mcs = sample_rate_;
  }
  return ControlAction{params_.power_dbm, mcs};
}

void MinstrelPolicy::record(int mcs, long attempts, long successes) {
  window_attempts_[mcs] += attempts;
  window_successes_[mcs] += successes;
}

void MinstrelPolicy::advance_to(Micros now) {
  while (now >= next_update_us_) {
    for (int m = 0; m < kNumMcs; ++m) {
      if (window_attempts_[m] > 0) {
        const double ratio = static_cast<double>(window_successes_[m]) /
                             static_cast<double>(window_attempts_[m]);
        prob_[m] = ewma(prob_[m], ratio, params_.ewma_weight);
      }
      window_attempts_[m] = 0;
      window_successes_[m] = 0;
    }
    next_update_us_ += params_.update_interval_us;
  }
}

}  // namespace jamlink
