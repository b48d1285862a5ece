#pragma once

#include <array>

#include "jamlink/mcs.hpp"
#include "jamlink/observation.hpp"
#include "jamlink/rng.hpp"
#include "jamlink/time.hpp"

namespace jamlink {

struct MinstrelParams {
  double lookaround = 0.10;  // fraction of decisions spent sampling
  Micros update_interval_us = 100'000;
  double ewma_weight = 0.25;  // weight of the newest window
  double prob_floor = 0.1;    // below this a rate is considered unusable
  int power_dbm = 10;
};

// Simplified Minstrel-style rate adaptation: tracks an EWMA success
// probability per rate, picks the rate with the best probability-weighted
// throughput, and spends a fraction of decisions sampling other rates.
// Transmit power stays fixed.
class MinstrelPolicy {
 public:
  explicit MinstrelPolicy(const MinstrelParams& params = {});

  // Rate decision for the next transmission opportunity.
  ControlAction decide(RngStream& rng);

  // Feedback from a transmission at `mcs`.
  void record(int mcs, long attempts, long successes);

  // Folds window counters into the EWMA stats once per update interval.
  void advance_to(Micros now);

  double probability(int mcs) const { return prob_[mcs]; }
  double estimated_throughput(int mcs) const;
  int best_rate() const;

  // EWMA fold of one window: w * ratio + (1 - w) * old.
  static double ewma(double old_prob, double window_ratio, double weight);

 private:
  MinstrelParams params_;
  std::array<double, kNumMcs> prob_;
  std::array<long, kNumMcs> window_attempts_{};
  std::array<long, kNumMcs> window_successes_{};
  Micros next_update_us_;
  int sample_rate_ = 0;  // round-robin cursor over non-best rates
};

}  // namespace jamlink
