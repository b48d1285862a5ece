#pragma once

#include <cstddef>

namespace jamlink {

inline constexpr int kActionCount = 100;
inline constexpr int kStateCount = 179200;  // 10 x 7 x 128 x 2 x 10

// Joint control decision: transmit power (1..10 dBm, integer) and VHT MCS
// index (0..9). Flattened as (power - 1) * 10 + mcs.
struct ControlAction {
  int power_dbm = 1;
  int mcs = 0;

  int index() const;
  static ControlAction from_index(int index);

  bool operator==(const ControlAction&) const = default;
};

// Discretized link state as seen by the agent at each epoch boundary.
//   n_t : queue occupancy bucket, multiples of 10 in [10, 100]
//   c_w : contention window index, 0..6 for {15, ..., 1023}
//   b_fs: backoff slots / 8, 0..127
//   r_p : 1 iff the last transmission was acknowledged
//   b_l : battery bucket, multiples of 10 in [10, 100]
struct StateObservation {
  int n_t = 10;
  int c_w_index = 0;
  int b_fs = 0;
  int r_p = 0;
  int b_l = 100;

  bool operator==(const StateObservation&) const = default;
};

// Backoff slot discretization: integer division by 8.
int discretize_backoff(int backoff_slots);

// Queue occupancy bucket: ceil(len / capacity * 10) * 10, clamped to
// [10, 100]. An empty queue reports the floor bucket.
int queue_occupancy_bucket(std::size_t len, std::size_t capacity);

// Mixed-radix encoding over the 179,200-state grid; bijective.
int state_index(const StateObservation& s);
StateObservation state_from_index(int index);

}  // namespace jamlink
