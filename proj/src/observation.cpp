#include "jamlink/observation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jamlink {

int ControlAction::index() const { return (power_dbm - 1) * 10 + mcs; }

ControlAction ControlAction::from_index(int index) {
  if (index < 0 || index >= kActionCount) {
    throw std::out_of_range("ControlAction::from_index: index out of range");
  }
  return ControlAction{index / 10 + 1, index % 10};
}

int discretize_backoff(int backoff_slots) {
  if (backoff_slots < 0 || backoff_slots > 1023) {
    throw std::out_of_range("discretize_backoff: slots outside 0..1023");
  }
  return backoff_slots / 8;
}

int queue_occupancy_bucket(std::size_t len, std::size_t capacity) {
  const double occupancy =
      static_cast<double>(len) / static_cast<double>(capacity);
  const int bucket = static_cast<int>(std::ceil(occupancy * 10.0)) * 10;
  return std::clamp(bucket, 10, 100);
}

int state_index(const StateObservation& s) {
  const int n_idx = s.n_t / 10 - 1;
  const int b_idx = s.b_l / 10 - 1;
  if (n_idx < 0 || n_idx > 9 || s.c_w_index < 0 || s.c_w_index > 6 ||
      s.b_fs < 0 || s.b_fs > 127 || s.r_p < 0 || s.r_p > 1 || b_idx < 0 ||
      b_idx > 9) {
    throw std::out_of_range("state_index: observation out of range");
  }
  return (((n_idx * 7 + s.c_w_index) * 128 + s.b_fs) * 2 + s.r_p) * 10 + b_idx;
}

StateObservation state_from_index(int index) {
  if (index < 0 || index >= kStateCount) {
    throw std::out_of_range("state_from_index: index out of range");
  }
  StateObservation s;
  s.b_l = (index % 10 + 1) * 10;
  index /= 10;
  s.r_p = index % 2;
  index /= 2;
  s.b_fs = index % 128;
  index /= 128;
  s.c_w_index = index % 7;
  index /= 7;
  s.n_t = (index + 1) * 10;
  return s;
}

}  // namespace jamlink
