#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "jamlink/time.hpp"

namespace jamlink {

// Discrete-event scheduler with an integer-microsecond clock. Events fire in
// timestamp order; ties fire in insertion order.
class EventQueue {
 public:
  using Handler = std::function<void()>;

  Micros now() const { return now_; }

  // Schedules fn at absolute time `at`. Rejects events in the past.
  void schedule(Micros at, Handler fn);

  // Fires every event with timestamp <= until, then advances the clock to
  // `until`.
  void run_until(Micros until);

  bool empty() const { return heap_.empty(); }
  std::size_t pending() const { return heap_.size(); }

 private:
  struct Entry {
    Micros at;
    std::uint64_t seq;
    Handler fn;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  Micros now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
};

}  // namespace jamlink
