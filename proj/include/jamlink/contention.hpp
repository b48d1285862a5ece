#pragma once

#include <array>

#include "jamlink/rng.hpp"

namespace jamlink {

// DCF contention window ladder for Best Effort: doubles on failure up to
// 1023, resets to 15 on success.
inline constexpr std::array<int, 7> kCwLadder{15, 31, 63, 127, 255, 511, 1023};

class Contention {
 public:
  int cw() const { return kCwLadder[static_cast<std::size_t>(index_)]; }
  int cw_index() const { return index_; }
  int last_backoff() const { return last_backoff_; }

  // Uniform slot count in [0, cw], inclusive.
  int draw_backoff(RngStream& rng) {
    last_backoff_ = static_cast<int>(
        rng.uniform_int(0, static_cast<std::uint32_t>(cw())));
    return last_backoff_;
  }

  void on_success() { index_ = 0; }
  void on_failure() {
    if (index_ + 1 < static_cast<int>(kCwLadder.size())) ++index_;
  }

 private:
  int index_ = 0;
  int last_backoff_ = 0;
};

}  // namespace jamlink
