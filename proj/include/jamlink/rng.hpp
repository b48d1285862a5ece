#pragma once

#include <cstdint>
#include <random>

namespace jamlink {

// Purpose-labelled random streams. Keeping draws on separate streams means
// e.g. agent exploration randomness does not perturb channel or backoff
// draws between otherwise identical runs.
enum class Stream : std::uint64_t {
  kTraffic = 1,
  kChannel = 2,
  kBackoff = 3,
  kJammer = 4,
  kAgent = 5,
  kMobility = 6,
};

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent sub-seed from (base, salt).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

// One independent random stream: same (seed, stream) reproduces the same
// draw sequence.
class RngStream {
 public:
  RngStream(std::uint64_t seed, Stream stream)
      : engine_(derive_seed(seed, static_cast<std::uint64_t>(stream))) {}

  // Uniform in [0, 1).
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  // Uniform integer in [lo, hi], inclusive.
  std::uint32_t uniform_int(std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(engine_);
  }

  double exponential(double mean) {
    return std::exponential_distribution<double>(1.0 / mean)(engine_);
  }

  double gamma(double shape, double scale) {
    return std::gamma_distribution<double>(shape, scale)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jamlink
