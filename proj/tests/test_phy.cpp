#include <doctest.h>

#include <cmath>
#include <vector>

#include "jamlink/channel.hpp"
#include "jamlink/mcs.hpp"
#include "jamlink/rng.hpp"

using namespace jamlink;

TEST_CASE("mcs table: endpoints, monotonicity, subcarrier derivation") {
  const auto& table = mcs_table();
  CHECK(table[0].phy_rate_mbps == doctest::Approx(58.5));
  CHECK(table[9].phy_rate_mbps == doctest::Approx(780.0));
  for (int i = 0; i < kNumMcs; ++i) {
    // 468 data subcarriers, 4 us symbol at 800 ns GI.
    const double derived =
        468.0 * table[i].bits_per_symbol * table[i].coding_rate / 4.0;
    CHECK(table[i].phy_rate_mbps == doctest::Approx(derived).epsilon(1e-9));
    if (i > 0) {
      CHECK(table[i].phy_rate_mbps > table[i - 1].phy_rate_mbps);
      CHECK(table[i].min_sinr_db > table[i - 1].min_sinr_db);
    }
  }
}

TEST_CASE("friis received power") {
  ChannelParams ch;
  CHECK(rx_power_dbm(ch, 10.0, 10.0) == doctest::Approx(-56.77).epsilon(1e-3));
  CHECK(rx_power_dbm(ch, 10.0, 20.0) == doctest::Approx(-62.79).epsilon(1e-3));
  // 3 dB more transmit power raises the result by exactly 3 dB.
  CHECK(rx_power_dbm(ch, 13.0, 17.3) - rx_power_dbm(ch, 10.0, 17.3) ==
        doctest::Approx(3.0).epsilon(1e-12));
  // Strictly decreasing in distance.
  double prev = rx_power_dbm(ch, 10.0, 0.5);
  for (double d = 1.0; d < 100.0; d += 0.7) {
    const double now = rx_power_dbm(ch, 10.0, d);
    CHECK(now < prev);
    prev = now;
  }
  // Clamped below 0.1 m.
  CHECK(rx_power_dbm(ch, 10.0, 0.0) == rx_power_dbm(ch, 10.0, 0.1));
}

TEST_CASE("noise floor and sinr") {
  ChannelParams ch;
  const double noise = noise_floor_dbm(ch);
  CHECK(noise == doctest::Approx(-84.9588).epsilon(1e-4));

  CHECK(sinr_db(-50.0, {}, noise) == doctest::Approx(34.96).epsilon(1e-3));

  const std::vector<double> one{-50.0};
  CHECK(sinr_db(-50.0, one, -200.0) == doctest::Approx(0.0).epsilon(1e-9));

  // Two half-power interferers sum to equal power in the mW domain.
  const std::vector<double> two{-53.0103, -53.0103};
  CHECK(sinr_db(-50.0, two, -200.0) == doctest::Approx(0.0).epsilon(1e-4));
}

TEST_CASE("per: sensitivity anchors and tails") {
  ChannelParams ch;
  const double bits = 12096.0;
  for (int m = 0; m < kNumMcs; ++m) {
    const double at = ch.min_sinr_db[m];
    // min_sinr is the ~10% PER point for a full-size MPDU.
    CHECK(per(at, m, bits, ch) == doctest::Approx(0.1).epsilon(0.02));
    CHECK(per(at + 20.0, m, bits, ch) < 1e-3);
    CHECK(per(at - 20.0, m, bits, ch) > 0.999);
  }
}

TEST_CASE("per: monotone in sinr, mcs and frame size") {
  ChannelParams ch;
  for (int m = 0; m < kNumMcs; ++m) {
    double prev = 1.0;
    for (double s = -20.0; s <= 60.0; s += 0.5) {
      const double p = per(s, m, 12096.0, ch);
      CHECK(p <= prev + 1e-15);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      prev = p;
    }
  }
  for (double s = -10.0; s <= 50.0; s += 2.5) {
    for (int m = 1; m < kNumMcs; ++m) {
      CHECK(per(s, m, 12096.0, ch) >= per(s, m - 1, 12096.0, ch) - 1e-15);
    }
    CHECK(per(s, 9, 12096.0, ch) >= per(s, 0, 12096.0, ch) - 1e-15);
    for (double bits : {100.0, 1000.0, 10000.0}) {
      CHECK(per(s, 4, bits * 10, ch) >= per(s, 4, bits, ch) - 1e-15);
    }
  }
}

TEST_CASE("nakagami power factor has unit mean") {
  RngStream rng(3, Stream::kChannel);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += nakagami_power_draw(rng, 1.5);
  CHECK(sum / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("airtime: single mpdu, full aggregate, rate ratio") {
  ChannelParams ch;
  FrameSpec one{1472, 1, 9, 10.0};
  // (1512 * 8) / 780 ~= 15.5 us payload plus the preamble.
  CHECK(airtime_us(one, ch) == 44 + 16);

  FrameSpec full{1472, 64, 9, 10.0};
  CHECK(airtime_us(full, ch) == 44 + 993);  // 64 * 1512 * 8 / 780 = 992.5

  FrameSpec slow{1472, 64, 0, 10.0};
  const double payload_ratio =
      static_cast<double>(airtime_us(slow, ch) - ch.preamble_us) /
      static_cast<double>(airtime_us(full, ch) - ch.preamble_us);
  CHECK(payload_ratio == doctest::Approx(780.0 / 58.5).epsilon(1e-3));
}
