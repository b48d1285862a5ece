#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jamlink/config.hpp"
#include "jamlink/env.hpp"
#include "jamlink/qtable.hpp"

namespace jamlink {

// One row of the per-episode training log.
struct EpisodeRecord {
  int episode = 0;
  double total_reward = 0.0;
  double throughput_mbps = 0.0;
  double energy_j = 0.0;
  double loss_pct = 0.0;
  double epsilon = 0.0;
  Terminal terminal = Terminal::kNone;
};

struct TrainOutput {
  QTable qtable;
  std::vector<EpisodeRecord> records;
};

// One averaged sweep point of a test run.
struct TestRow {
  std::string controller;
  std::uint64_t arrival_rate_pps = 0;
  double distance_m = 0.0;
  int jammers = 0;
  int episodes = 0;
  double throughput_mbps = 0.0;
  double energy_j = 0.0;
  double loss_pct = 0.0;
};

using ProgressFn = std::function<void(int done, int total)>;

// Runs the on-policy training loop for the configured episode count.
// Episodes cycle through the configured distance/arrival-rate lists.
TrainOutput train(const ExperimentConfig& config, ProgressFn progress = {});

// Runs the greedy/baseline test sweep: for every arrival rate x distance,
// averages `test_episodes` episodes without training terminals. `qtable`
// is required for the sarsa controller and ignored otherwise.
std::vector<TestRow> run_test(const ExperimentConfig& config,
                              const QTable* qtable, ProgressFn progress = {});

void write_training_csv(const std::vector<EpisodeRecord>& records,
                        const std::string& path);
void write_test_csv(const std::vector<TestRow>& rows, const std::string& path);

// Reshapes a training or test CSV into a columnar x/series file for a named
// figure: reward-vs-episode, throughput-vs-episode, energy-vs-episode,
// loss-vs-episode, throughput-vs-rate, energy-vs-rate.
void emit_plotdata(const std::string& csv_path, const std::string& figure_id,
                   const std::string& out_path);

// Fixed 6-significant-digit, locale-independent number formatting.
std::string format_number(double v);

}  // namespace jamlink
