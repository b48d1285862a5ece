#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jamlink/config.hpp"
#include "jamlink/experiment.hpp"
#include "jamlink/qtable.hpp"

namespace {

bool quiet_logging() {
  const char* level = std::getenv("JAMLINK_LOG");
  return level != nullptr && std::string(level) == "quiet";
}

jamlink::ProgressFn make_progress(const std::string& what) {
  if (quiet_logging()) return {};
  return [what](int done, int total) {
    if (done == total || done % 50 == 0) {
      std::cerr << what << ": " << done << "/" << total << "\n";
    }
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jamlink: a jammed 802.11ac link simulator with joint "
               "rate/power control"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed_override;
  std::string qtable_path = "qtable.bin";
  std::string csv_path;
  std::string figure_id;
  std::string out_path;

  auto* train_cmd = app.add_subcommand("train", "Train a SARSA agent");
  train_cmd->add_option("--config", config_path, "Experiment config file")
      ->required();
  train_cmd->add_option("--seed", seed_override, "Override the config seed");
  train_cmd->add_option("--out-qtable", qtable_path, "Q-table output path");
  std::string train_csv = "training.csv";
  train_cmd->add_option("--out-csv", train_csv, "Per-episode CSV output path");

  auto* test_cmd =
      app.add_subcommand("test", "Run the greedy/baseline test sweep");
  test_cmd->add_option("--config", config_path, "Experiment config file")
      ->required();
  std::string test_qtable;
  test_cmd->add_option("--qtable", test_qtable,
                       "Q-table file (required for the sarsa agent)");
  std::string test_csv = "results.csv";
  test_cmd->add_option("--out-csv", test_csv, "Results CSV output path");

  auto* plot_cmd =
      app.add_subcommand("plot", "Reshape a results CSV into plot series");
  plot_cmd->add_option("--csv", csv_path, "Input CSV")->required();
  plot_cmd->add_option("--figure", figure_id, "Figure id")->required();
  plot_cmd->add_option("--out", out_path, "Output series file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) {
      jamlink::ExperimentConfig config =
          jamlink::ExperimentConfig::from_file(config_path);
      if (seed_override) config.seed = *seed_override;
      const jamlink::TrainOutput out =
          jamlink::train(config, make_progress("train"));
      out.qtable.save(qtable_path);
      jamlink::write_training_csv(out.records, train_csv);
      if (!quiet_logging()) {
        std::cerr << "wrote " << qtable_path << " (" << out.qtable.size()
                  << " entries) and " << train_csv << "\n";
      }
    } else if (test_cmd->parsed()) {
      const jamlink::ExperimentConfig config =
          jamlink::ExperimentConfig::from_file(config_path);
      std::optional<jamlink::QTable> qtable;
      if (config.agent == jamlink::AgentKind::kSarsa) {
        if (test_qtable.empty()) {
          throw std::runtime_error("test: --qtable is required for sarsa");
        }
        qtable = jamlink::QTable::load(test_qtable);
      }
      const auto rows = jamlink::run_test(
          config, qtable ? &*qtable : nullptr, make_progress("test"));
      jamlink::write_test_csv(rows, test_csv);
      if (!quiet_logging()) {
        std::cerr << "wrote " << test_csv << " (" << rows.size() << " rows)\n";
      }
    } else if (plot_cmd->parsed()) {
      jamlink::emit_plotdata(csv_path, figure_id, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
