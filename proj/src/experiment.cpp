#include "jamlink/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jamlink/minstrel.hpp"
#include "jamlink/sarsa.hpp"

namespace jamlink {

namespace {

constexpr std::uint64_t kAgentSeedSalt = 0x51A75EED;

struct EpisodeResult {
  double total_reward = 0.0;
  double throughput_mbps = 0.0;
  double energy_j = 0.0;
  double loss_pct = 0.0;
  Terminal terminal = Terminal::kNone;
};

// Greedy rollout of a fixed policy (no learning, no training terminals).
template <typename NextAction>
EpisodeResult rollout(LinkEnv& env, NextAction next_action) {
  EpisodeResult out;
  StateObservation s = env.observe();
  while (!env.done()) {
    const StepResult r = env.step(next_action(s, env));
    s = r.next_state;
  }
  out.total_reward = env.episode_reward();
  out.throughput_mbps = env.episode_throughput_mbps();
  out.energy_j = env.episode_energy_j();
  out.loss_pct = env.episode_loss_pct();
  out.terminal = env.terminal();
  return out;
}

}  // namespace

TrainOutput train(const ExperimentConfig& config, ProgressFn progress) {
  if (config.agent != AgentKind::kSarsa) {
    throw std::runtime_error("train: agent.type must be sarsa");
  }
  TrainOutput out;
  SarsaAgent agent(config.sarsa, derive_seed(config.seed, kAgentSeedSalt));
  const RewardParams rp = config.reward_params();

  for (int ep = 0; ep < config.train_episodes; ++ep) {
    const double distance =
        config.distances_m[ep % config.distances_m.size()];
    const std::uint64_t rate =
        config.arrival_rates_pps[ep % config.arrival_rates_pps.size()];
    LinkEnv env(config.sim_params(distance, rate, config.jammers,
                                  config.seed + static_cast<std::uint64_t>(ep)),
                rp, /*terminals_enabled=*/true);

    StateObservation s = env.observe();
    ControlAction a = agent.select(s, out.qtable);
    while (!env.done()) {
      const StepResult r = env.step(a);
      // Bootstrap through time/battery truncation; only real terminals
      // (battery < 10%, loss > 5%) cut the value to zero.
      const bool bootstrap = r.terminal == Terminal::kNone;
      ControlAction a_next{};
      if (bootstrap) a_next = agent.select(r.next_state, out.qtable);
      agent.update(out.qtable, s, a, r.reward, r.next_state, a_next,
                   /*next_terminal=*/!bootstrap);
      agent.decay();
      s = r.next_state;
      a = a_next;
    }

    out.records.push_back(EpisodeRecord{
        ep, env.episode_reward(), env.episode_throughput_mbps(),
        env.episode_energy_j(), env.episode_loss_pct(), agent.epsilon(),
        env.terminal()});
    if (progress) progress(ep + 1, config.train_episodes);
  }
  return out;
}

std::vector<TestRow> run_test(const ExperimentConfig& config,
                              const QTable* qtable, ProgressFn progress) {
  if (config.agent == AgentKind::kSarsa && qtable == nullptr) {
    throw std::runtime_error("test: sarsa controller needs a q-table");
  }
  std::vector<TestRow> rows;
  const RewardParams rp = config.reward_params();
  const int total_rows = static_cast<int>(config.arrival_rates_pps.size() *
                                          config.distances_m.size());
  int row_index = 0;
  for (const std::uint64_t rate : config.arrival_rates_pps) {
    for (const double distance : config.distances_m) {
      const std::uint64_t row_seed =
          config.seed + static_cast<std::uint64_t>(row_index);
      TestRow row;
      row.controller = config.controller_name();
      row.arrival_rate_pps = rate;
      row.distance_m = distance;
      row.jammers = config.jammers;
      row.episodes = config.test_episodes;

      for (int ep = 0; ep < config.test_episodes; ++ep) {
        const std::uint64_t ep_seed =
            derive_seed(row_seed, static_cast<std::uint64_t>(ep));
        LinkEnv env(config.sim_params(distance, rate, config.jammers, ep_seed),
                    rp, /*terminals_enabled=*/false);

        EpisodeResult r;
        switch (config.agent) {
          case AgentKind::kSarsa: {
            // Greedy policy: epsilon forced to zero, no updates.
            r = rollout(env, [&](const StateObservation& s, const LinkEnv&) {
              return ControlAction::from_index(
                  qtable->argmax_action(state_index(s)));
            });
            break;
          }
          case AgentKind::kMinstrel: {
            MinstrelPolicy minstrel(config.minstrel);
            RngStream rng(ep_seed, Stream::kAgent);
            // Minstrel needs per-epoch feedback, so it cannot use the plain
            // rollout helper.
            while (!env.done()) {
              minstrel.advance_to(env.sim().now());
              const ControlAction action = minstrel.decide(rng);
              const StepResult step = env.step(action);
              minstrel.record(action.mcs, step.info.mpdus_attempted,
                              step.info.delivered);
            }
            r.total_reward = env.episode_reward();
            r.throughput_mbps = env.episode_throughput_mbps();
            r.energy_j = env.episode_energy_j();
            r.loss_pct = env.episode_loss_pct();
            r.terminal = env.terminal();
            break;
          }
          case AgentKind::kFixed: {
            const ControlAction fixed{config.fixed_power_dbm, config.fixed_mcs};
            r = rollout(env,
                        [&](const StateObservation&, const LinkEnv&) {
                          return fixed;
                        });
            break;
          }
        }
        row.throughput_mbps += r.throughput_mbps;
        row.energy_j += r.energy_j;
        row.loss_pct += r.loss_pct;
      }
      if (config.test_episodes > 0) {
        row.throughput_mbps /= config.test_episodes;
        row.energy_j /= config.test_episodes;
        row.loss_pct /= config.test_episodes;
      }
      rows.push_back(row);
      ++row_index;
      if (progress) progress(row_index, total_rows);
    }
  }
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void write_training_csv(const std::vector<EpisodeRecord>& records,
                        const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  out << "episode,total_reward,throughput_mbps,energy_j,loss_pct,epsilon,"
         "terminal\n";
  for (const auto& r : records) {
    out << r.episode << ',' << format_number(r.total_reward) << ','
        << format_number(r.throughput_mbps) << ',' << format_number(r.energy_j)
        << ',' << format_number(r.loss_pct) << ',' << format_number(r.epsilon)
        << ',' << terminal_name(r.terminal) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_test_csv(const std::vector<TestRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  out << "controller,arrival_rate,distance_m,jammers,episodes,"
         "throughput_mbps,energy_j,loss_pct\n";
  for (const auto& r : rows) {
    out << r.controller << ',' << r.arrival_rate_pps << ','
        << format_number(r.distance_m) << ',' << r.jammers << ',' << r.episodes
        << ',' << format_number(r.throughput_mbps) << ','
        << format_number(r.energy_j) << ',' << format_number(r.loss_pct)
        << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return static_cast<int>(i);
    }
    throw std::runtime_error("plot: csv has no column '" + name + "'");
  }
};

Csv read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("plot: cannot open " + path);
  Csv csv;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (first) {
      csv.header = fields;
      first = false;
    } else {
      csv.rows.push_back(fields);
    }
  }
  if (first) throw std::runtime_error("plot: no data in " + path);
  return csv;
}

void write_series_file(const std::string& out_path, const std::string& x_name,
                       const std::vector<std::string>& series_names,
                       const std::map<double, std::map<std::string, double>>&
                           by_x) {
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw std::runtime_error("plot: cannot open for write: " + out_path);
  out << x_name;
  for (const auto& name : series_names) out << ',' << name;
  out << '\n';
  for (const auto& [x, ys] : by_x) {
    out << format_number(x);
    for (const auto& name : series_names) {
      out << ',';
      const auto it = ys.find(name);
      if (it != ys.end()) out << format_number(it->second);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("plot: write failed: " + out_path);
}

}  // namespace

void emit_plotdata(const std::string& csv_path, const std::string& figure_id,
                   const std::string& out_path) {
  std::string x_col;
  std::string y_col;
  bool per_controller = false;
  if (figure_id == "reward-vs-episode") {
    x_col = "episode";
    y_col = "total_reward";
  } else if (figure_id == "throughput-vs-episode") {
    x_col = "episode";
    y_col = "throughput_mbps";
  } else if (figure_id == "energy-vs-episode") {
    x_col = "episode";
    y_col = "energy_j";
  } else if (figure_id == "loss-vs-episode") {
    x_col = "episode";
    y_col = "loss_pct";
  } else if (figure_id == "throughput-vs-rate") {
    x_col = "arrival_rate";
    y_col = "throughput_mbps";
    per_controller = true;
  } else if (figure_id == "energy-vs-rate") {
    x_col = "arrival_rate";
    y_col = "energy_j";
    per_controller = true;
  } else {
    throw std::runtime_error("plot: unknown figure id: " + figure_id);
  }

  const Csv csv = read_csv(csv_path);
  if (csv.rows.empty()) throw std::runtime_error("plot: no data in " + csv_path);
  const int xi = csv.column(x_col);
  const int yi = csv.column(y_col);

  std::vector<std::string> series_names;
  std::map<double, std::map<std::string, double>> by_x;

  if (!per_controller) {
    series_names.push_back(y_col);
    for (const auto& row : csv.rows) {
      by_x[std::stod(row[xi])][y_col] = std::stod(row[yi]);
    }
  } else {
    const int ci = csv.column("controller");
    const int di = csv.column("distance_m");
    const int ji = csv.column("jammers");
    // One series per (controller, distance, jammers) combination; the suffix
    // is dropped when a single combination is present.
    std::set<std::string> suffixes;
    for (const auto& row : csv.rows) {
      suffixes.insert(row[di] + "," + row[ji]);
    }
    const bool qualify = suffixes.size() > 1;
    std::set<std::string> seen;
    for (const auto& row : csv.rows) {
      std::string name = row[ci];
      if (qualify) name += "@" + row[di] + "m-j" + row[ji];
      if (seen.insert(name).second) series_names.push_back(name);
      by_x[std::stod(row[xi])][name] = std::stod(row[yi]);
    }
  }
  write_series_file(out_path, x_col, series_names, by_x);
}

}  // namespace jamlink
