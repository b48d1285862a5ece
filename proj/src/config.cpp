#include "jamlink/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jamlink {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad number for " + key + ": " + value);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  if (v < 0 || v != std::floor(v)) {
    throw std::runtime_error("config: expected non-negative integer for " +
                             key + ": " + value);
  }
  return static_cast<std::uint64_t>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::runtime_error("config: bad boolean for " + key + ": " + value);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  for (const auto& p : split_list(value)) out.push_back(parse_double(key, p));
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& key,
                                          const std::string& value) {
  std::vector<std::uint64_t> out;
  for (const auto& p : split_list(value)) out.push_back(parse_u64(key, p));
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);

  std::vector<std::pair<std::string, std::string>> assignments;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: missing '=' at " + path + ":" +
                               std::to_string(line_no));
    }
    assignments.emplace_back(trim(line.substr(0, eq)),
                             trim(line.substr(eq + 1)));
  }

  ExperimentConfig cfg;
  // The scale preset applies first so explicit keys can override it.
  for (const auto& [key, value] : assignments) {
    if (key == "scale") cfg.apply(key, value);
  }
  for (const auto& [key, value] : assignments) {
    if (key != "scale") cfg.apply(key, value);
  }
  cfg.validate();
  return cfg;
}

void ExperimentConfig::apply(const std::string& key, const std::string& value) {
  if (key == "scale") {
    if (value == "full") {
      scale = value;
      sim_time_s = 10.0;
      queue_capacity = 5000;
      battery_capacity_j = 5.0;
      train_episodes = 500;
    } else if (value == "desk") {
      scale = value;
      sim_time_s = 1.0;
      queue_capacity = 500;
      battery_capacity_j = 0.5;
      train_episodes = 200;
    } else {
      throw std::runtime_error("config: scale must be full or desk, got " +
                               value);
    }
  } else if (key == "seed") {
    seed = parse_u64(key, value);
  } else if (key == "sim.time_s") {
    sim_time_s = parse_double(key, value);
  } else if (key == "traffic.arrival_rate") {
    arrival_rates_pps = parse_u64_list(key, value);
  } else if (key == "traffic.payload_bytes") {
    payload_bytes = static_cast<int>(parse_u64(key, value));
  } else if (key == "queue.capacity") {
    queue_capacity = parse_u64(key, value);
  } else if (key == "queue.max_delay_s") {
    queue_max_delay_s = parse_double(key, value);
  } else if (key == "topology.distance_m") {
    distances_m = parse_double_list(key, value);
  } else if (key == "topology.jammers") {
    jammers = static_cast<int>(parse_u64(key, value));
  } else if (key == "topology.rx_random_walk") {
    rx_random_walk = parse_bool(key, value);
  } else if (key == "mobility.step_m") {
    walk.step_m = parse_double(key, value);
  } else if (key == "mobility.interval_s") {
    walk.interval_us = from_seconds(parse_double(key, value));
  } else if (key == "mobility.bound_m") {
    const double half = parse_double(key, value) / 2.0;
    walk.min_x = -half;
    walk.max_x = half;
    walk.min_y = -half;
    walk.max_y = half;
  } else if (key == "channel.frequency_hz") {
    channel.frequency_hz = parse_double(key, value);
  } else if (key == "channel.bandwidth_hz") {
    channel.bandwidth_hz = parse_double(key, value);
  } else if (key == "channel.noise_figure_db") {
    channel.noise_figure_db = parse_double(key, value);
  } else if (key == "channel.fading") {
    channel.fading_enabled = parse_bool(key, value);
  } else if (key == "channel.nakagami_m") {
    channel.nakagami_m = parse_double(key, value);
  } else if (key == "channel.cca_threshold_dbm") {
    channel.cca_threshold_dbm = parse_double(key, value);
  } else if (key == "channel.carrier_sense_interference") {
    channel.carrier_sense_interference = parse_bool(key, value);
  } else if (key == "phy.preamble_us") {
    channel.preamble_us = static_cast<Micros>(parse_u64(key, value));
  } else if (key == "phy.mpdu_overhead_bytes") {
    channel.mpdu_overhead_bytes = static_cast<int>(parse_u64(key, value));
  } else if (key == "phy.per_width_db") {
    channel.per_width_db = parse_double(key, value);
  } else if (key == "phy.min_sinr_db") {
    const auto list = parse_double_list(key, value);
    if (list.size() != kNumMcs) {
      throw std::runtime_error("config: phy.min_sinr_db needs 10 values");
    }
    std::copy(list.begin(), list.end(), channel.min_sinr_db.begin());
  } else if (key == "mac.slot_us") {
    mac.slot_us = static_cast<Micros>(parse_u64(key, value));
  } else if (key == "mac.sifs_us") {
    mac.sifs_us = static_cast<Micros>(parse_u64(key, value));
  } else if (key == "mac.difs_us") {
    mac.difs_us = static_cast<Micros>(parse_u64(key, value));
  } else if (key == "mac.ack_us") {
    mac.ack_us = static_cast<Micros>(parse_u64(key, value));
  } else if (key == "mac.max_aggregation") {
    mac.max_aggregation = static_cast<int>(parse_u64(key, value));
  } else if (key == "mac.retry_limit") {
    mac.retry_limit = static_cast<int>(parse_u64(key, value));
  } else if (key == "energy.voltage_v") {
    energy.voltage_v = parse_double(key, value);
  } else if (key == "energy.idle_a") {
    energy.idle_a = parse_double(key, value);
  } else if (key == "energy.busy_a") {
    energy.busy_a = parse_double(key, value);
  } else if (key == "energy.rx_a") {
    energy.rx_a = parse_double(key, value);
  } else if (key == "energy.sleep_a") {
    energy.sleep_a = parse_double(key, value);
  } else if (key == "energy.tx_eta") {
    energy.tx_eta = parse_double(key, value);
  } else if (key == "energy.tx_base_a") {
    energy.tx_base_a = parse_double(key, value);
  } else if (key == "battery.capacity_j") {
    battery_capacity_j = parse_double(key, value);
  } else if (key == "jammer.tx_power_dbm") {
    jammer.tx_power_dbm = parse_double(key, value);
  } else if (key == "jammer.duty_cycle") {
    jammer.duty_cycle = parse_double(key, value);
  } else if (key == "jammer.burst_us") {
    jammer.burst_us = static_cast<Micros>(parse_u64(key, value));
  } else if (key == "jammer.distance_m") {
    jammer.distance_m = parse_double(key, value);
  } else if (key == "agent.type") {
    if (value == "sarsa") {
      agent = AgentKind::kSarsa;
    } else if (value == "minstrel") {
      agent = AgentKind::kMinstrel;
    } else if (value == "fixed") {
      agent = AgentKind::kFixed;
    } else {
      throw std::runtime_error("config: unknown agent.type " + value);
    }
  } else if (key == "agent.lambda") {
    lambda = parse_double(key, value);
  } else if (key == "agent.alpha") {
    sarsa.alpha = parse_double(key, value);
  } else if (key == "agent.gamma") {
    sarsa.gamma = parse_double(key, value);
  } else if (key == "agent.epsilon") {
    sarsa.epsilon = parse_double(key, value);
  } else if (key == "agent.epsilon_decay") {
    sarsa.epsilon_decay = parse_double(key, value);
  } else if (key == "agent.epsilon_floor") {
    sarsa.epsilon_floor = parse_double(key, value);
  } else if (key == "agent.literal_update") {
    sarsa.literal_form = parse_bool(key, value);
  } else if (key == "agent.fixed_power_dbm") {
    fixed_power_dbm = static_cast<int>(parse_u64(key, value));
  } else if (key == "agent.fixed_mcs") {
    fixed_mcs = static_cast<int>(parse_u64(key, value));
  } else if (key == "reward.energy_total") {
    if (value == "capacity") {
      energy_total = EnergyTotalRef::kCapacity;
    } else if (value == "episode-start") {
      energy_total = EnergyTotalRef::kEpisodeStart;
    } else {
      throw std::runtime_error("config: reward.energy_total must be capacity "
                               "or episode-start");
    }
  } else if (key == "minstrel.lookaround") {
    minstrel.lookaround = parse_double(key, value);
  } else if (key == "minstrel.update_interval_ms") {
    minstrel.update_interval_us =
        static_cast<Micros>(parse_u64(key, value)) * 1000;
  } else if (key == "minstrel.ewma_weight") {
    minstrel.ewma_weight = parse_double(key, value);
  } else if (key == "train.episodes") {
    train_episodes = static_cast<int>(parse_u64(key, value));
  } else if (key == "test.episodes") {
    test_episodes = static_cast<int>(parse_u64(key, value));
  } else {
    throw std::runtime_error("config: unknown key: " + key);
  }
}

void ExperimentConfig::validate() const {
  if (sim_time_s <= 0) throw std::runtime_error("config: sim.time_s <= 0");
  if (arrival_rates_pps.empty()) {
    throw std::runtime_error("config: traffic.arrival_rate list is empty");
  }
  if (distances_m.empty()) {
    throw std::runtime_error("config: topology.distance_m list is empty");
  }
  for (double d : distances_m) {
    if (d <= 0) throw std::runtime_error("config: non-positive distance");
  }
  if (jammers < 0 || jammers > 2) {
    throw std::runtime_error("config: topology.jammers must be 0, 1 or 2");
  }
  if (payload_bytes <= 0) {
    throw std::runtime_error("config: traffic.payload_bytes <= 0");
  }
  if (queue_capacity == 0) {
    throw std::runtime_error("config: queue.capacity must be >= 1");
  }
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::runtime_error("config: agent.lambda outside [0, 1]");
  }
  if (sarsa.alpha <= 0.0 || sarsa.alpha > 1.0 || sarsa.gamma <= 0.0 ||
      sarsa.gamma > 1.0) {
    throw std::runtime_error("config: agent.alpha/gamma outside (0, 1]");
  }
  if (jammer.duty_cycle < 0.0 || jammer.duty_cycle > 1.0) {
    throw std::runtime_error("config: jammer.duty_cycle outside [0, 1]");
  }
  if (fixed_mcs < 0 || fixed_mcs >= kNumMcs || fixed_power_dbm < 1 ||
      fixed_power_dbm > 10) {
    throw std::runtime_error("config: fixed action outside the action space");
  }
  if (battery_capacity_j <= 0) {
    throw std::runtime_error("config: battery.capacity_j <= 0");
  }
  for (int i = 1; i < kNumMcs; ++i) {
    if (channel.min_sinr_db[i] <= channel.min_sinr_db[i - 1]) {
      throw std::runtime_error(
          "config: phy.min_sinr_db must be strictly increasing");
    }
  }
}

SimParams ExperimentConfig::sim_params(double distance_m,
                                       std::uint64_t arrival_rate_pps,
                                       int n_jammers,
                                       std::uint64_t run_seed) const {
  SimParams p;
  p.seed = run_seed;
  p.sim_time_us = from_seconds(sim_time_s);
  p.arrival_rate_pps = arrival_rate_pps;
  p.payload_bytes = payload_bytes;
  p.queue_capacity = queue_capacity;
  p.queue_max_delay_us = from_seconds(queue_max_delay_s);
  p.distance_m = distance_m;
  p.n_jammers = n_jammers;
  p.rx_random_walk = rx_random_walk;
  p.walk = walk;
  p.channel = channel;
  p.mac = mac;
  p.energy = energy;
  p.battery_capacity_j = battery_capacity_j;
  p.jammer = jammer;
  return p;
}

std::string ExperimentConfig::controller_name() const {
  switch (agent) {
    case AgentKind::kSarsa: {
      std::ostringstream out;
      out << "sarsa-" << lambda;
      return out.str();
    }
    case AgentKind::kMinstrel:
      return "minstrel";
    case AgentKind::kFixed: {
      std::ostringstream out;
      out << "fixed-" << fixed_power_dbm << "dbm-mcs" << fixed_mcs;
      return out.str();
    }
  }
  return "unknown";
}

}  // namespace jamlink
