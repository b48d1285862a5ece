#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "jamlink/observation.hpp"

namespace jamlink {

// Sparse state-action value table. Unvisited pairs read as 0; the dense
// bound is 179,200 states x 100 actions.
class QTable {
 public:
  double get(int state, int action) const;
  void set(int state, int action, double value);
  std::size_t size() const { return entries_.size(); }

  // Greedy action for `state`; ties resolve to the lowest action index.
  int argmax_action(int state) const;

  bool operator==(const QTable&) const = default;

  // Versioned little-endian binary format: magic, version, entry count,
  // then (state u32, action u8, q f64) records.
  void save(const std::string& path) const;
  static QTable load(const std::string& path);

 private:
  static std::uint32_t key(int state, int action);
  std::unordered_map<std::uint32_t, double> entries_;
};

}  // namespace jamlink
