#pragma once

#include <vector>

#include "jamlink/rng.hpp"
#include "jamlink/time.hpp"

namespace jamlink {

enum class MobilityModel { kConstant, kRandomWalk };

struct RandomWalkParams {
  double step_m = 1.0;
  Micros interval_us = 500'000;
  // Walk area, 50 x 50 m centered on the origin.
  double min_x = -25.0;
  double max_x = 25.0;
  double min_y = -25.0;
  double max_y = 25.0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Registry of node positions. Constant-mobility nodes never move; random-walk
// nodes take one bounded step per step_walkers() call.
class World {
 public:
  void add_node(int node_id, double x, double y,
                MobilityModel model = MobilityModel::kConstant);

  Point position(int node_id) const;
  double distance(int a, int b) const;
  bool has_node(int node_id) const;

  void step_walkers(const RandomWalkParams& params, RngStream& rng);

 private:
  struct Node {
    int id;
    Point pos;
    MobilityModel model;
  };
  const Node& find(int node_id) const;

  std::vector<Node> nodes_;
};

}  // namespace jamlink
