#include "jamlink/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace jamlink {

void World::add_node(int node_id, double x, double y, MobilityModel model) {
  if (has_node(node_id)) {
    throw std::invalid_argument("World::add_node: duplicate node id " +
                                std::to_string(node_id));
  }
  nodes_.push_back(Node{node_id, {x, y}, model});
}

bool World::has_node(int node_id) const {
  for (const auto& n : nodes_) {
    if (n.id == node_id) return true;
  }
  return false;
}

const World::Node& World::find(int node_id) const {
  for (const auto& n : nodes_) {
    if (n.id == node_id) return n;
  }
  throw std::out_of_range("World: unknown node id " + std::to_string(node_id));
}

Point World::position(int node_id) const { return find(node_id).pos; }

double World::distance(int a, int b) const {
  const Point pa = find(a).pos;
  const Point pb = find(b).pos;
  return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

void World::step_walkers(const RandomWalkParams& params, RngStream& rng) {
  for (auto& n : nodes_) {
    if (n.model != MobilityModel::kRandomWalk) continue;
    const double angle = rng.uniform() * 2.0 * std::numbers::pi;
    n.pos.x = std::clamp(n.pos.x + params.step_m * std::cos(angle),
                         params.min_x, params.max_x);
    n.pos.y = std::clamp(n.pos.y + params.step_m * std::sin(angle),
                         params.min_y, params.max_y);
  }
}

}  // namespace jamlink
