#include "jamlink/sarsa.hpp"

#include <algorithm>

namespace jamlink {

int select_action_index(int state, const QTable& q, double epsilon,
                        RngStream& rng) {
  if (epsilon > 0.0 && rng.uniform() < epsilon) {
    return static_cast<int>(rng.uniform_int(0, kActionCount - 1));
  }
  return q.argmax_action(state);
}

double sarsa_update(QTable& q, int state, int action, double reward,
                    int next_state, int next_action, bool next_terminal,
                    const SarsaParams& params) {
  const double q_sa = q.get(state, action);
  const double q_next =
      next_terminal ? 0.0 : q.get(next_state, next_action);
  const double target = reward + params.gamma * q_next;
  const double updated =
      params.literal_form
          ? (1.0 - params.alpha) * q_sa + params.alpha * (target - q_sa)
          : q_sa + params.alpha * (target - q_sa);
  q.set(state, action, updated);
  return updated;
}

double decay_epsilon(double epsilon, double decay, double floor) {
  return std::max(epsilon * decay, floor);
}

}  // namespace jamlink
