#pragma once

#include "jamlink/observation.hpp"
#include "jamlink/qtable.hpp"
#include "jamlink/rng.hpp"

namespace jamlink {

struct SarsaParams {
  double alpha = 0.2;
  double gamma = 0.9;
  double epsilon = 1.0;
  double epsilon_decay = 0.99995;
  double epsilon_floor = 0.01;
  // When set, applies the one-step rule in the exact printed form
  // (1-a)Q + a(r + g Q' - Q), which also subtracts Q inside the bracket.
  bool literal_form = false;
};

// Epsilon-greedy action index: uniform with probability epsilon, greedy
// otherwise (ties to the lowest index).
int select_action_index(int state, const QTable& q, double epsilon,
                        RngStream& rng);

// One on-policy update for (s, a, r, s', a'); Q(s', a') reads as 0 past a
// terminal. Returns the new Q(s, a).
double sarsa_update(QTable& q, int state, int action, double reward,
                    int next_state, int next_action, bool next_terminal,
                    const SarsaParams& params);

double decay_epsilon(double epsilon, double decay, double floor);

// Convenience wrapper owning the exploration stream and epsilon schedule.
class SarsaAgent {
 public:
  SarsaAgent(const SarsaParams& params, std::uint64_t seed)
      : params_(params),
        epsilon_(params.epsilon),
        rng_(seed, Stream::kAgent) {}

  ControlAction select(const StateObservation& s, const QTable& q) {
    return ControlAction::from_index(
        select_action_index(state_index(s), q, epsilon_, rng_));
  }

  void update(QTable& q, const StateObservation& s, ControlAction a, double r,
              const StateObservation& s_next, ControlAction a_next,
              bool next_terminal) {
    sarsa_update(q, state_index(s), a.index(), r, state_index(s_next),
                 a_next.index(), next_terminal, params_);
  }

  void decay() {
    epsilon_ =
        decay_epsilon(epsilon_, params_.epsilon_decay, params_.epsilon_floor);
  }

  double epsilon() const { return epsilon_; }
  void set_epsilon(double e) { epsilon_ = e; }

 private:
  SarsaParams params_;
  double epsilon_;
  RngStream rng_;
};

}  // namespace jamlink
