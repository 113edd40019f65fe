#pragma once

#include <cstdint>

#include "lsd/reward_table.hpp"
#include "lsd/rng.hpp"
#include "lsd/state.hpp"

namespace lsd {

struct StepResult {
  double reward;  // Bernoulli draw in {0, 1} (or the mean itself when noise is off)
  double mean;    // expected reward at the state the pull saw
  int state;      // arm state at the pull
};

// The bandit environment: a reward table, the per-arm state machine and a
// seeded Bernoulli reward stream. States advance on the pull-gap timebase.
// Instances are single-owner; distinct instances never share mutable state.
class Environment {
 public:
  Environment(RewardTable table, std::uint64_t seed, bool noiseless = false);

  StepResult step(int arm);

  int num_arms() const { return table_.num_arms(); }
  const StateVector& state() const { return tau_; }
  std::int64_t time() const { return t_; }
  const RewardTable& table() const { return table_; }

  // Expected reward of `arm` if pulled now.
  double mean_now(int arm) const { return table_.mean(arm, tau_[arm]); }

  void reset(std::uint64_t seed);

 private:
  RewardTable table_;
  StateVector tau_;
  std::int64_t t_ = 0;
  Rng rng_;
  bool noiseless_;
};

}  // namespace lsd
