#include "lsd/environment.hpp"

#include <stdexcept>

namespace lsd {

Environment::Environment(RewardTable table, std::uint64_t seed, bool noiseless)
    : table_(std::move(table)),
      tau_(ones_state(table_.num_arms())),
      rng_(seed),
      noiseless_(noiseless) {}

StepResult Environment::step(int arm) {
  if (arm < 0 || arm >= num_arms()) throw std::out_of_range("Environment::step: bad arm");
  const int state = tau_[arm];
  const double mu = table_.mean(arm, state);
  const double reward = noiseless_ ? mu : (rng_.bernoulli(mu) ? 1.0 : 0.0);
  advance_all(tau_, arm, Timebase::PullGap);
  ++t_;
  return {reward, mu, state};
}

void Environment::reset(std::uint64_t seed) {
  tau_ = ones_state(num_arms());
  t_ = 0;
  rng_ = Rng(seed);
}

}  // namespace lsd
