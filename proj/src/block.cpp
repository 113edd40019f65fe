#include "lsd/block.hpp"

#include <stdexcept>

namespace lsd {

bool block_valid(const Block& b, int num_arms) {
  if (b.length() < 1) return false;
  for (int a : b.actions) {
    if (a < 0 || a >= num_arms) return false;
  }
  return true;
}

BlockValue block_reward(const Block& b, const StateVector& init, const RewardTable& table,
                        Timebase tb) {
  if (!block_valid(b, table.num_arms())) throw std::invalid_argument("block_reward: bad block");
  if (static_cast<int>(init.size()) != table.num_arms() || !state_well_formed(init)) {
    throw std::invalid_argument("block_reward: bad initial state");
  }
  const int d = b.length();
  BlockValue v;
  v.per_step.resize(d);
  v.first_pull.assign(d, false);
  StateVector tau = init;
  std::vector<bool> seen(table.num_arms(), false);
  for (int t = 0; t < d; ++t) {
    const int a = b[t];
    v.per_step[t] = table.mean(a, tau[a]);
    v.total += v.per_step[t];
    v.first_pull[t] = !seen[a];
    seen[a] = true;
    advance_all(tau, a, tb);
  }
  v.end_state = std::move(tau);
  return v;
}

BlockValue calibrated_reward(const Block& b, const RewardTable& table, bool general_regime,
                             Timebase tb) {
  if (!block_valid(b, table.num_arms())) {
    throw std::invalid_argument("calibrated_reward: bad block");
  }
  if (general_regime && !block_valid_general(b)) {
    throw std::invalid_argument(
        "calibrated_reward: first two actions must differ in the general regime");
  }
  const int d = b.length();
  const int num_arms = table.num_arms();
  BlockValue v;
  v.per_step.resize(d);
  v.first_pull.resize(d);
  // 0 marks an arm whose accounting has not started (no pull yet in the block).
  StateVector tau(num_arms, 0);
  for (int t = 0; t < d; ++t) {
    const int a = b[t];
    const bool first = tau[a] == 0;
    v.first_pull[t] = first;
    v.per_step[t] = first ? 0.0 : table.mean(a, tau[a]);
    v.total += v.per_step[t];
    for (int i = 0; i < num_arms; ++i) {
      if (i == a) {
        tau[i] = tau[i] < 0 ? tau[i] - 1 : -1;
      } else if (tau[i] != 0) {
        tau[i] = advance(tau[i], false, tb);
      }
    }
  }
  return v;
}

double cyclic_value(const Block& b, const RewardTable& table, std::int64_t horizon,
                    Timebase tb) {
  const int d = b.length();
  if (d < 1 || horizon < d || horizon % d != 0) {
    throw std::invalid_argument("cyclic_value: horizon must be a positive multiple of d");
  }
  const BlockValue from_ones = block_reward(b, ones_state(table.num_arms()), table, tb);
  const BlockValue steady = block_reward(b, from_ones.end_state, table, tb);
  const std::int64_t repeats = horizon / d;
  return from_ones.total + static_cast<double>(repeats - 1) * steady.total;
}

double cyclic_steady_average(const Block& b, const RewardTable& table, Timebase tb) {
  const BlockValue from_ones = block_reward(b, ones_state(table.num_arms()), table, tb);
  const BlockValue steady = block_reward(b, from_ones.end_state, table, tb);
  return steady.total / b.length();
}

}  // namespace lsd
