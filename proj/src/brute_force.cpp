#include "lsd/brute_force.hpp"

#include <cmath>
#include <stdexcept>

namespace lsd {

namespace {

// Lexicographic odometer over {0..K-1}^d. Returns false once exhausted.
bool next_block(Block& b, int num_arms) {
  for (int t = b.length() - 1; t >= 0; --t) {
    if (++b.actions[t] < num_arms) return true;
    b.actions[t] = 0;
  }
  return false;
}

std::uint64_t pow_checked(int base, int exp, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (int i = 0; i < exp; ++i) {
    n *= static_cast<std::uint64_t>(base);
    if (n > cap) throw std::invalid_argument("brute force: K^d exceeds enumeration cap");
  }
  return n;
}

}  // namespace

BestBlock brute_force_best_block(const RewardTable& table, int d, BlockObjective objective,
                                 const StateVector* tau_init, bool general_regime,
                                 std::uint64_t cap, Timebase tb) {
  if (d < 1) throw std::invalid_argument("brute force: d must be >= 1");
  const int num_arms = table.num_arms();
  pow_checked(num_arms, d, cap);
  if (objective == BlockObjective::Plain && tau_init == nullptr) {
    throw std::invalid_argument("brute force: Plain objective needs an initial state");
  }

  Block b{std::vector<int>(d, 0)};
  std::optional<BestBlock> best;
  do {
    if (objective == BlockObjective::Calibrated && general_regime &&
        !block_valid_general(b)) {
      continue;
    }
    double value = 0.0;
    switch (objective) {
      case BlockObjective::Plain:
        value = block_reward(b, *tau_init, table, tb).total;
        break;
      case BlockObjective::Calibrated:
        value = calibrated_reward(b, table, general_regime, tb).total;
        break;
      case BlockObjective::DoublePlay: {
        const BlockValue once = block_reward(b, ones_state(num_arms), table, tb);
        value = block_reward(b, once.end_state, table, tb).total;
        break;
      }
    }
    // Strict improvement keeps the lexicographically smallest maximizer.
    if (!best || value > best->value) best = BestBlock{b, value};
  } while (next_block(b, num_arms));

  if (!best) throw std::runtime_error("brute force: no feasible block");
  return *best;
}

BestBlock brute_force_best_sequence(const RewardTable& table, int horizon, std::uint64_t cap,
                                    Timebase tb) {
  const StateVector init = ones_state(table.num_arms());
  return brute_force_best_block(table, horizon, BlockObjective::Plain, &init, false, cap, tb);
}

}  // namespace lsd
