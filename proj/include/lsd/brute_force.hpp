#pragma once

#include <cstdint>
#include <optional>

#include "lsd/block.hpp"

namespace lsd {

enum class BlockObjective {
  Plain,       // r(B | tau_init)
  Calibrated,  // initial-state-independent value
  DoublePlay,  // r(B | tau_B), tau_B the state after one play from all-ones
};

struct BestBlock {
  Block block;
  double value = 0.0;
};

// Exhaustive maximizer over all K^d blocks; ties break lexicographically on
// the action sequence. `tau_init` is required for the Plain objective. With
// `general_regime` set, Calibrated skips blocks whose first two actions match.
// Refuses instances with K^d above `cap`.
BestBlock brute_force_best_block(const RewardTable& table, int d, BlockObjective objective,
                                 const StateVector* tau_init = nullptr,
                                 bool general_regime = false,
                                 std::uint64_t cap = 10'000'000,
                                 Timebase tb = Timebase::PullGap);

// Exact optimal action sequence of length `horizon` from the all-ones state.
BestBlock brute_force_best_sequence(const RewardTable& table, int horizon,
                                    std::uint64_t cap = 10'000'000,
                                    Timebase tb = Timebase::PullGap);

}  // namespace lsd
