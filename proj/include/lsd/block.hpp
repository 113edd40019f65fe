#pragma once

#include <cstdint>
#include <vector>

#include "lsd/reward_table.hpp"
#include "lsd/state.hpp"

namespace lsd {

// A fixed-length sequence of arm pulls, the unit of play for block algorithms.
struct Block {
  std::vector<int> actions;

  int length() const { return static_cast<int>(actions.size()); }
  int operator[](int t) const { return actions[t]; }
  bool operator==(const Block& o) const { return actions == o.actions; }
  bool operator<(const Block& o) const { return actions < o.actions; }
};

bool block_valid(const Block& b, int num_arms);

// In the general regime (rewards not flat on the negative side) blocks must
// open with two distinct actions so the first pull can act as a calibration.
inline bool block_valid_general(const Block& b) {
  return b.length() < 2 || b.actions[0] != b.actions[1];
}

struct BlockValue {
  double total = 0.0;
  std::vector<double> per_step;
  std::vector<bool> first_pull;  // true where the pull is the arm's first in the block
  StateVector end_state;         // state after the block (block_reward only)
};

// Expected value of playing `b` from `init`, stepping states under `tb`.
BlockValue block_reward(const Block& b, const StateVector& init, const RewardTable& table,
                        Timebase tb = Timebase::PullGap);

// Initial-state-independent block value: each arm's state accounting starts at
// its first pull inside the block, and first pulls contribute zero. With
// `general_regime` set, blocks of length >= 2 whose first two actions coincide
// are rejected.
BlockValue calibrated_reward(const Block& b, const RewardTable& table,
                             bool general_regime = false, Timebase tb = Timebase::PullGap);

// Expected total reward of repeating `b` for T steps: the first block is
// played from the all-ones state, every later block from the post-block
// state. T must be a multiple of the block length.
double cyclic_value(const Block& b, const RewardTable& table, std::int64_t horizon,
                    Timebase tb = Timebase::PullGap);

// Per-step average of the repeated block in its steady state.
double cyclic_steady_average(const Block& b, const RewardTable& table,
                             Timebase tb = Timebase::PullGap);

}  // namespace lsd
