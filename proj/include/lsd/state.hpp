#pragma once

#include <stdexcept>
#include <vector>

namespace lsd {

// Arm states live in Z \ {0}. A negative state -k means the arm has been
// played for the last k consecutive rounds. A positive state is a count of
// rounds since the arm's current idle spell began; the two timebases below
// differ in where that count restarts after a run of pulls ends.
enum class Timebase {
  // Positive state equals the number of rounds since the arm's last pull:
  // an interrupted run re-enters the positive axis at 2. This is the
  // timebase the simulator, the block optimizers and the UCB tables use.
  PullGap,
  // Positive state equals the number of rounds since the switch away from
  // the arm: re-entry at 1, matching the four-case `transition` map.
  LastSwitch,
};

// Four-case last-switch update. tau == 0 is not a state.
inline int transition(int tau, bool played) {
  if (tau == 0) throw std::invalid_argument("transition: tau must be nonzero");
  if (played) return tau < 0 ? tau - 1 : -1;
  return tau < 0 ? 1 : tau + 1;
}

// State update under a chosen timebase. Identical to `transition` except for
// the re-entry value of an idle arm leaving a run.
inline int advance(int tau, bool played, Timebase tb) {
  if (tau == 0) throw std::invalid_argument("advance: tau must be nonzero");
  if (played) return tau < 0 ? tau - 1 : -1;
  if (tau < 0) return tb == Timebase::PullGap ? 2 : 1;
  return tau + 1;
}

using StateVector = std::vector<int>;

inline StateVector ones_state(int num_arms) { return StateVector(num_arms, 1); }

inline void advance_all(StateVector& tau, int played_arm, Timebase tb) {
  for (int a = 0; a < static_cast<int>(tau.size()); ++a) {
    tau[a] = advance(tau[a], a == played_arm, tb);
  }
}

// A state vector is well formed when no entry is zero and at most one entry
// is negative (only the arm just played can be mid-run).
inline bool state_well_formed(const StateVector& tau) {
  int negatives = 0;
  for (int v : tau) {
    if (v == 0) return false;
    if (v < 0) ++negatives;
  }
  return negatives <= 1;
}

}  // namespace lsd
