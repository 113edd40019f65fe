#include "lsd/reward_table.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lsd {

RewardTable::RewardTable(std::vector<Arm> arms, int tau_max)
    : arms_(std::move(arms)), tau_max_(tau_max) {
  if (tau_max_ < 1) throw std::invalid_argument("RewardTable: tau_max must be >= 1");
  if (arms_.empty()) throw std::invalid_argument("RewardTable: need at least one arm");
  constant_negative_ = true;
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    const Arm& arm = arms_[a];
    if (arm.pos.size() != tau_max_ || arm.neg.size() != tau_max_) {
      throw std::invalid_argument("RewardTable: arm " + std::to_string(a) +
                                  " value arrays must have length tau_max");
    }
    for (int j = 0; j < tau_max_; ++j) {
      if (!(arm.pos[j] >= 0.0 && arm.pos[j] <= 1.0) ||
          !(arm.neg[j] >= 0.0 && arm.neg[j] <= 1.0)) {
        throw std::invalid_argument("RewardTable: values must lie in [0, 1]");
      }
    }
    // Nondecreasing in tau on the negative side: neg[0] is mean(-1).
    for (int j = 1; j < tau_max_; ++j) {
      if (arm.neg[j] > arm.neg[j - 1] + 1e-15) {
        throw std::invalid_argument(
            "RewardTable: negative side of arm " + std::to_string(a) +
            " must be nondecreasing in tau");
      }
      if (arm.neg[j] != arm.neg[0]) constant_negative_ = false;
    }
  }
}

double RewardTable::mean(int arm, int tau) const {
  if (tau == 0) throw std::invalid_argument("RewardTable::mean: tau must be nonzero");
  if (arm < 0 || arm >= num_arms()) throw std::out_of_range("RewardTable::mean: bad arm");
  const int j = std::min(std::abs(tau), tau_max_);
  return tau > 0 ? arms_[arm].pos[j - 1] : arms_[arm].neg[j - 1];
}

}  // namespace lsd
