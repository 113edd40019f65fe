#pragma once

#include <Eigen/Core>
#include <vector>

namespace lsd {

// Per-arm expected rewards indexed by nonzero state, with saturation beyond
// +/- tau_max: mean(a, tau) = values[sign(tau) * min(|tau|, tau_max)].
//
// Invariants enforced at construction:
//   - every value lies in [0, 1];
//   - the negative side is nondecreasing in tau (i.e. mean(a,-1) >= mean(a,-2) >= ...);
//   - constant_negative() reports whether every arm is flat on the negative side.
class RewardTable {
 public:
  struct Arm {
    Eigen::ArrayXd pos;  // pos[j-1] = mean at state +j, j = 1..tau_max
    Eigen::ArrayXd neg;  // neg[j-1] = mean at state -j
  };

  RewardTable(std::vector<Arm> arms, int tau_max);

  int num_arms() const { return static_cast<int>(arms_.size()); }
  int tau_max() const { return tau_max_; }
  bool constant_negative() const { return constant_negative_; }

  // Expected reward of `arm` at state `tau` (saturating lookup). tau != 0.
  double mean(int arm, int tau) const;

  const Arm& arm(int i) const { return arms_[i]; }

 private:
  std::vector<Arm> arms_;
  int tau_max_;
  bool constant_negative_;
};

}  // namespace lsd
