#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lsd {

// maximize c^T x  subject to  G x <= h,  A x == b,  0 <= x <= 1.
struct LpProblem {
  Eigen::VectorXd c;
  Eigen::MatrixXd G;
  Eigen::VectorXd h;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;

  int num_vars() const { return static_cast<int>(c.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
  int iterations = 0;
};

struct Fixing {
  int var;
  int value;  // 0 or 1
};

// Immutable sparse view of a problem, reusable across many solves with
// different fixings (the branch-and-bound search fixes variables, never
// changes the matrices). Building it costs one scan of G and A.
class LpContext {
 public:
  explicit LpContext(const LpProblem& p);

  const LpProblem& problem() const { return *p_; }

 private:
  friend LpSolution solve_with_fixings(const LpContext&, const std::vector<Fixing>&);

  struct Row {
    std::vector<int> idx;
    std::vector<double> val;
  };
  const LpProblem* p_;
  std::vector<Row> g_rows_, a_rows_;
  std::vector<std::vector<int>> var_g_rows_, var_a_rows_;  // var -> touching rows
};

// Feasibility / optimality tolerance of the simplex core.
inline constexpr double kLpTol = 1e-9;

LpSolution solve_with_fixings(const LpContext& ctx, const std::vector<Fixing>& fixings);

LpSolution solve(const LpProblem& p);
LpSolution solve_with_fixings(const LpProblem& p, const std::vector<Fixing>& fixings);

namespace detail {

// Dense two-phase primal simplex over columns with individual bounds
// [lo, up] (structural variables get [0,1], slacks [0, inf)). Nonbasic
// columns rest at a bound; Bland's rule takes over as the anti-cycling
// safeguard once pivots stall. Deterministic pivot order throughout.
template <typename Scalar>
class BoundedSimplex {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  // rows: [G-rows; A-rows] as one matrix over the structural columns.
  // sense: +1 for "<=", 0 for "==" per row.
  BoundedSimplex(const Matrix& rows, const Vector& rhs, const std::vector<int>& sense,
                 const Vector& objective, Scalar tol);

  LpStatus run();

  Vector structural_solution() const;
  Scalar objective_value() const;
  int iterations() const { return iterations_; }

 private:
  enum Status : std::uint8_t { AtLower, AtUpper, Basic };

  int pick_entering(const Vector& rc, bool bland) const;
  bool eligible(int j, const Vector& rc) const;
  // Returns false when the problem is unbounded along column j.
  bool ratio_and_step(int j, const Vector& rc_row, Vector& rc1, Vector& rc2, bool phase1);
  void pivot(int row, int col, Vector& rc1, Vector& rc2);

  int m_, n_struct_, n_total_;
  Scalar tol_;
  Matrix T_;                    // m x n_total current tableau (B^-1 [rows])
  Vector beta_;                 // basic values per row
  Vector lo_, up_;              // per-column bounds
  Vector value_;                // current value of every nonbasic column
  std::vector<Status> status_;
  std::vector<int> basis_;      // column basic in each row
  std::vector<bool> frozen_;    // artificials barred from re-entering
  Vector obj2_;                 // phase-2 objective over all columns
  Vector rc1_, rc2_;            // reduced-cost rows for the two phases
  Scalar v1_ = 0, v2_ = 0;
  int first_artificial_;
  int iterations_ = 0;
  int stall_ = 0;
  bool bland_mode_ = false;
};

template <typename Scalar>
BoundedSimplex<Scalar>::BoundedSimplex(const Matrix& rows, const Vector& rhs,
                                       const std::vector<int>& sense, const Vector& objective,
                                       Scalar tol)
    : m_(static_cast<int>(rows.rows())), n_struct_(static_cast<int>(rows.cols())), tol_(tol) {
  const Scalar inf = std::numeric_limits<Scalar>::infinity();
  int n_slack = 0;
  for (int s : sense) n_slack += (s == 1);

  // Normalize every row to a nonnegative right-hand side; rows whose slack
  // column ends up with coefficient -1, and all equality rows, get an
  // artificial starting basis column.
  std::vector<int> art_rows;
  for (int r = 0; r < m_; ++r) {
    const bool flipped = rhs[r] < 0;
    if (sense[r] == 0 || flipped) art_rows.push_back(r);
  }
  first_artificial_ = n_struct_ + n_slack;
  n_total_ = first_artificial_ + static_cast<int>(art_rows.size());

  T_.setZero(m_, n_total_);
  beta_.resize(m_);
  basis_.assign(m_, -1);
  lo_.setZero(n_total_);
  up_.setOnes(n_total_);
  obj2_.setZero(n_total_);
  obj2_.head(n_struct_) = objective;

  int slack = n_struct_;
  int art = first_artificial_;
  for (int r = 0; r < m_; ++r) {
    const Scalar sign = rhs[r] < 0 ? Scalar(-1) : Scalar(1);
    T_.row(r).head(n_struct_) = sign * rows.row(r);
    beta_[r] = sign * rhs[r];
    if (sense[r] == 1) {
      T_(r, slack) = sign;
      up_[slack] = inf;
      if (sign > 0) basis_[r] = slack;
      ++slack;
    }
    if (basis_[r] < 0) {
      T_(r, art) = Scalar(1);
      up_[art] = inf;
      basis_[r] = art;
      ++art;
    }
  }

  status_.assign(n_total_, AtLower);
  frozen_.assign(n_total_, false);
  value_.setZero(n_total_);
  for (int r = 0; r < m_; ++r) status_[basis_[r]] = Basic;

  rc2_ = obj2_;  // initial basis has zero phase-2 cost
  rc1_.setZero(n_total_);
  v1_ = 0;
  for (int r = 0; r < m_; ++r) {
    if (basis_[r] >= first_artificial_) {
      rc1_ += T_.row(r);  // phase-1 cost of the basic artificial is -1
      v1_ -= beta_[r];
    }
  }
  for (int j = first_artificial_; j < n_total_; ++j) rc1_[j] = Scalar(0);
  v2_ = 0;
}

template <typename Scalar>
bool BoundedSimplex<Scalar>::eligible(int j, const Vector& rc) const {
  if (status_[j] == Basic || frozen_[j]) return false;
  if (status_[j] == AtLower) return rc[j] > tol_;
  return rc[j] < -tol_;
}

template <typename Scalar>
int BoundedSimplex<Scalar>::pick_entering(const Vector& rc, bool bland) const {
  if (bland) {
    for (int j = 0; j < n_total_; ++j) {
      if (eligible(j, rc)) return j;
    }
    return -1;
  }
  int best = -1;
  Scalar best_gain = tol_;
  for (int j = 0; j < n_total_; ++j) {
    if (!eligible(j, rc)) continue;
    const Scalar gain = status_[j] == AtLower ? rc[j] : -rc[j];
    if (gain > best_gain) {
      best_gain = gain;
      best = j;
    }
  }
  return best;
}

template <typename Scalar>
void BoundedSimplex<Scalar>::pivot(int row, int col, Vector& rc1, Vector& rc2) {
  const Scalar piv = T_(row, col);
  T_.row(row) /= piv;
  for (int r = 0; r < m_; ++r) {
    if (r == row) continue;
    const Scalar f = T_(r, col);
    if (f != Scalar(0)) {
      T_.row(r).noalias() -= f * T_.row(row);
      T_(r, col) = Scalar(0);
    }
  }
  const Scalar f1 = rc1[col];
  if (f1 != Scalar(0)) {
    rc1.noalias() -= f1 * T_.row(row).transpose();
    rc1[col] = Scalar(0);
  }
  const Scalar f2 = rc2[col];
  if (f2 != Scalar(0)) {
    rc2.noalias() -= f2 * T_.row(row).transpose();
    rc2[col] = Scalar(0);
  }
}

template <typename Scalar>
bool BoundedSimplex<Scalar>::ratio_and_step(int j, const Vector& rc, Vector& rc1, Vector& rc2,
                                            bool phase1) {
  const Scalar inf = std::numeric_limits<Scalar>::infinity();
  const int dir = status_[j] == AtLower ? 1 : -1;
  Vector col = T_.col(j);

  constexpr Scalar tie = Scalar(1e-12);
  Scalar theta = up_[j] == inf ? inf : up_[j] - lo_[j];
  int leave_row = -1;    // -1 means the entering column hits its own bound
  int leave_dir = 0;     // +1: leaving var hits lower; -1: hits upper
  Scalar leave_piv = 0;
  for (int r = 0; r < m_; ++r) {
    const Scalar a = dir * col[r];
    Scalar t;
    int ld;
    if (a > tol_) {
      t = (beta_[r] - lo_[basis_[r]]) / a;
      ld = 1;
    } else if (a < -tol_) {
      if (up_[basis_[r]] == inf) continue;
      t = (up_[basis_[r]] - beta_[r]) / (-a);
      ld = -1;
    } else {
      continue;
    }
    if (t < 0) t = 0;  // numerical dust
    bool take;
    if (t < theta - tie) {
      take = true;
    } else if (t <= theta + tie && leave_row >= 0) {
      // Tie between limiting rows: lowest basic index under Bland, largest
      // pivot magnitude otherwise. Deterministic either way.
      take = bland_mode_ ? basis_[r] < basis_[leave_row]
                         : std::abs(col[r]) > std::abs(leave_piv);
    } else {
      take = false;  // ties with the entering column's own bound keep the flip
    }
    if (take) {
      theta = std::min(theta, t);
      leave_row = r;
      leave_dir = ld;
      leave_piv = col[r];
    }
  }

  if (theta == inf) return false;  // unbounded ray

  const Scalar gain = rc[j] * Scalar(dir) * theta;
  if (phase1) v1_ += rc1[j] * Scalar(dir) * theta;
  v2_ += rc2[j] * Scalar(dir) * theta;
  (void)gain;

  if (leave_row < 0) {
    // Bound flip: the entering column swings to its other bound.
    beta_.noalias() -= Scalar(dir) * theta * col;
    status_[j] = status_[j] == AtLower ? AtUpper : AtLower;
    value_[j] = status_[j] == AtUpper ? up_[j] : lo_[j];
    stall_ = 0;
    return true;
  }

  // Pivot: variable j enters the basis, basis_[leave_row] leaves at a bound.
  const int leaving = basis_[leave_row];
  for (int r = 0; r < m_; ++r) {
    if (r != leave_row) beta_[r] -= Scalar(dir) * theta * col[r];
  }
  beta_[leave_row] = value_[j] + Scalar(dir) * theta;
  status_[leaving] = leave_dir == 1 ? AtLower : AtUpper;
  value_[leaving] = leave_dir == 1 ? lo_[leaving] : up_[leaving];
  if (leaving >= first_artificial_) frozen_[leaving] = true;
  status_[j] = Basic;
  basis_[leave_row] = j;
  pivot(leave_row, j, rc1, rc2);

  if (theta <= Scalar(1e-12)) {
    if (++stall_ > 2 * (m_ + n_total_)) bland_mode_ = true;
  } else {
    stall_ = 0;
  }
  return true;
}

template <typename Scalar>
LpStatus BoundedSimplex<Scalar>::run() {
  const int cap = 20000 + 200 * (m_ + n_total_);

  // Phase 1: drive the artificial columns to zero.
  if (n_total_ > first_artificial_) {
    while (true) {
      const int j = pick_entering(rc1_, bland_mode_);
      if (j < 0) break;
      if (!ratio_and_step(j, rc1_, rc1_, rc2_, true)) break;
      if (++iterations_ > cap) throw std::runtime_error("simplex: iteration cap exceeded");
    }
    if (v1_ < -Scalar(1e-7)) return LpStatus::Infeasible;
    // Remove leftover basic artificials (redundant rows stay pinned at zero).
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < first_artificial_) continue;
      int piv_col = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (!frozen_[j] && status_[j] != Basic && std::abs(T_(r, j)) > Scalar(1e-7)) {
          piv_col = j;
          break;
        }
      }
      if (piv_col >= 0) {
        const int leaving = basis_[r];
        status_[leaving] = AtLower;
        value_[leaving] = 0;
        frozen_[leaving] = true;
        status_[piv_col] = Basic;
        basis_[r] = piv_col;
        // beta_[r] stays (zero); only the tableau changes.
        pivot(r, piv_col, rc1_, rc2_);
      } else {
        up_[basis_[r]] = Scalar(0);  // redundant row; bar the artificial from moving
      }
    }
    for (int jj = first_artificial_; jj < n_total_; ++jj) frozen_[jj] = true;
  }

  // Phase 2: optimize the real objective.
  stall_ = 0;
  while (true) {
    const int j = pick_entering(rc2_, bland_mode_);
    if (j < 0) return LpStatus::Optimal;
    if (!ratio_and_step(j, rc2_, rc1_, rc2_, false)) return LpStatus::Unbounded;
    if (++iterations_ > cap) throw std::runtime_error("simplex: iteration cap exceeded");
  }
}

template <typename Scalar>
typename BoundedSimplex<Scalar>::Vector BoundedSimplex<Scalar>::structural_solution() const {
  Vector x(n_struct_);
  for (int j = 0; j < n_struct_; ++j) x[j] = status_[j] == Basic ? Scalar(0) : value_[j];
  for (int r = 0; r < m_; ++r) {
    if (basis_[r] < n_struct_) x[basis_[r]] = beta_[r];
  }
  return x;
}

template <typename Scalar>
Scalar BoundedSimplex<Scalar>::objective_value() const {
  return obj2_.head(n_struct_).dot(structural_solution());
}

}  // namespace detail
}  // namespace lsd
