#include "lsd/lp.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace lsd {

namespace {
constexpr double kPinTol = 1e-9;
}

LpContext::LpContext(const LpProblem& p) : p_(&p) {
  const int n = p.num_vars();
  const int mg = static_cast<int>(p.G.rows());
  const int ma = static_cast<int>(p.A.rows());
  g_rows_.resize(mg);
  a_rows_.resize(ma);
  var_g_rows_.resize(n);
  var_a_rows_.resize(n);
  for (int r = 0; r < mg; ++r) {
    for (int j = 0; j < n; ++j) {
      const double v = p.G(r, j);
      if (v != 0.0) {
        g_rows_[r].idx.push_back(j);
        g_rows_[r].val.push_back(v);
        var_g_rows_[j].push_back(r);
      }
    }
  }
  for (int r = 0; r < ma; ++r) {
    for (int j = 0; j < n; ++j) {
      const double v = p.A(r, j);
      if (v != 0.0) {
        a_rows_[r].idx.push_back(j);
        a_rows_[r].val.push_back(v);
        var_a_rows_[j].push_back(r);
      }
    }
  }
}

// Substitutes fixed variables out, propagates the pins this forces (rows left
// with a single free variable, rows that become constant), then hands the
// reduced system to the simplex core and maps the solution back.
LpSolution solve_with_fixings(const LpContext& ctx, const std::vector<Fixing>& fixings) {
  const LpProblem& p = ctx.problem();
  const int n = p.num_vars();
  const int mg = static_cast<int>(p.G.rows());
  const int ma = static_cast<int>(p.A.rows());

  std::vector<double> fixval(n, 0.0);
  std::vector<char> fixed(n, 0);
  std::vector<double> g_shift(mg, 0.0), a_shift(ma, 0.0);
  std::vector<int> g_free(mg), a_free(ma);
  std::vector<char> g_dropped(mg, 0), a_dropped(ma, 0);
  for (int r = 0; r < mg; ++r) g_free[r] = static_cast<int>(ctx.g_rows_[r].idx.size());
  for (int r = 0; r < ma; ++r) a_free[r] = static_cast<int>(ctx.a_rows_[r].idx.size());

  std::deque<std::pair<char, int>> work;  // ('g'|'a', row)
  bool infeasible = false;

  auto pin = [&](int var, double value) {
    if (infeasible) return;
    if (fixed[var]) {
      if (std::abs(fixval[var] - value) > 1e-7) infeasible = true;
      return;
    }
    fixed[var] = 1;
    fixval[var] = value;
    for (int r : ctx.var_g_rows_[var]) {
      if (g_dropped[r]) continue;
      g_shift[r] += p.G(r, var) * value;
      --g_free[r];
      work.emplace_back('g', r);
    }
    for (int r : ctx.var_a_rows_[var]) {
      if (a_dropped[r]) continue;
      a_shift[r] += p.A(r, var) * value;
      --a_free[r];
      work.emplace_back('a', r);
    }
  };

  for (const Fixing& f : fixings) {
    if (f.var < 0 || f.var >= n || (f.value != 0 && f.value != 1)) {
      throw std::invalid_argument("solve_with_fixings: bad fixing");
    }
    pin(f.var, static_cast<double>(f.value));
  }
  for (int r = 0; r < mg; ++r) work.emplace_back('g', r);
  for (int r = 0; r < ma; ++r) work.emplace_back('a', r);

  auto find_free = [&](const LpContext::Row& row, int* var, double* coef) {
    for (std::size_t k = 0; k < row.idx.size(); ++k) {
      if (!fixed[row.idx[k]]) {
        *var = row.idx[k];
        *coef = row.val[k];
        return;
      }
    }
    *var = -1;
  };

  while (!work.empty() && !infeasible) {
    auto [kind, r] = work.front();
    work.pop_front();
    if (kind == 'g') {
      if (g_dropped[r]) continue;
      const double slack = p.h[r] - g_shift[r];
      if (g_free[r] == 0) {
        if (slack < -kPinTol) infeasible = true;
        g_dropped[r] = 1;
      } else if (g_free[r] == 1) {
        int var;
        double coef;
        find_free(ctx.g_rows_[r], &var, &coef);
        if (var < 0) continue;
        if (coef > 0) {
          const double ub = slack / coef;
          if (ub < -kPinTol) {
            infeasible = true;
          } else if (ub <= kPinTol) {
            pin(var, 0.0);
            g_dropped[r] = 1;
          } else if (ub >= 1.0 - 1e-12) {
            g_dropped[r] = 1;  // the [0,1] box already implies this row
          }
        } else {
          const double lb = slack / coef;
          if (lb > 1.0 + kPinTol) {
            infeasible = true;
          } else if (lb >= 1.0 - kPinTol) {
            pin(var, 1.0);
            g_dropped[r] = 1;
          } else if (lb <= 1e-12) {
            g_dropped[r] = 1;
          }
        }
      }
    } else {
      if (a_dropped[r]) continue;
      const double resid = p.b[r] - a_shift[r];
      if (a_free[r] == 0) {
        if (std::abs(resid) > kPinTol) infeasible = true;
        a_dropped[r] = 1;
      } else if (a_free[r] == 1) {
        int var;
        double coef;
        find_free(ctx.a_rows_[r], &var, &coef);
        if (var < 0) continue;
        const double value = resid / coef;
        if (value < -kPinTol || value > 1.0 + kPinTol) {
          infeasible = true;
        } else {
          pin(var, std::clamp(value, 0.0, 1.0));
          a_dropped[r] = 1;
        }
      }
    }
  }

  LpSolution out;
  if (infeasible) return out;

  std::vector<int> col_of(n, -1);
  std::vector<int> free_vars;
  for (int j = 0; j < n; ++j) {
    if (!fixed[j]) {
      col_of[j] = static_cast<int>(free_vars.size());
      free_vars.push_back(j);
    }
  }
  double constant = 0.0;
  for (int j = 0; j < n; ++j) {
    if (fixed[j]) constant += p.c[j] * fixval[j];
  }

  const int nf = static_cast<int>(free_vars.size());
  if (nf == 0) {
    // Everything pinned; the propagation above already checked each row.
    out.status = LpStatus::Optimal;
    out.x = Eigen::Map<const Eigen::VectorXd>(fixval.data(), n);
    out.objective = constant;
    return out;
  }

  int mr = 0;
  for (int r = 0; r < mg; ++r) mr += !g_dropped[r];
  for (int r = 0; r < ma; ++r) mr += !a_dropped[r];

  detail::BoundedSimplex<double>::Matrix rows(mr, nf);
  detail::BoundedSimplex<double>::Vector rhs(mr), obj(nf);
  std::vector<int> sense(mr);
  rows.setZero();
  int rr = 0;
  for (int r = 0; r < mg; ++r) {
    if (g_dropped[r]) continue;
    for (std::size_t k = 0; k < ctx.g_rows_[r].idx.size(); ++k) {
      const int j = ctx.g_rows_[r].idx[k];
      if (!fixed[j]) rows(rr, col_of[j]) = ctx.g_rows_[r].val[k];
    }
    rhs[rr] = p.h[r] - g_shift[r];
    sense[rr] = 1;
    ++rr;
  }
  for (int r = 0; r < ma; ++r) {
    if (a_dropped[r]) continue;
    for (std::size_t k = 0; k < ctx.a_rows_[r].idx.size(); ++k) {
      const int j = ctx.a_rows_[r].idx[k];
      if (!fixed[j]) rows(rr, col_of[j]) = ctx.a_rows_[r].val[k];
    }
    rhs[rr] = p.b[r] - a_shift[r];
    sense[rr] = 0;
    ++rr;
  }
  for (int k = 0; k < nf; ++k) obj[k] = p.c[free_vars[k]];

  detail::BoundedSimplex<double> core(rows, rhs, sense, obj, kLpTol);
  out.status = core.run();
  out.iterations = core.iterations();
  if (out.status != LpStatus::Optimal) return out;

  const auto xr = core.structural_solution();
  out.x.resize(n);
  for (int j = 0; j < n; ++j) out.x[j] = fixed[j] ? fixval[j] : xr[col_of[j]];
  out.objective = constant + obj.dot(xr);
  return out;
}

LpSolution solve(const LpProblem& p) {
  LpContext ctx(p);
  return solve_with_fixings(ctx, {});
}

LpSolution solve_with_fixings(const LpProblem& p, const std::vector<Fixing>& fixings) {
  LpContext ctx(p);
  return solve_with_fixings(ctx, fixings);
}

}  // namespace lsd
