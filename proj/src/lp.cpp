#include "qtoric/lp.hpp"

#include <algorithm>
#include <limits>

namespace qtoric {

namespace {

// Dictionary simplex (Chvatal). Variable ids: 0..nvars-1 structural,
// nvars..nvars+m-1 slacks, nvars+m the phase-1 auxiliary.
class Simplex {
 public:
  Simplex(const RatMatrix& a, const RatVec& b) : m_(a.rows()), n_(a.cols()) {
    aux_id_ = n_ + m_;
    nonbasic_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
    basic_.resize(m_);
    tab_ = RatMatrix(m_, n_ + 1);
    rhs_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      for (std::size_t j = 0; j < n_; ++j) tab_(i, j) = a(i, j);
      rhs_[i] = b[i];
    }
  }

  // Returns false when infeasible.
  bool phase1() {
    std::size_t worst = m_;
    for (std::size_t i = 0; i < m_; ++i)
      if (rhs_[i] < 0 && (worst == m_ || rhs_[i] < rhs_[worst])) worst = i;
    if (worst == m_) {
      ncols_ = n_;
      return true;
    }
    // enter the auxiliary variable: basic_i = rhs_i - (coeffs) + x0
    ncols_ = n_ + 1;
    nonbasic_.push_back(aux_id_);
    for (std::size_t i = 0; i < m_; ++i) tab_(i, n_) = -1;
    pivot(worst, n_);
    // maximize -x0
    RatVec obj(ncols_);
    Rat z0 = 0;
    objective_from(RatVec(), obj, /*aux_weight=*/Rat(-1), z0);
    if (!run(obj, z0)) return false;  // cannot happen: objective bounded by 0
    if (z0 != 0) return false;
    // drive x0 out of the basis if it sits there at value 0
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] == aux_id_) {
        std::size_t j = 0;
        while (j < ncols_ && tab_(i, j) == 0) ++j;
        pivot(i, j);
        break;
      }
    // remove the x0 column
    std::size_t aux_col = ncols_;
    for (std::size_t j = 0; j < ncols_; ++j)
      if (nonbasic_[j] == aux_id_) aux_col = j;
    if (aux_col != ncols_) {
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = aux_col; j + 1 < ncols_; ++j) tab_(i, j) = tab_(i, j + 1);
      nonbasic_.erase(nonbasic_.begin() + static_cast<long>(aux_col));
    }
    --ncols_;
    return true;
  }

  // Maximizes c (over structural variables). Returns false when unbounded.
  bool phase2(const RatVec& c, Rat& opt) {
    RatVec obj(ncols_);
    opt = 0;
    objective_from(c, obj, Rat(0), opt);
    // constant part from basic structural variables
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] < n_ && basic_[i] < c.size() && c[basic_[i]] != 0) {
        opt += c[basic_[i]] * rhs_[i];
        for (std::size_t j = 0; j < ncols_; ++j) obj[j] -= c[basic_[i]] * tab_(i, j);
      }
    return run(obj, opt);
  }

  RatVec solution(std::size_t nvars) const {
    RatVec x(nvars, Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] < nvars) x[basic_[i]] = rhs_[i];
    return x;
  }

 private:
  void objective_from(const RatVec& c, RatVec& obj, Rat aux_weight, Rat& z) {
    for (std::size_t j = 0; j < ncols_; ++j) {
      std::size_t id = nonbasic_[j];
      if (id == aux_id_)
        obj[j] = aux_weight;
      else if (id < c.size())
        obj[j] = c[id];
      else
        obj[j] = 0;
    }
    if (aux_weight != 0)
      for (std::size_t i = 0; i < m_; ++i)
        if (basic_[i] == aux_id_) {
          z += aux_weight * rhs_[i];
          for (std::size_t j = 0; j < ncols_; ++j) obj[j] -= aux_weight * tab_(i, j);
        }
  }

  // Bland: entering = smallest variable id with positive reduced cost;
  // leaving = min ratio, ties by smallest basic id.
  bool run(RatVec& obj, Rat& z) {
    for (;;) {
      std::size_t enter = ncols_;
      std::size_t enter_id = std::numeric_limits<std::size_t>::max();
      for (std::size_t j = 0; j < ncols_; ++j)
        if (obj[j] > 0 && nonbasic_[j] < enter_id) {
          enter = j;
          enter_id = nonbasic_[j];
        }
      if (enter == ncols_) return true;
      std::size_t leave = m_;
      Rat best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_(i, enter) <= 0) continue;
        Rat ratio = rhs_[i] / tab_(i, enter);
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;  // unbounded
      Rat coeff = obj[enter];
      pivot(leave, enter);
      // rewrite objective through the new dictionary row
      z += coeff * rhs_[leave];
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (j == enter)
          obj[j] = -coeff * tab_(leave, j);
        else
          obj[j] -= coeff * tab_(leave, j);
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rat p = tab_(r, c);
    std::size_t out_id = basic_[r], in_id = nonbasic_[c];
    rhs_[r] /= p;
    for (std::size_t j = 0; j < ncols_max(); ++j) tab_(r, j) /= p;
    tab_(r, c) = Rat(1) / p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || tab_(i, c) == 0) continue;
      Rat f = tab_(i, c);
      rhs_[i] -= f * rhs_[r];
      for (std::size_t j = 0; j < ncols_max(); ++j) tab_(i, j) -= f * tab_(r, j);
      tab_(i, c) = -f / p;
    }
    basic_[r] = in_id;
    nonbasic_[c] = out_id;
  }

  std::size_t ncols_max() const { return ncols_; }

  std::size_t m_, n_;
  std::size_t ncols_ = 0;
  std::size_t aux_id_;
  std::vector<std::size_t> basic_, nonbasic_;
  RatMatrix tab_;
  RatVec rhs_;
};

}  // namespace

LpResult lp_maximize(const RatMatrix& a, const RatVec& b, const RatVec& c) {
  // split free variables: x_k = u_k - w_k with u, w >= 0
  std::size_t m = a.rows(), n = a.cols();
  RatMatrix a2(m, 2 * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a2(i, j) = a(i, j);
      a2(i, n + j) = -a(i, j);
    }
  RatVec c2(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    c2[j] = c[j];
    c2[n + j] = -c[j];
  }
  Simplex s(a2, b);
  if (!s.phase1()) return {LpStatus::Infeasible, Rat(0), {}};
  Rat opt;
  if (!s.phase2(c2, opt)) return {LpStatus::Unbounded, Rat(0), {}};
  RatVec y = s.solution(2 * n);
  RatVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  return {LpStatus::Optimal, opt, x};
}

Feasibility lp_feasible(const StrictSystem& sys) {
  std::size_t n = sys.dim;
  bool any_strict = false;
  for (const auto& r : sys.rows) any_strict |= r.strict;
  // variables: x (n free), t (last). Constraints as A z <= b.
  std::size_t m = sys.rows.size() + 1;
  RatMatrix a(m, n + 1);
  RatVec b(m), c(n + 1, Rat(0));
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& r = sys.rows[i];
    for (std::size_t j = 0; j < n; ++j) a(i, j) = -r.normal[j];
    a(i, n) = r.strict ? Rat(1) : Rat(0);
    b[i] = r.offset;
  }
  a(m - 1, n) = 1;  // t <= 1
  b[m - 1] = 1;
  c[n] = 1;
  LpResult res = lp_maximize(a, b, c);
  if (res.status == LpStatus::Infeasible) return {false, {}};
  if (any_strict && res.objective <= 0) return {false, {}};
  RatVec witness(res.x.begin(), res.x.begin() + static_cast<long>(n));
  return {true, witness};
}

LpResult lp_optimize_closed(const StrictSystem& sys, const RatVec& objective, bool maximize) {
  std::size_t n = sys.dim;
  std::size_t m = sys.rows.size();
  RatMatrix a(m, n);
  RatVec b(m), c(n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = sys.rows[i];
    for (std::size_t j = 0; j < n; ++j) a(i, j) = -r.normal[j];
    b[i] = r.offset;
  }
  for (std::size_t j = 0; j < n; ++j) c[j] = maximize ? objective[j] : -objective[j];
  LpResult res = lp_maximize(a, b, c);
  if (res.status == LpStatus::Optimal && !maximize) res.objective = -res.objective;
  return res;
}

}  // namespace qtoric
