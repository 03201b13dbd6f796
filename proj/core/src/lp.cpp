// Copyright 2026 The conecalc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conecalc/lp.hpp"

namespace conecalc {

namespace {

// Tableau for min c.z, A z = b, z >= 0, b >= 0. Row m holds reduced costs,
// column n holds the right-hand side / negated objective.
class Tableau {
 public:
  Tableau(RatMat a, RatVec b) : a_(std::move(a)), b_(std::move(b)), basis_(a_.rows(), -1) {}

  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }

  void set_basis(Eigen::Index row, Eigen::Index col) { basis_[static_cast<std::size_t>(row)] = col; }
  Eigen::Index basis(Eigen::Index row) const { return basis_[static_cast<std::size_t>(row)]; }

  void pivot(Eigen::Index prow, Eigen::Index pcol) {
    const Rat p = a_(prow, pcol);
    a_.row(prow) /= p;
    b_(prow) /= p;
    for (Eigen::Index i = 0; i < rows(); ++i) {
      if (i == prow || a_(i, pcol) == 0) continue;
      const Rat f = a_(i, pcol);
      a_.row(i) -= f * a_.row(prow);
      b_(i) -= f * b_(prow);
    }
    basis_[static_cast<std::size_t>(prow)] = pcol;
  }

  // Bland's rule: entering variable = lowest eligible index; leaving row by
  // minimum ratio with ties broken by lowest basis index.
  // Returns Optimal or Unbounded for the objective `cost` (reduced costs are
  // recomputed from scratch each call; fine at this scale).
  LPStatus run(const RatVec& cost, const std::vector<bool>& usable) {
    while (true) {
      RatVec reduced = cost;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        const Eigen::Index bi = basis_[static_cast<std::size_t>(i)];
        if (cost(bi) == 0) continue;
        reduced -= cost(bi) * a_.row(i).transpose();
      }
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < cols(); ++j) {
        if (usable[static_cast<std::size_t>(j)] && reduced(j) < 0) { enter = j; break; }
      }
      if (enter < 0) return LPStatus::Optimal;

      Eigen::Index leave = -1;
      Rat best_ratio;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        if (a_(i, enter) <= 0) continue;
        Rat ratio = b_(i) / a_(i, enter);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return LPStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  Rat objective(const RatVec& cost) const {
    Rat v = 0;
    for (Eigen::Index i = 0; i < rows(); ++i) v += cost(basis_[static_cast<std::size_t>(i)]) * b_(i);
    return v;
  }

  RatVec solution(Eigen::Index nvars) const {
    RatVec z = RatVec::Zero(nvars);
    for (Eigen::Index i = 0; i < rows(); ++i) {
      if (basis_[static_cast<std::size_t>(i)] < nvars) z(basis_[static_cast<std::size_t>(i)]) = b_(i);
    }
    return z;
  }

  const RatMat& a() const { return a_; }
  const RatVec& b() const { return b_; }

 private:
  RatMat a_;
  RatVec b_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LPResult solve_lp(const RatMat& a, const RatVec& b, const std::vector<Relation>& rel,
                  const RatVec& c, const std::vector<bool>& nonneg) {
  const Eigen::Index m = a.rows(), n = a.cols();
  if (b.size() != m || static_cast<Eigen::Index>(rel.size()) != m || c.size() != n ||
      static_cast<Eigen::Index>(nonneg.size()) != n) {
    throw InvalidArgument("solve_lp: dimension mismatch");
  }

  // Standard form: split free variables, add slack/surplus columns.
  std::vector<Eigen::Index> pos_col(n), neg_col(n, -1);
  Eigen::Index ncols = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    if (!nonneg[static_cast<std::size_t>(j)]) neg_col[j] = ncols++;
  }
  std::vector<Eigen::Index> slack_col(m, -1);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (rel[static_cast<std::size_t>(i)] != Relation::Eq) slack_col[i] = ncols++;
  }
  const Eigen::Index nstruct = ncols;
  const Eigen::Index total = nstruct + m;  // + artificials

  RatMat sa = RatMat::Zero(m, total);
  RatVec sb = b;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      sa(i, pos_col[j]) = a(i, j);
      if (neg_col[j] >= 0) sa(i, neg_col[j]) = -a(i, j);
    }
    if (rel[static_cast<std::size_t>(i)] == Relation::Ge) sa(i, slack_col[i]) = -1;
    if (rel[static_cast<std::size_t>(i)] == Relation::Le) sa(i, slack_col[i]) = 1;
    if (sb(i) < 0) {
      sa.row(i) = -sa.row(i);
      sb(i) = -sb(i);
    }
    sa(i, nstruct + i) = 1;
  }

  Tableau tab(sa, sb);
  for (Eigen::Index i = 0; i < m; ++i) tab.set_basis(i, nstruct + i);

  std::vector<bool> usable(static_cast<std::size_t>(total), true);
  RatVec phase1 = RatVec::Zero(total);
  for (Eigen::Index i = 0; i < m; ++i) phase1(nstruct + i) = 1;
  tab.run(phase1, usable);
  if (tab.objective(phase1) != 0) return {LPStatus::Infeasible, Rat(0), RatVec()};

  // Drive leftover artificials out of the basis where possible.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (tab.basis(i) < nstruct) continue;
    for (Eigen::Index j = 0; j < nstruct; ++j) {
      if (tab.a()(i, j) != 0) {
        tab.pivot(i, j);
        break;
      }
    }
  }
  for (Eigen::Index j = nstruct; j < total; ++j) usable[static_cast<std::size_t>(j)] = false;

  RatVec phase2 = RatVec::Zero(total);
  for (Eigen::Index j = 0; j < n; ++j) {
    phase2(pos_col[j]) = c(j);
    if (neg_col[j] >= 0) phase2(neg_col[j]) = -c(j);
  }
  // A basic artificial stuck at zero (redundant row) keeps cost 0 and is
  // never entered; harmless.
  if (tab.run(phase2, usable) == LPStatus::Unbounded) return {LPStatus::Unbounded, Rat(0), RatVec()};

  RatVec z = tab.solution(nstruct);
  RatVec x(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    x(j) = z(pos_col[j]);
    if (neg_col[j] >= 0) x(j) -= z(neg_col[j]);
  }
  return {LPStatus::Optimal, tab.objective(phase2), std::move(x)};
}

LPResult solve_lp(const RatMat& a, const RatVec& b, const std::vector<Relation>& rel, const RatVec& c) {
  return solve_lp(a, b, rel, c, std::vector<bool>(static_cast<std::size_t>(a.cols()), false));
}

bool lp_feasible(const RatMat& a, const RatVec& b, const std::vector<Relation>& rel) {
  RatVec c = RatVec::Zero(a.cols());
  return solve_lp(a, b, rel, c).status == LPStatus::Optimal;
}

}  // namespace conecalc
