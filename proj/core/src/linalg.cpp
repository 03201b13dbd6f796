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

#include "conecalc/linalg.hpp"

#include <algorithm>

namespace conecalc {

std::vector<Eigen::Index> rref_in_place(RatMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) { pivot = i; break; }
    }
    if (pivot < 0) continue;
    m.row(r).swap(m.row(pivot));
    Rat lead = m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= lead;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Eigen::Index rank(const RatMat& m) {
  RatMat copy = m;
  return static_cast<Eigen::Index>(rref_in_place(copy).size());
}

std::vector<RatVec> kernel_basis(const RatMat& a) {
  RatMat m = a;
  std::vector<Eigen::Index> pivots = rref_in_place(m);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index p : pivots) is_pivot[p] = true;

  std::vector<RatVec> raw;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v = RatVec::Zero(cols);
    v(free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i]) = -m(static_cast<Eigen::Index>(i), free);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;

  // Canonicalize: RREF of the stacked basis.
  RatMat stacked(static_cast<Eigen::Index>(raw.size()), cols);
  for (std::size_t i = 0; i < raw.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = raw[i].transpose();
  std::vector<Eigen::Index> kp = rref_in_place(stacked);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < kp.size(); ++i) out.push_back(stacked.row(static_cast<Eigen::Index>(i)).transpose());
  return out;
}

std::optional<AffineSolution> solve_affine(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.size()) throw InvalidArgument("solve_affine: dimension mismatch");
  const Eigen::Index cols = a.cols();
  RatMat aug(a.rows(), cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // row (0 ... 0 | 1)

  RatVec x = RatVec::Zero(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Eigen::Index>(i), cols);
  return AffineSolution{std::move(x), kernel_basis(a)};
}

AffineSubspace::AffineSubspace(RatVec base, std::vector<RatVec> directions) : base_(std::move(base)) {
  for (const RatVec& d : directions) {
    if (d.size() != base_.size()) throw InvalidArgument("AffineSubspace: direction dimension mismatch");
  }
  if (!directions.empty()) {
    RatMat stacked(static_cast<Eigen::Index>(directions.size()), base_.size());
    for (std::size_t i = 0; i < directions.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = directions[i].transpose();
    std::vector<Eigen::Index> pivots = rref_in_place(stacked);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      dirs_.push_back(stacked.row(static_cast<Eigen::Index>(i)).transpose());
      // Zero the base point at each pivot coordinate; this picks the unique
      // representative with vanishing pivot entries.
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      Rat f = base_(pivots[i]);
      if (f != 0) base_ -= f * dirs_[i];
    }
  }
}

bool AffineSubspace::contains(const RatVec& x) const {
  if (x.size() != base_.size()) return false;
  if (dirs_.empty()) return x == base_;
  RatMat m(base_.size(), static_cast<Eigen::Index>(dirs_.size()));
  for (std::size_t i = 0; i < dirs_.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = dirs_[i];
  return solve_affine(m, x - base_).has_value();
}

bool AffineSubspace::operator==(const AffineSubspace& other) const {
  if (base_ != other.base_ || dirs_.size() != other.dirs_.size()) return false;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    if (dirs_[i] != other.dirs_[i]) return false;
  }
  return true;
}

AffineSubspace AffineSubspace::map(const RatMat& lambda) const {
  if (lambda.cols() != ambient_dim()) throw InvalidArgument("AffineSubspace::map: dimension mismatch");
  std::vector<RatVec> dirs;
  dirs.reserve(dirs_.size());
  for (const RatVec& d : dirs_) dirs.push_back(lambda * d);
  return AffineSubspace(lambda * base_, std::move(dirs));
}

AffineSubspace affine_hull(const std::vector<RatVec>& points) {
  if (points.empty()) throw InvalidArgument("affine_hull: empty point set");
  std::vector<RatVec> dirs;
  dirs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(points[i] - points[0]);
  return AffineSubspace(points[0], std::move(dirs));
}

}  // namespace conecalc
