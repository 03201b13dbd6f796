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

#include "conecalc/lattice.hpp"

namespace conecalc {

namespace {

// Row-style HNF of the matrix whose rows are `rows`; zero rows dropped.
// Column positions of the pivots are strictly increasing.
std::vector<IntVec> hnf_rows(std::vector<IntVec> rows, Eigen::Index cols) {
  std::vector<IntVec> basis;
  Eigen::Index row_start = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    // Euclidean elimination in column c among rows[row_start..].
    while (true) {
      Eigen::Index nonzero = -1;
      for (std::size_t i = row_start; i < rows.size(); ++i) {
        if (rows[i](c) != 0 && (nonzero < 0 || boost::multiprecision::abs(rows[i](c)) <
                                                   boost::multiprecision::abs(rows[static_cast<std::size_t>(nonzero)](c)))) {
          nonzero = static_cast<Eigen::Index>(i);
        }
      }
      if (nonzero < 0) break;
      std::swap(rows[static_cast<std::size_t>(row_start)], rows[static_cast<std::size_t>(nonzero)]);
      const Int pivot = rows[static_cast<std::size_t>(row_start)](c);
      bool reduced = true;
      for (std::size_t i = row_start + 1; i < rows.size(); ++i) {
        if (rows[i](c) == 0) continue;
        Int q = floor_div(rows[i](c), pivot);
        rows[i] -= q * rows[static_cast<std::size_t>(row_start)];
        if (rows[i](c) != 0) reduced = false;
      }
      if (reduced) {
        if (pivot < 0) rows[static_cast<std::size_t>(row_start)] = -rows[static_cast<std::size_t>(row_start)];
        ++row_start;
        break;
      }
    }
  }
  for (Eigen::Index i = 0; i < row_start; ++i) basis.push_back(rows[static_cast<std::size_t>(i)]);

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Eigen::Index pc = 0;
    while (basis[i](pc) == 0) ++pc;
    for (std::size_t j = 0; j < i; ++j) {
      Int q = floor_div(basis[j](pc), basis[i](pc));
      if (q != 0) basis[j] -= q * basis[i];
    }
  }
  return basis;
}

}  // namespace

IntLattice IntLattice::from_generators(const std::vector<IntVec>& generators, Eigen::Index ambient_dim) {
  for (const IntVec& g : generators) {
    if (g.size() != ambient_dim) throw InvalidArgument("IntLattice: generator dimension mismatch");
  }
  return IntLattice(hnf_rows(generators, ambient_dim), ambient_dim);
}

bool IntLattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

std::optional<IntVec> IntLattice::coordinates(const IntVec& v) const {
  if (v.size() != ambient_dim_) return std::nullopt;
  IntVec rem = v;
  IntVec coeff(static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Eigen::Index pc = 0;
    while (basis_[i](pc) == 0) ++pc;
    const Int& pivot = basis_[i](pc);
    if (rem(pc) % pivot != 0) return std::nullopt;
    Int q = rem(pc) / pivot;
    rem -= q * basis_[i];
    coeff(static_cast<Eigen::Index>(i)) = q;
  }
  for (Eigen::Index i = 0; i < rem.size(); ++i) {
    if (rem(i) != 0) return std::nullopt;
  }
  return coeff;
}

bool IntLattice::operator==(const IntLattice& other) const {
  if (ambient_dim_ != other.ambient_dim_ || basis_.size() != other.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] != other.basis_[i]) return false;
  }
  return true;
}

IntLattice hermite_basis(const std::vector<IntVec>& vectors, Eigen::Index ambient_dim) {
  return IntLattice::from_generators(vectors, ambient_dim);
}

std::vector<IntVec> integer_kernel(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  // Column HNF on a working copy, tracking the unimodular transform U with
  // work = m * U. Columns of U matching zero columns of work span the kernel.
  IntMat work = m;
  IntMat u = IntMat::Identity(cols, cols);

  Eigen::Index col_start = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index j = col_start; j < cols; ++j) {
        if (work(r, j) != 0 && (best < 0 || boost::multiprecision::abs(work(r, j)) <
                                                boost::multiprecision::abs(work(r, best)))) {
          best = j;
        }
      }
      if (best < 0) break;
      work.col(col_start).swap(work.col(best));
      u.col(col_start).swap(u.col(best));
      const Int pivot = work(r, col_start);
      bool reduced = true;
      for (Eigen::Index j = col_start + 1; j < cols; ++j) {
        if (work(r, j) == 0) continue;
        Int q = floor_div(work(r, j), pivot);
        work.col(j) -= q * work.col(col_start);
        u.col(j) -= q * u.col(col_start);
        if (work(r, j) != 0) reduced = false;
      }
      if (reduced) {
        ++col_start;
        break;
      }
    }
  }

  std::vector<IntVec> kernel;
  for (Eigen::Index j = col_start; j < cols; ++j) {
    bool zero = true;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (work(r, j) != 0) { zero = false; break; }
    }
    if (zero) kernel.push_back(u.col(j));
  }
  return hnf_rows(kernel, cols);
}

std::vector<IntVec> lattice_subspace_intersection(const std::vector<RatVec>& directions, Eigen::Index ambient_dim) {
  if (directions.empty()) return {};
  // Equations cutting out the span, cleared to integers.
  RatMat stacked(static_cast<Eigen::Index>(directions.size()), ambient_dim);
  for (std::size_t i = 0; i < directions.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = directions[i].transpose();
  std::vector<RatVec> equations = kernel_basis(stacked);
  if (equations.empty()) {
    // Full span: the intersection is all of Z^n.
    std::vector<IntVec> id;
    for (Eigen::Index i = 0; i < ambient_dim; ++i) {
      IntVec e = IntVec::Zero(ambient_dim);
      e(i) = 1;
      id.push_back(std::move(e));
    }
    return id;
  }
  IntMat eq(static_cast<Eigen::Index>(equations.size()), ambient_dim);
  for (std::size_t i = 0; i < equations.size(); ++i) {
    eq.row(static_cast<Eigen::Index>(i)) = primitive(equations[i]).transpose();
  }
  return integer_kernel(eq);
}

}  // namespace conecalc
