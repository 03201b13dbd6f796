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

#include "conecalc/dioph.hpp"

#include <algorithm>

namespace conecalc {

namespace {

constexpr long kSearchCap = 20000000;  // hard stop for the denominator sweeps

std::vector<RatVec> point_directions(const SymbolicPoint& x) {
  std::vector<RatVec> dirs;
  dirs.reserve(x.terms().size());
  for (const auto& [sym, dir] : x.terms()) dirs.push_back(dir);
  return dirs;
}

// Gaussian elimination with a rational matrix and symbolic right-hand side.
std::optional<std::vector<SymbolicNumber>> solve_symbolic(RatMat a, std::vector<SymbolicNumber> rhs) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || static_cast<Eigen::Index>(rhs.size()) != n) return std::nullopt;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = c; r < n; ++r) {
      if (a(r, c) != 0) { pivot = r; break; }
    }
    if (pivot < 0) return std::nullopt;  // singular
    if (pivot != c) {
      a.row(c).swap(a.row(pivot));
      std::swap(rhs[static_cast<std::size_t>(c)], rhs[static_cast<std::size_t>(pivot)]);
    }
    Rat lead = a(c, c);
    a.row(c) /= lead;
    rhs[static_cast<std::size_t>(c)] = rhs[static_cast<std::size_t>(c)] * (Rat(1) / lead);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rat f = a(r, c);
      a.row(r) -= f * a.row(c);
      rhs[static_cast<std::size_t>(r)] = rhs[static_cast<std::size_t>(r)] - rhs[static_cast<std::size_t>(c)] * f;
    }
  }
  return rhs;
}

SymbolicNumber abs_symbolic(const SymbolicNumber& v) { return v.sign() >= 0 ? v : -v; }

SymbolicNumber sup_norm_symbolic(const std::vector<SymbolicNumber>& v) {
  SymbolicNumber best = abs_symbolic(v.at(0));
  for (std::size_t i = 1; i < v.size(); ++i) {
    SymbolicNumber a = abs_symbolic(v[i]);
    if ((a - best).sign() > 0) best = a;
  }
  return best;
}

// Cheap screen: certainly |v_i| >= bound for some i (so the exact check can
// be skipped). Never rejects a vector that satisfies the bound.
bool certainly_over(const std::vector<SymbolicNumber>& v, const Rat& bound) {
  for (const SymbolicNumber& c : v) {
    auto [lo, hi] = c.enclosure(64);
    Rat lower = lo > 0 ? lo : (hi < 0 ? Rat(-hi) : Rat(0));
    if (lower >= bound) return true;
  }
  return false;
}

struct DirectionFrame {
  RatMat basis;      // n x m rational matrix, columns span the irrational directions
  IntMat basis_int;  // same columns, integral
  Eigen::Index m = 0;
};

DirectionFrame direction_frame(const SymbolicPoint& x) {
  DirectionFrame frame;
  const Eigen::Index n = x.ambient_dim();
  std::vector<RatVec> dirs = point_directions(x);
  RatMat stacked(static_cast<Eigen::Index>(dirs.size()), n);
  for (std::size_t i = 0; i < dirs.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = dirs[i].transpose();
  std::vector<Eigen::Index> pivots = rref_in_place(stacked);
  frame.m = static_cast<Eigen::Index>(pivots.size());
  frame.basis = RatMat(n, frame.m);
  frame.basis_int = IntMat(n, frame.m);
  for (Eigen::Index j = 0; j < frame.m; ++j) {
    IntVec col = primitive(RatVec(stacked.row(j).transpose()));
    frame.basis_int.col(j) = col;
    frame.basis.col(j) = to_rat(col);
  }
  return frame;
}

// Coordinates of the irrational part of x in the frame: x = base + B * c.
std::vector<SymbolicNumber> frame_coordinates(const SymbolicPoint& x, const DirectionFrame& frame) {
  std::vector<SymbolicNumber> c(static_cast<std::size_t>(frame.m), SymbolicNumber(Rat(0)));
  for (const auto& [sym, dir] : x.terms()) {
    auto gamma = solve_affine(frame.basis, dir);
    if (!gamma) throw std::logic_error("frame_coordinates: direction outside the frame span");
    for (Eigen::Index j = 0; j < frame.m; ++j) {
      c[static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(j)] + SymbolicNumber(Rat(0), {{sym, gamma->point(j)}});
    }
  }
  return c;
}

Rat row_sup_norm(const IntMat& m) {
  Rat best(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Rat sum(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j) sum += Rat(boost::multiprecision::abs(m(i, j)));
    best = std::max(best, sum);
  }
  return best;
}

struct Candidate {
  Int q;        // denominator stage
  RatVec coord; // rational point p/q in frame coordinates
};

// Try to write c as a strictly positive convex combination of a subset of
// candidate coordinate points that includes the newest one. Returns the
// chosen subset indices and exact weights.
std::optional<std::pair<std::vector<std::size_t>, std::vector<SymbolicNumber>>> try_surround(
    const std::vector<Candidate>& candidates, const std::vector<SymbolicNumber>& c, Eigen::Index m) {
  if (candidates.size() < static_cast<std::size_t>(m) + 1) return std::nullopt;
  const std::size_t newest = candidates.size() - 1;
  std::vector<std::size_t> others(newest);
  for (std::size_t i = 0; i < newest; ++i) others[i] = i;

  std::vector<std::size_t> pick(static_cast<std::size_t>(m));
  std::optional<std::pair<std::vector<std::size_t>, std::vector<SymbolicNumber>>> found;
  auto attempt = [&](const std::vector<std::size_t>& subset) -> bool {
    std::vector<std::size_t> all = subset;
    all.push_back(newest);
    RatMat a(m + 1, m + 1);
    for (std::size_t j = 0; j < all.size(); ++j) {
      a(0, static_cast<Eigen::Index>(j)) = 1;
      for (Eigen::Index i = 0; i < m; ++i) a(i + 1, static_cast<Eigen::Index>(j)) = candidates[all[j]].coord(i);
    }
    std::vector<SymbolicNumber> rhs;
    rhs.emplace_back(Rat(1));
    for (Eigen::Index i = 0; i < m; ++i) rhs.push_back(c[static_cast<std::size_t>(i)]);
    auto sol = solve_symbolic(a, rhs);
    if (!sol) return false;
    for (const SymbolicNumber& w : *sol) {
      if (w.sign() <= 0) return false;
    }
    found = {all, *sol};
    return true;
  };
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
    if (depth == pick.size()) return attempt(pick);
    for (std::size_t i = start; i + (pick.size() - depth) <= others.size(); ++i) {
      pick[depth] = others[i];
      if (self(self, i + 1, depth + 1)) return true;
    }
    return false;
  };
  if (m == 0) {
    attempt({});
  } else {
    rec(rec, 0, 0);
  }
  return found;
}

void append_norm_bound(ApproxCertificate& cert, const std::string& label, const SymbolicPoint& diff,
                       const Rat& bound) {
  if (!diff.sup_norm_less_than(bound)) {
    throw std::logic_error("certificate bound violated: " + label);
  }
  unsigned bits = 128;
  auto [lo, hi] = diff.sup_norm_enclosure(bits);
  while (hi >= bound) {
    bits *= 2;
    if (bits > (1u << 20)) throw std::logic_error("certificate enclosure refinement failed: " + label);
    std::tie(lo, hi) = diff.sup_norm_enclosure(bits);
  }
  cert.bounds.push_back({label, bound, lo, hi});
}

void verify_convex_identity(const SymbolicPoint& x, const ApproxCertificate& cert) {
  SymbolicNumber total(Rat(0));
  for (const SymbolicNumber& r : cert.weights) total = total + r;
  if (!(total == SymbolicNumber(Rat(1)))) throw std::logic_error("certificate weights do not sum to 1");
  for (Eigen::Index i = 0; i < x.ambient_dim(); ++i) {
    SymbolicNumber acc(Rat(0));
    for (std::size_t j = 0; j < cert.points.size(); ++j) {
      acc = acc + cert.weights[j] * cert.points[j](i);
    }
    if (!(acc == x.coordinate(i))) throw std::logic_error("certificate convex identity violated");
  }
}

}  // namespace

AffineSubspace smallest_rational_affine(const SymbolicPoint& x) {
  return AffineSubspace(x.base(), point_directions(x));
}

AffineSubspace pushforward_subspace(const RatMat& lambda, const SymbolicPoint& x) {
  return smallest_rational_affine(x.apply(lambda));
}

ClosureStructure closure_structure(const SymbolicPoint& v, const IntLattice& lattice) {
  const Eigen::Index n = v.ambient_dim();
  if (lattice.ambient_dim() != n) throw InvalidArgument("closure_structure: dimension mismatch");
  if (lattice.rank() != n) throw InvalidArgument("closure_structure: lattice must span the ambient space");

  // Work in lattice coordinates: v = Bt * c with B rows the HNF basis.
  RatMat bt(n, n);
  for (Eigen::Index j = 0; j < n; ++j) bt.col(j) = to_rat(lattice.basis()[static_cast<std::size_t>(j)]);
  RatMat bt_inv = bt.inverse();
  SymbolicPoint c = v.apply(bt_inv);

  AffineSubspace w = smallest_rational_affine(c);
  const Eigen::Index m = w.dim();

  ClosureStructure out;
  out.dense = (m == n);

  // Ambient basis of V0.
  std::vector<RatVec> ambient_dirs;
  for (const RatVec& d : w.directions()) ambient_dirs.push_back(bt * d);
  AffineSubspace v0(RatVec::Zero(n), ambient_dirs);
  out.subspace_basis = v0.directions();

  if (out.dense) {
    out.component_order = 1;
    out.cosets.push_back(RatVec::Zero(n));
    return out;
  }

  // Functionals vanishing on V0 (in lattice coordinates).
  RatMat dirs_stacked(m, n);
  for (Eigen::Index i = 0; i < m; ++i) dirs_stacked.row(i) = w.directions()[static_cast<std::size_t>(i)].transpose();
  std::vector<RatVec> functionals =
      m == 0 ? [&] {
        std::vector<RatVec> id;
        for (Eigen::Index i = 0; i < n; ++i) {
          RatVec e = RatVec::Zero(n);
          e(i) = 1;
          id.push_back(e);
        }
        return id;
      }()
             : kernel_basis(dirs_stacked);
  const Eigen::Index e = static_cast<Eigen::Index>(functionals.size());
  IntMat emat(e, n);
  for (Eigen::Index i = 0; i < e; ++i) emat.row(i) = primitive(functionals[static_cast<std::size_t>(i)]).transpose();
  RatMat emat_r(e, n);
  for (Eigen::Index i = 0; i < e; ++i)
    for (Eigen::Index j = 0; j < n; ++j) emat_r(i, j) = Rat(emat(i, j));

  // Image of Z^n in the quotient is the lattice spanned by the columns of E.
  std::vector<IntVec> image_gens;
  for (Eigen::Index j = 0; j < n; ++j) image_gens.push_back(emat.col(j));
  IntLattice image = IntLattice::from_generators(image_gens, e);
  RatMat ht(e, e);
  for (Eigen::Index j = 0; j < e; ++j) ht.col(j) = to_rat(image.basis()[static_cast<std::size_t>(j)]);
  RatMat ht_inv = ht.inverse();

  // Component order: smallest q with q * w0 in Z^n + V0.
  RatVec y = emat_r * w.base();
  RatVec alpha = ht_inv * y;
  Int q = denominator_lcm(alpha);
  out.component_order = q;

  // Section of the quotient map and projection along V0 for canonical
  // representatives.
  RatMat section(n, e);
  for (Eigen::Index j = 0; j < e; ++j) {
    RatVec rhs = RatVec::Zero(e);
    rhs(j) = 1;
    auto sol = solve_affine(emat_r, rhs);
    if (!sol) throw std::logic_error("closure_structure: quotient section failed");
    section.col(j) = sol->point;
  }

  auto canonical = [&](const RatVec& t_lattice_coords) {
    RatVec img = emat_r * t_lattice_coords;
    RatVec a = ht_inv * img;
    for (Eigen::Index i = 0; i < e; ++i) a(i) -= Rat(rat_floor(a(i)));
    RatVec lifted = section * (ht * a);
    // Zero the V0 component (pivot coordinates of the direction basis).
    for (const RatVec& d : w.directions()) {
      Eigen::Index pivot = 0;
      while (d(pivot) == 0) ++pivot;
      lifted -= lifted(pivot) * d;
    }
    return RatVec(bt * lifted);
  };

  for (Int j = 0; j < q; ++j) {
    out.cosets.push_back(canonical(RatVec(Rat(j) * w.base())));
  }
  std::sort(out.cosets.begin(), out.cosets.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  out.cosets.erase(
      std::unique(out.cosets.begin(), out.cosets.end(), [](const RatVec& a, const RatVec& b) { return a == b; }),
      out.cosets.end());
  return out;
}

bool in_lattice_plus_subspace(const RatVec& y, const IntLattice& lattice,
                              const std::vector<RatVec>& subspace_dirs) {
  const Eigen::Index n = y.size();
  if (lattice.ambient_dim() != n) throw InvalidArgument("in_lattice_plus_subspace: dimension mismatch");
  // Quotient by the subspace via vanishing functionals, then test lattice
  // membership of the image.
  std::vector<RatVec> functionals;
  if (subspace_dirs.empty()) {
    for (Eigen::Index i = 0; i < n; ++i) {
      RatVec e = RatVec::Zero(n);
      e(i) = 1;
      functionals.push_back(e);
    }
  } else {
    RatMat stacked(static_cast<Eigen::Index>(subspace_dirs.size()), n);
    for (std::size_t i = 0; i < subspace_dirs.size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = subspace_dirs[i].transpose();
    functionals = kernel_basis(stacked);
  }
  if (functionals.empty()) return true;  // the subspace is everything
  const Eigen::Index e = static_cast<Eigen::Index>(functionals.size());
  RatMat emat(e, n);
  for (Eigen::Index i = 0; i < e; ++i) emat.row(i) = functionals[static_cast<std::size_t>(i)].transpose();

  // Clear denominators so the image lattice is integral.
  RatVec img = emat * y;
  Int scale = 1;
  std::vector<RatVec> image_gens;
  for (const IntVec& b : lattice.basis()) image_gens.push_back(emat * to_rat(b));
  for (const RatVec& g : image_gens) scale = boost::multiprecision::lcm(scale, denominator_lcm(g));
  scale = boost::multiprecision::lcm(scale, denominator_lcm(img));
  std::vector<IntVec> scaled;
  for (const RatVec& g : image_gens) scaled.push_back(to_int(RatVec(Rat(scale) * g)));
  IntLattice image = IntLattice::from_generators(scaled, e);
  RatVec target = Rat(scale) * img;
  if (denominator_lcm(target) != 1) return false;
  return image.contains(to_int(target));
}

ApproxCertificate approximate_simplex(const SymbolicPoint& x, const Int& k, const Rat& eps) {
  if (k < 1) throw InvalidArgument("approximate_simplex: k must be positive");
  if (eps <= 0) throw InvalidArgument("approximate_simplex: eps must be positive");
  if (x.has_declared_symbol()) {
    throw InvalidArgument("approximate_simplex: declared symbols carry no numeric enclosure");
  }

  ApproxCertificate cert;
  if (x.is_rational()) {
    Int t = denominator_lcm(x.base());
    cert.points.push_back(x.base());
    cert.multipliers.push_back(k * t);
    cert.weights.emplace_back(Rat(1));
    cert.bounds.push_back({"|x - w1|", eps / Rat(k * t), Rat(0), Rat(0)});
    return cert;
  }

  const DirectionFrame frame = direction_frame(x);
  const std::vector<SymbolicNumber> c = frame_coordinates(x, frame);
  const Int stride = denominator_lcm(x.base());
  const Rat norm_bound = row_sup_norm(frame.basis_int);
  const Rat theta = eps / (2 * Rat(k) * norm_bound);

  std::vector<Candidate> candidates;
  std::optional<SymbolicNumber> record;
  // In one irrational dimension the norm records are exactly the
  // continued-fraction convergents and alternate sides of x, so restricting
  // to records terminates and pins down the canonical output. In higher
  // rank records need not span, so every sub-threshold denominator counts.
  bool records_only = frame.m == 1;
  int records_without_success = 0;

  for (long step = 1; step <= kSearchCap; ++step) {
    Int q = stride * step;
    // Nearest rational point with denominator q and its fractional offset.
    IntVec p(frame.m);
    std::vector<SymbolicNumber> f(static_cast<std::size_t>(frame.m));
    for (Eigen::Index i = 0; i < frame.m; ++i) {
      SymbolicNumber scaled = c[static_cast<std::size_t>(i)] * Rat(q);
      p(i) = scaled.round();
      f[static_cast<std::size_t>(i)] = scaled - SymbolicNumber(Rat(p(i)));
    }
    if (certainly_over(f, theta)) continue;
    SymbolicNumber norm = sup_norm_symbolic(f);
    if ((SymbolicNumber(theta) - norm).sign() <= 0) continue;
    if (records_only) {
      if (record && (norm - *record).sign() >= 0) continue;
      record = norm;
      ++records_without_success;
      if (records_without_success > 40) records_only = false;
    }

    RatVec coord(frame.m);
    for (Eigen::Index i = 0; i < frame.m; ++i) coord(i) = Rat(p(i), q);
    candidates.push_back({q, coord});
    if (candidates.size() > 12) candidates.erase(candidates.begin());

    auto hit = try_surround(candidates, c, frame.m);
    if (!hit) continue;

    const auto& [subset, weights] = *hit;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      const Candidate& cand = candidates[subset[j]];
      RatVec w = x.base() + frame.basis * cand.coord;
      cert.points.push_back(w);
      cert.multipliers.push_back(k * cand.q);
      cert.weights.push_back(weights[j]);
    }
    for (std::size_t j = 0; j < cert.points.size(); ++j) {
      SymbolicPoint diff = x - cert.points[j];
      append_norm_bound(cert, "|x - w" + std::to_string(j + 1) + "|", diff, eps / Rat(cert.multipliers[j]));
    }
    verify_convex_identity(x, cert);
    return cert;
  }
  throw std::logic_error("approximate_simplex: denominator search exhausted");
}

ApproxCertificate approximate_anchored(const SymbolicPoint& x, const Rat& eps, const Rat& eta,
                                       const RatVec& w1, const Int& k1) {
  if (eps <= 0 || eta <= 0) throw InvalidArgument("approximate_anchored: eps and eta must be positive");
  if (k1 < 1) throw InvalidArgument("approximate_anchored: k1 must be positive");
  if (w1.size() != x.ambient_dim()) throw InvalidArgument("approximate_anchored: anchor dimension mismatch");
  if (x.has_declared_symbol()) {
    throw InvalidArgument("approximate_anchored: declared symbols carry no numeric enclosure");
  }
  for (Eigen::Index i = 0; i < w1.size(); ++i) {
    if (denominator(Rat(k1) * w1(i)) != 1) throw InvalidArgument("approximate_anchored: k1*w1 not integral");
  }
  const Eigen::Index n = x.ambient_dim();

  ApproxCertificate cert;

  // Degenerate rational anchor: x itself certifies everything.
  if (x.is_rational() && x.base() == w1) {
    if (denominator_lcm(RatVec(Rat(k1) * x.base())) != 1) {
      throw InvalidArgument("approximate_anchored: uncertified anchor (k1*x not integral)");
    }
    cert.points.push_back(w1);
    cert.multipliers.push_back(k1);
    cert.weights.emplace_back(Rat(1));
    cert.residual = SymbolicPoint(RatVec(RatVec::Zero(n)));
    cert.tail_in_minimal_subspace = true;
    cert.bounds.push_back({"|x - w1|", eps / Rat(k1), Rat(0), Rat(0)});
    return cert;
  }

  SymbolicPoint anchor_diff = x - w1;
  if (!anchor_diff.sup_norm_less_than(eps / Rat(k1))) {
    throw InvalidArgument("approximate_anchored: uncertified anchor (|x - w1| >= eps/k1)");
  }

  // Certified slack: eps - k1*|x - w1| > s_low > 0.
  Rat s_low;
  {
    unsigned bits = 64;
    while (true) {
      auto [lo, hi] = anchor_diff.sup_norm_enclosure(bits);
      Rat candidate = eps - Rat(k1) * hi;
      if (candidate > 0) { s_low = candidate; break; }
      bits *= 2;
      if (bits > (1u << 18)) throw std::logic_error("approximate_anchored: slack refinement failed");
    }
  }
  const Rat theta = std::min(eta, s_low);

  // Orbit closure of x modulo Z^n drives the K walk.
  std::vector<IntVec> unit;
  for (Eigen::Index i = 0; i < n; ++i) {
    IntVec ei = IntVec::Zero(n);
    ei(i) = 1;
    unit.push_back(ei);
  }
  ClosureStructure closure = closure_structure(x, IntLattice::from_generators(unit, n));
  const Int order = closure.component_order;
  AffineSubspace w_min = smallest_rational_affine(x);
  AffineSubspace v0(RatVec::Zero(n), w_min.directions());

  Int big_k = 0;
  IntVec z(n);
  SymbolicPoint residual = SymbolicPoint(RatVec(RatVec::Zero(n)));
  bool found = false;
  for (long step = 1; step <= kSearchCap; ++step) {
    Int cand_k = order * step;
    if (cand_k <= k1) continue;
    SymbolicPoint scaled = x * Rat(cand_k);
    IntVec rounded(n);
    std::vector<SymbolicNumber> frac(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      SymbolicNumber coord = scaled.coordinate(i);
      rounded(i) = coord.round();
      frac[static_cast<std::size_t>(i)] = coord - SymbolicNumber(Rat(rounded(i)));
    }
    if (certainly_over(frac, theta)) continue;
    SymbolicNumber norm = sup_norm_symbolic(frac);
    if ((SymbolicNumber(theta) - norm).sign() <= 0) continue;
    // The offset K x - z must fall inside V0 so that the residual stays in
    // the minimal subspace (the connected-component condition).
    SymbolicPoint offset = scaled - to_rat(rounded);
    if (!v0.contains(offset.base())) continue;
    bool dirs_ok = true;
    for (const auto& [sym, dir] : offset.terms()) {
      if (!v0.contains(RatVec(offset.base() + dir))) { dirs_ok = false; break; }
    }
    if (!dirs_ok) continue;
    big_k = cand_k;
    z = rounded;
    residual = offset * (Rat(1) / Rat(big_k));
    found = true;
    break;
  }
  if (!found) throw std::logic_error("approximate_anchored: component walk exhausted");

  const Int k2 = big_k - k1;
  RatVec w2(n);
  for (Eigen::Index i = 0; i < n; ++i) w2(i) = (Rat(z(i)) - Rat(k1) * w1(i)) / Rat(k2);

  // w_t = z / K is the rational point of W on the segment (w1, w2).
  RatVec wt(n);
  for (Eigen::Index i = 0; i < n; ++i) wt(i) = Rat(z(i)) / Rat(big_k);
  if (!w_min.contains(wt)) throw std::logic_error("approximate_anchored: w_t escaped the minimal subspace");

  // Surround x inside W by w_t and further rational points of W with
  // integral k_i w_i.
  struct TailPoint {
    RatVec point;
    Int multiplier;
  };
  std::vector<TailPoint> tail;
  std::vector<SymbolicNumber> tail_weights;  // weights of (w_t, tail...)
  SymbolicNumber wt_weight(Rat(0));

  const DirectionFrame frame = direction_frame(x);
  if (frame.m == 0) {
    // W is the single point x; the residual already vanished.
    wt_weight = SymbolicNumber(Rat(1));
  } else {
    const std::vector<SymbolicNumber> c = frame_coordinates(x, frame);
    auto wt_coord_sol = solve_affine(frame.basis, RatVec(wt - x.base()));
    if (!wt_coord_sol) throw std::logic_error("approximate_anchored: w_t outside the frame");
    const Int stride = denominator_lcm(x.base());
    const Rat norm_bound = row_sup_norm(frame.basis_int);
    const Rat tail_theta = eps / (2 * norm_bound);

    std::vector<Candidate> candidates;
    candidates.push_back({big_k, wt_coord_sol->point});  // w_t pinned as candidate 0
    bool solved = false;
    for (long step = 1; step <= kSearchCap && !solved; ++step) {
      Int q = stride * step;
      IntVec p(frame.m);
      std::vector<SymbolicNumber> f(static_cast<std::size_t>(frame.m));
      for (Eigen::Index i = 0; i < frame.m; ++i) {
        SymbolicNumber scaled = c[static_cast<std::size_t>(i)] * Rat(q);
        p(i) = scaled.round();
        f[static_cast<std::size_t>(i)] = scaled - SymbolicNumber(Rat(p(i)));
      }
      if (certainly_over(f, tail_theta)) continue;
      if ((SymbolicNumber(tail_theta) - sup_norm_symbolic(f)).sign() <= 0) continue;
      RatVec coord(frame.m);
      for (Eigen::Index i = 0; i < frame.m; ++i) coord(i) = Rat(p(i), q);
      candidates.push_back({q, coord});
      if (candidates.size() > 13) candidates.erase(candidates.begin() + 1);  // keep w_t pinned

      auto hit = try_surround(candidates, c, frame.m);
      if (!hit) continue;
      const auto& [subset, weights] = *hit;
      // Require w_t in the chosen subset; re-solve including it otherwise.
      bool has_wt = false;
      for (std::size_t idx : subset) {
        if (idx == 0) { has_wt = true; break; }
      }
      if (!has_wt) continue;
      for (std::size_t j = 0; j < subset.size(); ++j) {
        if (subset[j] == 0) {
          wt_weight = weights[j];
        } else {
          const Candidate& cand = candidates[subset[j]];
          tail.push_back({RatVec(x.base() + frame.basis * cand.coord), cand.q});
          tail_weights.push_back(weights[j]);
        }
      }
      solved = true;
    }
    if (!solved) throw std::logic_error("approximate_anchored: tail search exhausted");
  }

  // Split the w_t weight across the two anchors: w_t = (k1 w1 + k2 w2)/K.
  cert.points.push_back(w1);
  cert.multipliers.push_back(k1);
  cert.weights.push_back(wt_weight * (Rat(k1) / Rat(big_k)));
  cert.points.push_back(w2);
  cert.multipliers.push_back(k2);
  cert.weights.push_back(wt_weight * (Rat(k2) / Rat(big_k)));
  for (std::size_t j = 0; j < tail.size(); ++j) {
    cert.points.push_back(tail[j].point);
    cert.multipliers.push_back(tail[j].multiplier);
    cert.weights.push_back(tail_weights[j]);
  }
  cert.residual = residual;
  cert.anchor_sum = big_k;
  cert.tail_in_minimal_subspace = true;
  for (const TailPoint& t : tail) {
    if (!w_min.contains(t.point)) throw std::logic_error("approximate_anchored: tail point escaped W");
  }

  append_norm_bound(cert, "|x - w1|", anchor_diff, eps / Rat(k1));
  append_norm_bound(cert, "|x - w2|", x - w2, eps / Rat(k2));
  for (std::size_t j = 0; j < tail.size(); ++j) {
    append_norm_bound(cert, "|x - w" + std::to_string(j + 3) + "|", x - tail[j].point,
                      eps / Rat(tail[j].multiplier));
  }
  append_norm_bound(cert, "|xi|*(k1+k2)", residual * Rat(big_k), eta);
  verify_convex_identity(x, cert);

  // Two-anchor identity: x = (k1 w1 + k2 w2)/K + xi, checked exactly.
  for (Eigen::Index i = 0; i < n; ++i) {
    SymbolicNumber lhs = x.coordinate(i);
    SymbolicNumber rhs = residual.coordinate(i) +
                         SymbolicNumber((Rat(k1) * w1(i) + Rat(k2) * w2(i)) / Rat(big_k));
    if (!(lhs == rhs)) throw std::logic_error("approximate_anchored: two-anchor identity violated");
  }
  return cert;
}

}  // namespace conecalc
