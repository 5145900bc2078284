// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include "weylreduce/roots.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace weylreduce::roots {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using lie::GroupDescriptor;
using lie::GroupFamily;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

MatrixXd reflection(const VectorXd& v) {
  const int d = v.size();
  return MatrixXd::Identity(d, d) - (2.0 / v.squaredNorm()) * (v * v.transpose());
}

std::vector<MatrixXd> reflection_generators(const std::vector<VectorXd>& roots) {
  std::vector<MatrixXd> gens;
  gens.reserve(roots.size());
  for (const auto& v : roots) gens.push_back(reflection(v));
  return gens;
}

// Diagonal entries of the k-th orthonormal su(n) Cartan element (divided by i).
double su_cartan_entry(int k, int p) {
  const double s = 1.0 / std::sqrt(double(k) * (k + 1));
  if (p < k) return s;
  if (p == k) return -k * s;
  return 0.0;
}

RootDatum su_group_roots(int n) {
  RootDatum d;
  d.periodic = false;
  d.weyl_order = factorial(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      VectorXd v(n - 1);
      for (int k = 1; k < n; ++k) v[k - 1] = su_cartan_entry(k, p) - su_cartan_entry(k, q);
      d.positive_roots.push_back(v);
      d.multiplicities.push_back(1);
    }
  d.weyl_generators = reflection_generators(d.positive_roots);
  return d;
}

RootDatum so_group_roots(int n) {
  RootDatum d;
  d.periodic = false;
  const int r = n / 2;
  d.weyl_order = (n % 2 == 1 ? (1 << r) : (1 << (r - 1))) * factorial(r);
  const double s = 1.0 / std::sqrt(2.0);  // block angle t_j = c_j / sqrt(2)
  for (int p = 0; p < r; ++p)
    for (int q = p + 1; q < r; ++q) {
      VectorXd minus = VectorXd::Zero(r), plus = VectorXd::Zero(r);
      minus[p] = s; minus[q] = -s;
      plus[p] = s; plus[q] = s;
      d.positive_roots.push_back(minus);
      d.positive_roots.push_back(plus);
      d.multiplicities.push_back(1);
      d.multiplicities.push_back(1);
    }
  if (n % 2 == 1)
    for (int p = 0; p < r; ++p) {
      VectorXd v = VectorXd::Zero(r);
      v[p] = s;
      d.positive_roots.push_back(v);
      d.multiplicities.push_back(1);
    }
  d.weyl_generators = reflection_generators(d.positive_roots);
  return d;
}

// a_p(theta) for su(n) angle coordinates: a = sum_k theta_k (e_k - e_{k+1}).
VectorXd su_angle_diag_row(int n, int p) {
  VectorXd row = VectorXd::Zero(n - 1);
  if (p <= n - 2) row[p] += 1.0;
  if (p >= 1) row[p - 1] -= 1.0;
  return row;
}

RootDatum su_angle_roots(int n) {
  RootDatum d;
  d.periodic = true;
  d.weyl_order = factorial(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      d.positive_roots.push_back(su_angle_diag_row(n, p) - su_angle_diag_row(n, q));
      d.multiplicities.push_back(1);
    }
  // Transposition (i, i+1) acting on the diagonal a, expressed in theta
  // coordinates via the partial-sum relation theta_k = a_0 + ... + a_k.
  for (int i = 0; i + 1 < n; ++i) {
    MatrixXd rows(n, n - 1);
    for (int p = 0; p < n; ++p) rows.row(p) = su_angle_diag_row(n, p);
    rows.row(i).swap(rows.row(i + 1));
    MatrixXd gen(n - 1, n - 1);
    VectorXd acc = VectorXd::Zero(n - 1);
    for (int k = 0; k < n - 1; ++k) {
      acc += rows.row(k);
      gen.row(k) = acc;
    }
    d.weyl_generators.push_back(gen);
  }
  return d;
}

RootDatum so_angle_roots(int n) {
  RootDatum d;
  d.periodic = true;
  const int r = n / 2;
  d.weyl_order = (n % 2 == 1 ? (1 << r) : (1 << (r - 1))) * factorial(r);
  for (int p = 0; p < r; ++p)
    for (int q = p + 1; q < r; ++q) {
      VectorXd minus = VectorXd::Zero(r), plus = VectorXd::Zero(r);
      minus[p] = 1.0; minus[q] = -1.0;
      plus[p] = 1.0; plus[q] = 1.0;
      d.positive_roots.push_back(minus);
      d.positive_roots.push_back(plus);
      d.multiplicities.push_back(1);
      d.multiplicities.push_back(1);
    }
  if (n % 2 == 1)
    for (int p = 0; p < r; ++p) {
      VectorXd v = VectorXd::Zero(r);
      v[p] = 1.0;
      d.positive_roots.push_back(v);
      d.multiplicities.push_back(1);
    }
  for (int i = 0; i + 1 < r; ++i) {
    MatrixXd swap = MatrixXd::Identity(r, r);
    swap(i, i) = 0; swap(i + 1, i + 1) = 0;
    swap(i, i + 1) = 1; swap(i + 1, i) = 1;
    d.weyl_generators.push_back(swap);
  }
  if (n % 2 == 1) {
    MatrixXd flip = MatrixXd::Identity(r, r);
    flip(r - 1, r - 1) = -1;
    d.weyl_generators.push_back(flip);
  } else if (r >= 2) {
    MatrixXd flip = MatrixXd::Zero(r, r);
    for (int i = 0; i + 2 < r; ++i) flip(i, i) = 1;
    flip(r - 2, r - 1) = -1;
    flip(r - 1, r - 2) = -1;
    d.weyl_generators.push_back(flip);
  }
  return d;
}

RootDatum rank_one_datum(int multiplicity, bool periodic) {
  RootDatum d;
  d.periodic = periodic;
  d.weyl_order = 2;
  d.positive_roots.push_back(VectorXd::Constant(1, 1.0));
  d.multiplicities.push_back(multiplicity);
  d.weyl_generators.push_back(MatrixXd::Constant(1, 1, -1.0));
  return d;
}

void require_supported(const GroupDescriptor& g) {
  const bool su = g.family == GroupFamily::special_unitary && g.n >= 2 && g.n <= 4;
  const bool so = g.family == GroupFamily::special_orthogonal && g.n >= 3 && g.n <= 5;
  if (!su && !so)
    throw std::invalid_argument("no root table for " + g.name() +
                                "; supported: su(2..4), so(3..5)");
}

using TableKey = std::pair<int, int>;

const RootDatum& cached(std::map<TableKey, RootDatum>& cache, std::mutex& mtx, TableKey key,
                        RootDatum (*build)(int)) {
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build(key.second)).first;
  return it->second;
}

}  // namespace

SymmetricSpaceDescriptor SymmetricSpaceDescriptor::sphere(int n) {
  if (n != 2 && n != 3) throw std::invalid_argument("sphere: supported dimensions are 2 and 3");
  return {SpaceKind::sphere, n};
}

SymmetricSpaceDescriptor SymmetricSpaceDescriptor::hyperbolic_plane() {
  return {SpaceKind::hyperbolic_plane, 2};
}

SymmetricSpaceDescriptor SymmetricSpaceDescriptor::unitary_mod_orthogonal(int n) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("unitary_mod_orthogonal: supported sizes are 2 and 3");
  return {SpaceKind::unitary_mod_orthogonal, n};
}

std::string SymmetricSpaceDescriptor::name() const {
  switch (kind) {
    case SpaceKind::sphere: return "S^" + std::to_string(n);
    case SpaceKind::hyperbolic_plane: return "H^2";
    case SpaceKind::unitary_mod_orthogonal:
      return "su(" + std::to_string(n) + ")/so(" + std::to_string(n) + ")";
  }
  return "?";
}

const RootDatum& group_roots(const lie::GroupDescriptor& group) {
  require_supported(group);
  static std::mutex mtx;
  static std::map<TableKey, RootDatum> cache;
  const bool su = group.family == GroupFamily::special_unitary;
  return cached(cache, mtx, {su ? 0 : 1, group.n}, su ? su_group_roots : so_group_roots);
}

const RootDatum& torus_angle_roots(const lie::GroupDescriptor& group) {
  require_supported(group);
  static std::mutex mtx;
  static std::map<TableKey, RootDatum> cache;
  const bool su = group.family == GroupFamily::special_unitary;
  return cached(cache, mtx, {su ? 0 : 1, group.n}, su ? su_angle_roots : so_angle_roots);
}

const RootDatum& restricted_roots(const SymmetricSpaceDescriptor& space) {
  static std::mutex mtx;
  static std::map<TableKey, RootDatum> cache;
  std::lock_guard<std::mutex> lock(mtx);
  TableKey key{int(space.kind), space.n};
  auto it = cache.find(key);
  if (it == cache.end()) {
    RootDatum d;
    switch (space.kind) {
      case SpaceKind::sphere:
        d = rank_one_datum(space.n - 1, true);
        break;
      case SpaceKind::hyperbolic_plane:
        d = rank_one_datum(1, false);
        break;
      case SpaceKind::unitary_mod_orthogonal:
        d = su_group_roots(space.n);  // same functionals, multiplicity 1
        break;
    }
    it = cache.emplace(key, std::move(d)).first;
  }
  return it->second;
}

double eval_root(const Eigen::VectorXd& root, const Eigen::VectorXd& x) {
  if (root.size() != x.size())
    throw std::invalid_argument("eval_root: dimension mismatch");
  return root.dot(x);
}

namespace {

VectorXd canonicalize(const RootDatum& d, VectorXd x) {
  if (!d.periodic) return x;
  for (int i = 0; i < x.size(); ++i) {
    x[i] = std::fmod(x[i], kTwoPi);
    if (x[i] < 0) x[i] += kTwoPi;
    if (x[i] >= kTwoPi - 1e-12) x[i] = 0.0;  // wrap boundary to a single repr
  }
  return x;
}

double periodic_distance(const RootDatum& d, const VectorXd& a, const VectorXd& b) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    double diff = std::abs(a[i] - b[i]);
    if (d.periodic) diff = std::min(diff, kTwoPi - diff);
    m = std::max(m, diff);
  }
  return m;
}

}  // namespace

std::vector<Eigen::VectorXd> weyl_orbit(const RootDatum& datum, const Eigen::VectorXd& x) {
  for (const auto& g : datum.weyl_generators)
    if (g.cols() != x.size())
      throw std::invalid_argument("weyl_orbit: coordinate dimension mismatch");
  constexpr double kTol = 1e-9;
  std::vector<VectorXd> orbit{canonicalize(datum, x)};
  std::deque<VectorXd> frontier{orbit.front()};
  while (!frontier.empty()) {
    VectorXd cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : datum.weyl_generators) {
      VectorXd img = canonicalize(datum, g * cur);
      bool known = false;
      for (const auto& o : orbit)
        if (periodic_distance(datum, o, img) < kTol) { known = true; break; }
      if (!known) {
        orbit.push_back(img);
        frontier.push_back(img);
        if (int(orbit.size()) > datum.weyl_order)
          throw std::logic_error("weyl_orbit: orbit exceeded the group order");
      }
    }
  }
  return orbit;
}

}  // namespace weylreduce::roots
