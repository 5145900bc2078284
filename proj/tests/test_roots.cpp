// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include "weylreduce/roots.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>
#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "weylreduce/lie_core.hpp"

using namespace weylreduce;
using oracles::kSeed;
using oracles::kTwoPi;

namespace {

struct Expected {
  lie::GroupDescriptor group;
  int weyl_order;
};

const std::vector<Expected>& expectations() {
  static const std::vector<Expected> e = {
      {lie::GroupDescriptor::special_unitary(2), 2},
      {lie::GroupDescriptor::special_unitary(3), 6},
      {lie::GroupDescriptor::special_unitary(4), 24},
      {lie::GroupDescriptor::special_orthogonal(3), 2},
      {lie::GroupDescriptor::special_orthogonal(4), 4},
      {lie::GroupDescriptor::special_orthogonal(5), 8},
  };
  return e;
}

// Spectrum of ad(H) for H = sum c_k H_k: rank zeros plus a conjugate pair
// +-i alpha(c) per positive root.  Recovers the root functionals from plain
// linear algebra, independent of the stored tables.
std::vector<double> ad_spectrum(const lie::GroupDescriptor& g, const Eigen::VectorXd& c) {
  const auto& basis = lie::standard_basis(g);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(g.n, g.n);
  for (int k = 0; k < g.rank; ++k) h += c[k] * basis.elements[k].matrix();
  const lie::AlgebraElement H(g, h);
  Eigen::MatrixXd ad(g.dim_g, g.dim_g);
  for (int j = 0; j < g.dim_g; ++j) {
    const auto bj = lie::bracket(H, basis.elements[j]);
    for (int i = 0; i < g.dim_g; ++i) ad(i, j) = lie::inner(basis.elements[i], bj);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(ad);
  std::vector<double> positive;
  for (int i = 0; i < g.dim_g; ++i) {
    const auto ev = solver.eigenvalues()[i];
    CHECK(std::abs(ev.real()) < 1e-9);  // ad(H) is skew for the trace form
    if (ev.imag() > 1e-9) positive.push_back(ev.imag());
  }
  std::sort(positive.begin(), positive.end());
  return positive;
}

}  // namespace

TEST_CASE("root functionals match the ad-operator spectrum") {
  lie::RandomStream rng(kSeed + 10);
  for (const auto& e : expectations()) {
    CAPTURE(e.group.name());
    const auto& datum = roots::group_roots(e.group);
    CHECK(datum.weyl_order == e.weyl_order);
    CHECK(int(datum.positive_roots.size()) == (e.group.dim_g - e.group.rank) / 2);
    CHECK(!datum.periodic);
    Eigen::VectorXd c(e.group.rank);
    for (int k = 0; k < c.size(); ++k) c[k] = 0.4 + rng.uniform();
    auto spectrum = ad_spectrum(e.group, c);
    std::vector<double> predicted;
    for (const auto& alpha : datum.positive_roots)
      predicted.push_back(std::abs(roots::eval_root(alpha, c)));
    std::sort(predicted.begin(), predicted.end());
    REQUIRE(spectrum.size() == predicted.size());
    for (size_t i = 0; i < spectrum.size(); ++i)
      CHECK(oracles::near(spectrum[i], predicted[i], 1e-9));
  }
}

TEST_CASE("angle-coordinate roots agree with the orthonormal roots under the lattice map") {
  lie::RandomStream rng(kSeed + 11);
  for (const auto& e : expectations()) {
    CAPTURE(e.group.name());
    const auto& angle = roots::torus_angle_roots(e.group);
    const auto& ortho = roots::group_roots(e.group);
    CHECK(angle.weyl_order == ortho.weyl_order);
    CHECK(angle.periodic);
    REQUIRE(angle.positive_roots.size() == ortho.positive_roots.size());
    const Eigen::MatrixXd map = lie::angle_to_cartan(e.group);
    Eigen::VectorXd theta(e.group.rank);
    for (int k = 0; k < theta.size(); ++k) theta[k] = rng.uniform();
    const Eigen::VectorXd cartan = map * theta;
    std::vector<double> via_angle, via_ortho;
    for (const auto& a : angle.positive_roots)
      via_angle.push_back(std::abs(roots::eval_root(a, theta)));
    for (const auto& a : ortho.positive_roots)
      via_ortho.push_back(std::abs(roots::eval_root(a, cartan)));
    std::sort(via_angle.begin(), via_angle.end());
    std::sort(via_ortho.begin(), via_ortho.end());
    for (size_t i = 0; i < via_angle.size(); ++i)
      CHECK(oracles::near(via_angle[i], via_ortho[i], 1e-10));
  }
}

TEST_CASE("angle roots are integral") {
  for (const auto& e : expectations()) {
    CAPTURE(e.group.name());
    for (const auto& a : roots::torus_angle_roots(e.group).positive_roots)
      for (int k = 0; k < a.size(); ++k)
        CHECK(oracles::near(a[k], std::round(a[k]), 1e-12));
  }
}

TEST_CASE("Weyl generators are involutions that permute the roots up to sign") {
  for (const auto& e : expectations()) {
    for (const auto* datum : {&roots::group_roots(e.group), &roots::torus_angle_roots(e.group)}) {
      CAPTURE(e.group.name());
      for (const auto& w : datum->weyl_generators) {
        CHECK((w * w - Eigen::MatrixXd::Identity(w.rows(), w.cols())).cwiseAbs().maxCoeff() <
              1e-12);
        for (const auto& alpha : datum->positive_roots) {
          // functional pulled back through the generator
          const Eigen::VectorXd pulled = w.transpose() * alpha;
          bool matched = false;
          for (const auto& beta : datum->positive_roots)
            matched = matched || (pulled - beta).norm() < 1e-9 || (pulled + beta).norm() < 1e-9;
          CHECK(matched);
        }
      }
    }
  }
}

TEST_CASE("Weyl orbits have the full order at generic points") {
  SUBCASE("su(2) torus angles") {
    const auto& d = roots::torus_angle_roots(lie::GroupDescriptor::special_unitary(2));
    Eigen::VectorXd s(1);
    s << 0.7;
    const auto orbit = roots::weyl_orbit(d, s);
    REQUIRE(orbit.size() == 2);
    std::vector<double> values = {orbit[0][0], orbit[1][0]};
    std::sort(values.begin(), values.end());
    CHECK(oracles::near(values[0], 0.7, 1e-12));
    CHECK(oracles::near(values[1], kTwoPi - 0.7, 1e-12));
    // canonicalization: shifted input gives the same orbit
    Eigen::VectorXd shifted(1);
    shifted << 0.7 + kTwoPi;
    CHECK(roots::weyl_orbit(d, shifted).size() == 2);
  }
  SUBCASE("generic points and degenerate points") {
    const auto su3 = lie::GroupDescriptor::special_unitary(3);
    Eigen::VectorXd generic(2);
    generic << 0.9, 0.4;
    CHECK(roots::weyl_orbit(roots::torus_angle_roots(su3), generic).size() == 6);
    CHECK(roots::weyl_orbit(roots::group_roots(su3), generic).size() == 6);
    Eigen::VectorXd degenerate(1);
    degenerate << oracles::kPi;  // fixed by the flip modulo the 2 pi lattice
    const auto& so3 = roots::torus_angle_roots(lie::GroupDescriptor::special_orthogonal(3));
    CHECK(roots::weyl_orbit(so3, degenerate).size() == 1);
  }
}

TEST_CASE("restricted root data of the model spaces") {
  const auto s2 = roots::restricted_roots(roots::SymmetricSpaceDescriptor::sphere(2));
  REQUIRE(s2.positive_roots.size() == 1);
  CHECK(s2.multiplicities[0] == 1);
  CHECK(s2.weyl_order == 2);
  CHECK(s2.periodic);

  const auto s3 = roots::restricted_roots(roots::SymmetricSpaceDescriptor::sphere(3));
  CHECK(s3.multiplicities[0] == 2);

  const auto h2 = roots::restricted_roots(roots::SymmetricSpaceDescriptor::hyperbolic_plane());
  CHECK(h2.multiplicities[0] == 1);
  CHECK(!h2.periodic);

  const auto ums3 =
      roots::restricted_roots(roots::SymmetricSpaceDescriptor::unitary_mod_orthogonal(3));
  const auto& su3 = roots::group_roots(lie::GroupDescriptor::special_unitary(3));
  REQUIRE(ums3.positive_roots.size() == su3.positive_roots.size());
  for (size_t i = 0; i < ums3.positive_roots.size(); ++i) {
    CHECK((ums3.positive_roots[i] - su3.positive_roots[i]).norm() < 1e-12);
    CHECK(ums3.multiplicities[i] == 1);
  }
}
