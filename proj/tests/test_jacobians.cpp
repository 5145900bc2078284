// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include "weylreduce/jacobians.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>
#include <Eigen/QR>

#include "oracles.hpp"

using namespace weylreduce;
using actions::SectionCoord;
using actions::TangentVector;
using oracles::kPi;
using oracles::kSeed;

namespace {

SectionCoord coord1(double x) {
  SectionCoord s(1);
  s << x;
  return s;
}

SectionCoord coord2(double x, double y) {
  SectionCoord s(2);
  s << x, y;
  return s;
}

// Mixes an orthonormal frame by an orthogonal matrix; preserves
// orthonormality for any metric with Gram matrix I on the frame.
std::vector<TangentVector> mix_frame(const std::vector<TangentVector>& frame,
                                     const Eigen::MatrixXd& q) {
  std::vector<TangentVector> out;
  for (int i = 0; i < q.rows(); ++i) {
    if (std::holds_alternative<Eigen::MatrixXcd>(frame[0])) {
      Eigen::MatrixXcd m = q(i, 0) * std::get<Eigen::MatrixXcd>(frame[0]);
      for (int j = 1; j < q.cols(); ++j) m += q(i, j) * std::get<Eigen::MatrixXcd>(frame[j]);
      out.emplace_back(std::move(m));
    } else {
      Eigen::VectorXd v = q(i, 0) * std::get<Eigen::VectorXd>(frame[0]);
      for (int j = 1; j < q.cols(); ++j) v += q(i, j) * std::get<Eigen::VectorXd>(frame[j]);
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

Eigen::MatrixXd random_orthogonal(int n, lie::RandomStream& rng) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.gaussian();
  return Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
}

}  // namespace

TEST_CASE("frozen Jacobian values") {
  const double t = 0.9;
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("conj-su2"), coord1(t)),
                          4.0 * std::sin(t) * std::sin(t), 1e-12));
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("conj-so3"), coord1(t)),
                          4.0 * std::sin(t / 2) * std::sin(t / 2), 1e-12));
  const double h = 1.1;
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("adj-su2"), coord1(h)),
                          2.0 * h * h, 1e-12));
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("srep-su2so2"), coord1(h)),
                          std::sqrt(2.0) * h, 1e-12));
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("sym-s2"), coord1(h)),
                          std::sin(h) / std::sqrt(2.0), 1e-12));
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("sym-s3"), coord1(h)),
                          std::sin(h) * std::sin(h) / 2.0, 1e-12));
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("sym-h2"), coord1(h)),
                          std::sinh(h) / std::sqrt(2.0), 1e-12));
  CHECK(oracles::near_rel(
      jacobians::delta_numeric(actions::find_action("hermann-so2-s2"), coord1(h)),
      std::sin(h) / std::sqrt(2.0), 1e-12));
  // rank-2 products
  const SectionCoord s = coord2(0.9, 0.65);
  const double a12 = 2 * 0.9 - 0.65, a13 = 0.9 + 0.65, a23 = -0.9 + 2 * 0.65;
  double conj_su3 = 1.0;
  for (double alpha : {a12, a13, a23}) conj_su3 *= 4.0 * std::sin(alpha / 2) * std::sin(alpha / 2);
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("conj-su3"), s), conj_su3,
                          1e-12));
  const SectionCoord e = coord2(1.1, 1.6);
  const double b12 = std::sqrt(2.0) * 1.1;
  const double b13 = 1.1 / std::sqrt(2.0) + std::sqrt(1.5) * 1.6;
  const double b23 = -1.1 / std::sqrt(2.0) + std::sqrt(1.5) * 1.6;
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("adj-su3"), e),
                          b12 * b12 * b13 * b13 * b23 * b23, 1e-12));
  CHECK(oracles::near_rel(jacobians::delta_numeric(actions::find_action("srep-su3so3"), e),
                          std::abs(b12 * b13 * b23), 1e-12));
}

TEST_CASE("closed form equals the documented scale times the numeric determinant") {
  for (const auto& a : actions::catalog()) {
    if (!a.has_closed_form()) continue;
    CAPTURE(a.id());
    CHECK(oracles::near_rel(jacobians::measured_scale(a), a.closed_form_scale(), 1e-10));
  }
  CHECK_THROWS_AS(jacobians::delta_closed(actions::find_action("hermann-so2-s2"), coord1(0.9)),
                  std::logic_error);
}

TEST_CASE("determinant is independent of the normal frame") {
  lie::RandomStream rng(kSeed + 30);
  for (const auto& a : actions::catalog()) {
    CAPTURE(a.id());
    const auto s = oracles::random_regular_point(a, rng, 0.05);
    const auto frame = a.normal_frame(s);
    const double base = jacobians::delta_numeric(a, s);
    for (int trial = 0; trial < 3; ++trial) {
      const auto mixed = mix_frame(frame, random_orthogonal(a.orbit_dim(), rng));
      CHECK(oracles::near_rel(jacobians::delta_numeric(a, s, mixed), base, 1e-9));
    }
  }
}

TEST_CASE("Jacobian is Weyl invariant") {
  lie::RandomStream rng(kSeed + 31);
  for (const auto& a : actions::catalog()) {
    CAPTURE(a.id());
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = oracles::random_regular_point(a, rng, 0.02);
      const double base = jacobians::delta_numeric(a, s);
      for (const auto& w : roots::weyl_orbit(a.roots(), s))
        CHECK(oracles::near_rel(jacobians::delta_numeric(a, w), base, 1e-9));
    }
  }
}

TEST_CASE("Jacobian vanishes on the singular set") {
  CHECK(jacobians::delta_numeric(actions::find_action("conj-su2"), coord1(0.0)) < 1e-12);
  CHECK(jacobians::delta_numeric(actions::find_action("conj-su2"), coord1(kPi)) < 1e-12);
  CHECK(jacobians::delta_numeric(actions::find_action("adj-su2"), coord1(0.0)) < 1e-12);
  CHECK(jacobians::delta_numeric(actions::find_action("sym-s3"), coord1(0.0)) < 1e-12);
  CHECK(jacobians::delta_numeric(actions::find_action("sym-s3"), coord1(kPi)) < 1e-12);
  CHECK(jacobians::delta_numeric(actions::find_action("conj-su3"), coord2(0.4, 0.2)) < 1e-12);
}

TEST_CASE("cross validation reports") {
  for (const auto& a : actions::catalog()) {
    CAPTURE(a.id());
    const auto report = jacobians::cross_validate(a, 60, 0.05, 1e-9, kSeed + 32);
    CHECK(report.points_tested == 60);
    CHECK(report.pass);
    CHECK(report.max_rel_error < 1e-9);
    CHECK(report.has_closed_form == a.has_closed_form());
  }
}
