// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "weylreduce/lie_core.hpp"

// Root data for the supported groups and symmetric spaces, stored as static
// tables.  A root alpha is kept as the coordinate vector of the linear
// functional alpha(X)/i, so eval_root(v, x) = dot(v, x).
//
// Two coordinate conventions appear:
//  * group_roots / restricted_roots(unitary_mod_orthogonal):  coordinates are
//    coefficients in the orthonormal Cartan basis of lie_core.standard_basis
//    (the convention of lie_core.torus_element).  For su(2) the positive
//    root is (sqrt(2)).
//  * torus_angle_roots:  coordinates are torus angle coordinates, one
//    2 pi period per lattice generator (see lie_core.angle_to_cartan); root
//    vectors are integral.  For su(2) the positive root is (2), i.e.
//    eval_root(alpha, theta) = 2 theta when the torus point is
//    diag(e^{i theta}, e^{-i theta}).
namespace weylreduce::roots {

struct RootDatum {
  std::vector<Eigen::VectorXd> positive_roots;
  std::vector<int> multiplicities;  // aligned with positive_roots
  int weyl_order;
  // Generators of the Weyl group acting on section coordinates.
  std::vector<Eigen::MatrixXd> weyl_generators;
  // True when the coordinates live on a torus with period 2 pi per component.
  bool periodic;
};

enum class SpaceKind { sphere, hyperbolic_plane, unitary_mod_orthogonal };

struct SymmetricSpaceDescriptor {
  SpaceKind kind;
  int n;

  static SymmetricSpaceDescriptor sphere(int n);                  // S^n, n in {2,3}
  static SymmetricSpaceDescriptor hyperbolic_plane();              // H^2
  static SymmetricSpaceDescriptor unitary_mod_orthogonal(int n);  // SU(n)/SO(n), n in {2,3}

  std::string name() const;
  friend bool operator==(const SymmetricSpaceDescriptor&, const SymmetricSpaceDescriptor&) = default;
};

// Positive roots of g with respect to the orthonormal Cartan coordinates.
// Supported: su(2), su(3), su(4), so(3), so(4), so(5).
const RootDatum& group_roots(const lie::GroupDescriptor& group);

// Positive roots of g with respect to torus angle coordinates (integral
// vectors).  Same supported set as group_roots.
const RootDatum& torus_angle_roots(const lie::GroupDescriptor& group);

// Restricted roots of the catalog symmetric spaces.  Coordinates: geodesic
// radius for S^n and H^2 (positive root (1), multiplicity n-1 resp. 1),
// orthonormal Cartan coordinates for SU(n)/SO(n) (multiplicity 1 each).
const RootDatum& restricted_roots(const SymmetricSpaceDescriptor& space);

double eval_root(const Eigen::VectorXd& root, const Eigen::VectorXd& x);

// Orbit of x under the Weyl group, canonicalized into [0, 2 pi)^rank when the
// datum is periodic.  Regular points give exactly weyl_order distinct images;
// points fixed by part of the group give fewer.
std::vector<Eigen::VectorXd> weyl_orbit(const RootDatum& datum, const Eigen::VectorXd& x);

}  // namespace weylreduce::roots
