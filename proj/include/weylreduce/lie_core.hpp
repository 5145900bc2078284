// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Compact matrix groups and their Lie algebras.
//
// Conventions used throughout the library:
//  * the inner product on an algebra is <X,Y> = -Re tr(XY); it is positive
//    definite on anti-Hermitian matrices and Ad-invariant,
//  * standard_basis() is orthonormal with respect to that inner product and
//    lists the Cartan (maximal torus) elements first,
//  * torus_element(group, theta) = exp(sum_k theta_k C_k) where C_k are the
//    orthonormal Cartan basis elements.  For su(2) this is
//    diag(e^{i theta/sqrt(2)}, e^{-i theta/sqrt(2)}): the rescaling between
//    "angle" coordinates (2 pi periodic per lattice generator) and these
//    orthonormal coordinates is the matrix returned by angle_to_cartan().
namespace weylreduce::lie {

enum class GroupFamily { special_unitary, special_orthogonal };

struct GroupDescriptor {
  GroupFamily family;
  int n;      // matrices are n x n
  int dim_g;  // algebra dimension: n^2-1 (su) or n(n-1)/2 (so)
  int rank;   // torus rank: n-1 (su) or floor(n/2) (so)

  // su(n), n >= 2.
  static GroupDescriptor special_unitary(int n);
  // so(n), n >= 2.  n = 2 is supported as an acting group for the
  // rank-one catalog actions; root tables cover n in {3,4,5}.
  static GroupDescriptor special_orthogonal(int n);

  std::string name() const;  // "su(3)", "so(4)", ...
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// Anti-Hermitian traceless matrix (real antisymmetric for the orthogonal
// family).  The shape and algebra-membership invariants are checked on
// construction to 1e-12 entrywise; violations throw std::invalid_argument.
class AlgebraElement {
 public:
  AlgebraElement(GroupDescriptor group, Eigen::MatrixXcd m);

  const GroupDescriptor& group() const { return group_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  GroupDescriptor group_;
  Eigen::MatrixXcd m_;
};

// Group element: unitary (orthogonal) with unit determinant, both checked to
// 1e-10 on construction.
class GroupElement {
 public:
  GroupElement(GroupDescriptor group, Eigen::MatrixXcd m);

  const GroupDescriptor& group() const { return group_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  GroupElement inverse() const;

 private:
  GroupDescriptor group_;
  Eigen::MatrixXcd m_;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);
AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(double s, const AlgebraElement& a);

// <X,Y> = -Re tr(XY).
double inner(const AlgebraElement& x, const AlgebraElement& y);
double norm(const AlgebraElement& x);

struct OrthonormalBasis {
  std::vector<AlgebraElement> elements;  // Cartan elements first
  int cartan_count;
};

// Orthonormal basis of the algebra, Gram matrix = identity to 1e-12.
//
// Ordering (frozen): su(n) lists H_k = i diag(1,..,1,-k,0,..,0)/sqrt(k(k+1))
// for k = 1..n-1, then for each pair p < q (lexicographic) the elements
// (E_pq - E_qp)/sqrt(2) and i(E_pq + E_qp)/sqrt(2).  so(n) lists the
// commuting block generators A_{12}, A_{34}, ... first, then the remaining
// A_pq = (E_pq - E_qp)/sqrt(2) lexicographically.
const OrthonormalBasis& standard_basis(const GroupDescriptor& group);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Ad_g Y = g Y g^{-1}.
AlgebraElement adjoint_group(const GroupElement& g, const AlgebraElement& y);

// Matrix exponential (scaling-and-squaring Pade).  If the result drifts from
// unitarity by more than 1e-10 it is re-projected onto the group via the
// polar factor of an SVD.
GroupElement exp_matrix(const AlgebraElement& x);

// exp applied to the angle-weighted combination of the orthonormal Cartan
// basis elements; angles.size() must equal group.rank.
GroupElement torus_element(const GroupDescriptor& group, const Eigen::VectorXd& angles);

// Maps torus "angle" coordinates (one 2 pi period per integral lattice
// generator: a_k = i(E_kk - E_{k+1,k+1}) for su(n), the 2x2 rotation blocks
// for so(n)) to coefficients in the orthonormal Cartan basis, i.e.
// torus_element(group, angle_to_cartan(group) * angles) is the torus point
// with those angles.  For su(2) and so(n) the factor is sqrt(2).
Eigen::MatrixXd angle_to_cartan(const GroupDescriptor& group);

// Deterministic random stream.  Worker/substream seeds are derived with
// derive(index): a SplitMix64 hash of seed ^ (golden-ratio constant *
// (index+1)), so parallel Monte Carlo accumulations are reproducible for a
// fixed seed regardless of thread count.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  RandomStream derive(std::uint64_t index) const;

  double uniform();   // U[0,1)
  double gaussian();  // N(0,1)
  std::uint64_t next_u64();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

// Haar-distributed group element: QR decomposition of a standard Gaussian
// matrix, R's diagonal normalized to be positive (Mezzadri's phase
// convention), then determinant-corrected into the special group.
GroupElement haar_sample(const GroupDescriptor& group, RandomStream& rng);

}  // namespace weylreduce::lie
