// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "weylreduce/actions.hpp"
#include "weylreduce/jacobians.hpp"

// Integration backends: deterministic section rules weighted by the orbit
// Jacobian, and Monte Carlo over the ambient space for cross-checks.
//
// Normalization.  Reduced integrals use a fixed per-domain fold factor N:
//   torus cell        N = 1 / (|W| (2 pi)^rank)   (normalized Haar on T)
//   euclidean box     N = 1 / |W|                 (Lebesgue on the Cartan)
//   radial interval   N = 1                       (already a fundamental domain)
// and the action constant c:   integral over M  =  c * N * sum_k w_k f delta.
// c depends on which Jacobian (numeric or closed) the sum uses; the two
// differ exactly by PolarAction::closed_form_scale.
namespace weylreduce::quadrature {

enum class DeltaSource { numeric, closed };

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;  // zero for deterministic rules
  std::int64_t n = 0;      // Monte Carlo samples (or rule nodes)
  std::uint64_t seed = 0;
};

struct QuadratureRule {
  std::vector<actions::SectionCoord> nodes;
  std::vector<double> weights;  // sum equals the coordinate volume of the domain
};

// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int order, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Deterministic rule over the action's section domain: equispaced (midpoint
// offset) tensor rule on the torus cell, per-axis Gauss-Legendre split at 0
// on the euclidean box (the Jacobian has |.| kinks on the root hyperplanes),
// Gauss-Legendre on radial intervals.  `order` is the per-axis/per-panel
// node count.
QuadratureRule section_rule(const actions::PolarAction& a, int order);

using AmbientFunction = std::function<double(const actions::AmbientPoint&)>;

// c * N * sum_k w_k f(embed(s_k)) delta(s_k); valid for invariant f.
double reduced_integrate(const actions::PolarAction& a, const AmbientFunction& f, int order,
                         double c, DeltaSource source = DeltaSource::numeric);

// The constant c measured against the action's documented reference
// integral (reference_integral / fold of the reference integrand).
double calibrate_c(const actions::PolarAction& a, int order,
                   DeltaSource source = DeltaSource::numeric);

// Monte Carlo integral of f over M using the action's reference measure and
// importance weights.  Deterministic for fixed seed: samples are drawn in
// 65536-sample chunks with per-chunk derived streams and combined in chunk
// order.  Throws if f produces a non-finite value.
Estimate mc_integrate(const actions::PolarAction& a, const AmbientFunction& f, std::int64_t n,
                      std::uint64_t seed);

// Reduction of a general (not necessarily invariant) f: the value at each
// rule node is replaced by a Monte Carlo average of f over the orbit,
// f_bar(s) = mean_j f(g_j . embed(s)) over orbit_samples Haar draws.  The
// standard error propagates the per-node sample variances through the rule
// weights.
Estimate reduced_integrate_general(const actions::PolarAction& a, const AmbientFunction& f,
                                   int order, double c, std::int64_t orbit_samples,
                                   std::uint64_t seed, DeltaSource source = DeltaSource::numeric);

struct FoldReport {
  double section_value = 0.0;  // c * N * |W| * sum w |f| delta: counts every orbit |W| times
  Estimate ambient;            // Monte Carlo of |f| over M
  double ratio = 0.0;          // section_value / ambient.value, expect |W|
  int weyl_order = 0;
};

// L1-mass comparison between the unfolded section functional and the
// ambient integral; the ratio recovers the Weyl group order.  Defined for
// torus/box domains (radial domains are already fundamental).
FoldReport fold_mass_check(const actions::PolarAction& a, const AmbientFunction& f, int order,
                           double c, std::int64_t mc_samples, std::uint64_t seed);

// Volume of the orbit through s relative to the volume of the principal
// homogeneous model K/K_mu: the Jacobian determinant divided by the covering
// index at exceptional points.  Throws std::domain_error on singular points.
double orbit_volume(const actions::PolarAction& a, const actions::SectionCoord& s);

}  // namespace weylreduce::quadrature
