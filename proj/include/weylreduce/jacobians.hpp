// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylreduce/actions.hpp"

// Orbit volume-scaling Jacobian of a polar action: numerically as the
// determinant of the orbit map differential paired against a normal frame of
// the section, and in closed form as a product over the positive roots.
namespace weylreduce::jacobians {

// |det M| with M_ij = <d/dt exp(t X_j).s, N_i> over the orthogonal complement
// basis X_j of the isotropy algebra and the normal frame N_i.  Vanishes on
// the singular set; no regularity precondition.
double delta_numeric(const actions::PolarAction& a, const actions::SectionCoord& s);

// Same determinant against a caller-supplied orthonormal normal frame (the
// value is frame-independent up to sign; used by the invariance tests).
double delta_numeric(const actions::PolarAction& a, const actions::SectionCoord& s,
                     const std::vector<actions::TangentVector>& normal_frame);

// Closed-form product over the positive restricted roots, per kind:
//   conjugation                  prod 4 sin^2(alpha(s)/2)
//   adjoint_rep                  prod alpha(s)^2
//   s_representation             prod |alpha(s)|^m
//   symmetric_space_compact      prod |sin alpha(s)|^m
//   symmetric_space_noncompact   prod |sinh alpha(s)|^m
// Throws std::logic_error when the action has no closed form (hermann).
double delta_closed(const actions::PolarAction& a, const actions::SectionCoord& s);

// delta_closed / delta_numeric at the calibration point; matches
// PolarAction::closed_form_scale for every cataloged action.
double measured_scale(const actions::PolarAction& a);

struct JacobianReport {
  std::string action;
  int points_tested = 0;
  int points_skipped = 0;  // rejected by the regularity margin
  bool has_closed_form = true;
  double scale = 1.0;           // documented closed/numeric ratio
  double max_rel_error = 0.0;   // of closed vs scale * numeric
  double mean_rel_error = 0.0;
  double worst_margin = 0.0;    // regularity margin at the worst point
  actions::SectionCoord worst_point;
  bool pass = false;
};

// Compare the closed form against the scaled numeric determinant at random
// regular section points (margin >= min_margin).  Actions without a closed
// form get a numeric-only consistency check (Weyl invariance of the
// determinant) under the same reporting.
JacobianReport cross_validate(const actions::PolarAction& a, int points, double min_margin,
                              double rel_tol, std::uint64_t seed);

// Uniform draw from the action's natural section coordinate range (torus
// cell, centered box, radial interval); used by cross_validate and the CLI.
actions::SectionCoord random_section_point(const actions::PolarAction& a, lie::RandomStream& rng);

}  // namespace weylreduce::jacobians
