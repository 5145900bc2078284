// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weylreduce/lie_core.hpp"
#include "weylreduce/roots.hpp"

// Catalog of polar actions: a compact group K acting on a Riemannian manifold
// M with a section (a flat submanifold meeting every orbit orthogonally).
//
// Section coordinates per kind:
//  * conjugation:      torus angle coordinates, 2 pi periodic per component
//                      (embed(theta) = diag(e^{i theta_1}, ...) pattern),
//  * adjoint_rep, s_representation: coefficients in the orthonormal Cartan
//                      basis of the flat ambient space,
//  * model surfaces (S^n, H^2, the hermann instance): geodesic arc length
//                      from the base point along the section geodesic.
//
// Ambient representations: group kind = unitary matrix, flat algebra kinds =
// anti-Hermitian matrix, model kinds = embedded coordinate vector (unit
// sphere in R^{n+1}, or the hyperboloid x.x - z^2 = -1 with the Minkowski
// metric).  Tangent vectors use the same representation; conjugation tangent
// vectors are left-translated back to the algebra.
namespace weylreduce::actions {

enum class ActionKind {
  conjugation,
  adjoint_rep,
  s_representation,
  symmetric_space_compact,
  symmetric_space_noncompact,
  hermann,
};

std::string to_string(ActionKind kind);

using SectionCoord = Eigen::VectorXd;
using AmbientPoint = std::variant<Eigen::MatrixXcd, Eigen::VectorXd>;
using TangentVector = std::variant<Eigen::MatrixXcd, Eigen::VectorXd>;

struct Regularity {
  bool regular;
  double margin;  // coordinate distance to the singular set
  // Regular point whose Weyl orbit degenerates: the orbit map may be a
  // covering of index > 1 there (SO(3) conjugation at angle pi).
  bool exceptional_candidate;
};

enum class SectionDomain { torus_cell, euclidean_box, radial_interval };

struct ActionOptions {
  double disk_radius = 2.0;  // truncation radius for the hyperbolic plane
};

class PolarAction {
 public:
  const std::string& id() const { return id_; }
  ActionKind kind() const { return kind_; }
  const lie::GroupDescriptor& group() const { return group_; }
  const std::optional<roots::SymmetricSpaceDescriptor>& space() const { return space_; }
  int section_dim() const { return section_dim_; }
  int ambient_dim() const { return ambient_dim_; }
  int orbit_dim() const { return ambient_dim_ - section_dim_; }  // l
  const roots::RootDatum& roots() const { return roots_; }
  int weyl_order() const { return roots_.weyl_order; }

  // Lie algebra of the centralizer of the section (computed numerically as
  // the joint kernel of the infinitesimal action over generic section
  // points) and its orthogonal complement, both orthonormal.
  const std::vector<lie::AlgebraElement>& isotropy_basis() const { return isotropy_; }
  const std::vector<lie::AlgebraElement>& complement_basis() const { return complement_; }

  bool has_closed_form() const { return has_closed_form_; }
  // Documented constant: closed form = scale * numeric determinant.  It
  // absorbs the difference between the trace-form normalization of the
  // acting algebra and the unit-curvature model metrics (sqrt(2) for S^2 and
  // H^2, 2 for S^3, 1 for the flat and group kinds).
  double closed_form_scale() const { return closed_form_scale_; }

  SectionDomain domain() const { return domain_; }
  double box_halfwidth() const { return box_halfwidth_; }
  double radial_limit() const { return radial_limit_; }
  // Known integral of the reference integrand over M: 1 for group targets
  // (normalized Haar), the Gaussian integral for flat targets, the
  // area/volume for the model surfaces (disk of radius disk_radius for H^2).
  double reference_integral() const { return reference_integral_; }
  double reference_section_integrand(const SectionCoord& s) const;
  // Fixed regular section point used when measuring closed_form_scale.
  SectionCoord calibration_point() const;

  AmbientPoint section_embed(const SectionCoord& s) const;
  std::vector<TangentVector> section_tangent_frame(const SectionCoord& s) const;
  // Orthonormal basis of the normal space of the section inside T_s M,
  // deterministic and continuous in s.
  std::vector<TangentVector> normal_frame(const SectionCoord& s) const;
  TangentVector infinitesimal_action(const lie::AlgebraElement& x, const SectionCoord& s) const;
  double metric_inner(const SectionCoord& s, const TangentVector& u, const TangentVector& v) const;
  Regularity is_regular(const SectionCoord& s) const;
  // Order of the covering at s: weyl_order / |W-orbit of s| at flagged
  // exceptional candidates, 1 everywhere else.
  int exceptional_index(const SectionCoord& s) const;
  AmbientPoint act(const lie::GroupElement& g, const AmbientPoint& x) const;

  struct AmbientSample {
    AmbientPoint point;
    double weight;  // importance weight: mean of f * weight estimates the integral
  };
  // Sample from the documented reference measure on M: Haar for group
  // targets, standard Gaussian importance sampling for flat targets,
  // geodesic polar sampling with the analytic area element for the models.
  AmbientSample sample_ambient(lie::RandomStream& rng) const;

 private:
  friend PolarAction make_action_impl(ActionKind, const lie::GroupDescriptor&,
                                      const std::optional<roots::SymmetricSpaceDescriptor>&,
                                      const ActionOptions&);
  PolarAction() = default;

  void check_coord(const SectionCoord& s) const;

  std::string id_;
  ActionKind kind_ = ActionKind::conjugation;
  lie::GroupDescriptor group_{lie::GroupFamily::special_unitary, 2, 3, 1};
  std::optional<roots::SymmetricSpaceDescriptor> space_;
  int section_dim_ = 0;
  int ambient_dim_ = 0;
  roots::RootDatum roots_;
  std::vector<lie::AlgebraElement> isotropy_;
  std::vector<lie::AlgebraElement> complement_;
  bool has_closed_form_ = true;
  double closed_form_scale_ = 1.0;
  SectionDomain domain_ = SectionDomain::torus_cell;
  double box_halfwidth_ = 8.0;
  double radial_limit_ = 0.0;
  double reference_integral_ = 1.0;
  int wall_lattice_ = 0;  // 0: alpha = 0 only, 1: alpha in 2 pi Z, 2: alpha in pi Z
  Eigen::MatrixXd angle_map_;  // conjugation: angle coords -> Cartan coefficients
  std::vector<Eigen::MatrixXcd> ambient_cartan_;   // flat kinds: embedding basis
  std::vector<Eigen::MatrixXcd> ambient_normals_;  // flat kinds: constant normal frame
};

// Conjugation on SU(2), SU(3), SO(3); adjoint representation of su(2), su(3).
PolarAction make_action(ActionKind kind, const lie::GroupDescriptor& group);
// s_representation for SU(n)/SO(n); symmetric_space_compact for S^2, S^3;
// symmetric_space_noncompact for H^2; hermann for SO(2) acting on S^2.
PolarAction make_action(ActionKind kind, const roots::SymmetricSpaceDescriptor& space,
                        const ActionOptions& options = {});

// The frozen action catalog.
const std::vector<PolarAction>& catalog();
const PolarAction& find_action(std::string_view id);

}  // namespace weylreduce::actions
