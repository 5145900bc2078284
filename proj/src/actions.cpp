// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include "weylreduce/actions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace weylreduce::actions {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using lie::AlgebraElement;
using lie::GroupDescriptor;
using lie::GroupElement;
using roots::SpaceKind;
using roots::SymmetricSpaceDescriptor;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSingularTol = 1e-12;

bool is_matrix_kind(ActionKind k) {
  return k == ActionKind::conjugation || k == ActionKind::adjoint_rep ||
         k == ActionKind::s_representation;
}

const MatrixXcd& as_matrix(const TangentVector& v) { return std::get<MatrixXcd>(v); }
const VectorXd& as_vector(const TangentVector& v) { return std::get<VectorXd>(v); }

// Lattice of closed-form zeros of the root functionals, as a coordinate
// distance: conjugation vanishes on alpha in 2 pi Z, the compact model
// surfaces on alpha in pi Z, the flat kinds only on alpha = 0.
double wall_distance(double alpha, int lattice) {
  if (lattice == 0) return std::abs(alpha);
  const double period = lattice == 1 ? kTwoPi : kPi;
  double m = std::fmod(std::abs(alpha), period);
  return std::min(m, period - m);
}

VectorXd flatten(const TangentVector& v) {
  if (std::holds_alternative<VectorXd>(v)) return as_vector(v);
  const MatrixXcd& m = as_matrix(v);
  VectorXd out(2 * m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out[k++] = m(i, j).real();
      out[k++] = m(i, j).imag();
    }
  return out;
}

int expected_isotropy_dim(ActionKind kind, const GroupDescriptor& acting) {
  switch (kind) {
    case ActionKind::conjugation:
    case ActionKind::adjoint_rep:
      return acting.rank;
    case ActionKind::s_representation:
      return 0;
    case ActionKind::symmetric_space_compact:
    case ActionKind::symmetric_space_noncompact:
    case ActionKind::hermann:
      // centralizer of the section geodesic inside the isotropy group
      return acting.n >= 3 ? (acting.n - 1) * (acting.n - 2) / 2 : 0;
  }
  return 0;
}

}  // namespace

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::conjugation: return "conjugation";
    case ActionKind::adjoint_rep: return "adjoint_rep";
    case ActionKind::s_representation: return "s_representation";
    case ActionKind::symmetric_space_compact: return "symmetric_space_compact";
    case ActionKind::symmetric_space_noncompact: return "symmetric_space_noncompact";
    case ActionKind::hermann: return "hermann";
  }
  return "?";
}

void PolarAction::check_coord(const SectionCoord& s) const {
  if (s.size() != section_dim_)
    throw std::invalid_argument(id_ + ": expected " + std::to_string(section_dim_) +
                                " section coordinates, got " + std::to_string(s.size()));
}

SectionCoord PolarAction::calibration_point() const {
  SectionCoord s(section_dim_);
  switch (domain_) {
    case SectionDomain::torus_cell:
      for (int k = 0; k < section_dim_; ++k) s[k] = 0.9 - 0.25 * k;
      break;
    case SectionDomain::euclidean_box:
      for (int k = 0; k < section_dim_; ++k) s[k] = 1.1 + 0.5 * k;
      break;
    case SectionDomain::radial_interval:
      s[0] = 1.1;
      break;
  }
  return s;
}

double PolarAction::reference_section_integrand(const SectionCoord& s) const {
  check_coord(s);
  if (domain_ == SectionDomain::euclidean_box) return std::exp(-0.5 * s.squaredNorm());
  return 1.0;
}

AmbientPoint PolarAction::section_embed(const SectionCoord& s) const {
  check_coord(s);
  switch (kind_) {
    case ActionKind::conjugation:
      return lie::torus_element(group_, angle_map_ * s).matrix();
    case ActionKind::adjoint_rep:
    case ActionKind::s_representation: {
      MatrixXcd h = MatrixXcd::Zero(ambient_cartan_[0].rows(), ambient_cartan_[0].cols());
      for (int k = 0; k < section_dim_; ++k) h += s[k] * ambient_cartan_[k];
      return h;
    }
    case ActionKind::symmetric_space_compact:
    case ActionKind::hermann: {
      VectorXd x = VectorXd::Zero(ambient_dim_ + 1);
      x[0] = std::sin(s[0]);
      x[ambient_dim_] = std::cos(s[0]);
      return x;
    }
    case ActionKind::symmetric_space_noncompact: {
      VectorXd x = VectorXd::Zero(3);
      x[0] = std::sinh(s[0]);
      x[2] = std::cosh(s[0]);
      return x;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<TangentVector> PolarAction::section_tangent_frame(const SectionCoord& s) const {
  check_coord(s);
  std::vector<TangentVector> frame;
  switch (kind_) {
    case ActionKind::conjugation: {
      const auto& basis = lie::standard_basis(group_);
      for (int k = 0; k < section_dim_; ++k) frame.emplace_back(basis.elements[k].matrix());
      break;
    }
    case ActionKind::adjoint_rep:
    case ActionKind::s_representation:
      for (int k = 0; k < section_dim_; ++k) frame.emplace_back(ambient_cartan_[k]);
      break;
    case ActionKind::symmetric_space_compact:
    case ActionKind::hermann: {
      VectorXd t = VectorXd::Zero(ambient_dim_ + 1);
      t[0] = std::cos(s[0]);
      t[ambient_dim_] = -std::sin(s[0]);
      frame.emplace_back(std::move(t));
      break;
    }
    case ActionKind::symmetric_space_noncompact: {
      VectorXd t(3);
      t << std::cosh(s[0]), 0.0, std::sinh(s[0]);
      frame.emplace_back(std::move(t));
      break;
    }
  }
  return frame;
}

std::vector<TangentVector> PolarAction::normal_frame(const SectionCoord& s) const {
  check_coord(s);
  std::vector<TangentVector> frame;
  if (is_matrix_kind(kind_)) {
    for (const auto& m : ambient_normals_) frame.emplace_back(m);
    return frame;
  }
  if (kind_ != ActionKind::hermann) {
    // embedded model surfaces: the coordinate directions orthogonal to the
    // section plane span the normal space at every section point
    for (int i = 1; i < ambient_dim_; ++i) {
      VectorXd e = VectorXd::Zero(ambient_dim_ + 1);
      e[i] = 1.0;
      frame.emplace_back(std::move(e));
    }
    return frame;
  }
  // generic construction: Gram-Schmidt of the ambient coordinate directions
  // against the surface constraint and the section tangent
  const VectorXd x = as_vector(section_embed(s));
  const VectorXd tau = as_vector(section_tangent_frame(s)[0]);
  const int l = orbit_dim();
  for (int c = 0; c <= ambient_dim_ && int(frame.size()) < l; ++c) {
    VectorXd v = VectorXd::Zero(ambient_dim_ + 1);
    v[c] = 1.0;
    v -= v.dot(x) * x;  // tangency to the unit sphere
    v -= v.dot(tau) * tau;
    for (const auto& f : frame) v -= v.dot(as_vector(f)) * as_vector(f);
    const double n = v.norm();
    if (n > 1e-8) frame.emplace_back(VectorXd(v / n));
  }
  if (int(frame.size()) != l)
    throw std::runtime_error(id_ + ": normal frame construction failed at s = " +
                             std::to_string(s[0]));
  return frame;
}

TangentVector PolarAction::infinitesimal_action(const AlgebraElement& x,
                                                const SectionCoord& s) const {
  check_coord(s);
  if (!(x.group() == group_))
    throw std::invalid_argument(id_ + ": infinitesimal_action expects an element of " +
                                group_.name());
  switch (kind_) {
    case ActionKind::conjugation: {
      const MatrixXcd t = std::get<MatrixXcd>(section_embed(s));
      return MatrixXcd(t.adjoint() * x.matrix() * t - x.matrix());
    }
    case ActionKind::adjoint_rep:
    case ActionKind::s_representation: {
      const MatrixXcd h = std::get<MatrixXcd>(section_embed(s));
      return MatrixXcd(x.matrix() * h - h * x.matrix());
    }
    default: {
      const VectorXd p = as_vector(section_embed(s));
      const int m = group_.n;
      VectorXd v = VectorXd::Zero(ambient_dim_ + 1);
      v.head(m) = x.matrix().real() * p.head(m);
      return v;
    }
  }
}

double PolarAction::metric_inner(const SectionCoord& s, const TangentVector& u,
                                 const TangentVector& v) const {
  check_coord(s);
  if (std::holds_alternative<MatrixXcd>(u) != std::holds_alternative<MatrixXcd>(v))
    throw std::invalid_argument(id_ + ": tangent vectors of mixed representation");
  if (std::holds_alternative<MatrixXcd>(u))
    return -(as_matrix(u) * as_matrix(v)).trace().real();
  const VectorXd& a = as_vector(u);
  const VectorXd& b = as_vector(v);
  double dot = a.dot(b);
  if (kind_ == ActionKind::symmetric_space_noncompact)
    dot -= 2.0 * a[2] * b[2];  // Minkowski signature (+,+,-)
  return dot;
}

Regularity PolarAction::is_regular(const SectionCoord& s) const {
  check_coord(s);
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& root : roots_.positive_roots) {
    const double alpha = roots::eval_root(root, s);
    margin = std::min(margin, wall_distance(alpha, wall_lattice_) / root.norm());
  }
  Regularity reg{margin > kSingularTol, margin, false};
  if (reg.regular) {
    const auto orbit = roots::weyl_orbit(roots_, s);
    reg.exceptional_candidate = int(orbit.size()) < roots_.weyl_order;
  }
  return reg;
}

int PolarAction::exceptional_index(const SectionCoord& s) const {
  const Regularity reg = is_regular(s);
  if (!reg.exceptional_candidate) return 1;
  const auto orbit = roots::weyl_orbit(roots_, s);
  return roots_.weyl_order / int(orbit.size());
}

AmbientPoint PolarAction::act(const GroupElement& g, const AmbientPoint& x) const {
  if (!(g.group() == group_))
    throw std::invalid_argument(id_ + ": act expects an element of " + group_.name());
  if (is_matrix_kind(kind_))
    return MatrixXcd(g.matrix() * std::get<MatrixXcd>(x) * g.matrix().adjoint());
  const VectorXd& p = std::get<VectorXd>(x);
  const int m = group_.n;
  VectorXd out = p;
  out.head(m) = g.matrix().real() * p.head(m);
  return out;
}

PolarAction::AmbientSample PolarAction::sample_ambient(lie::RandomStream& rng) const {
  switch (kind_) {
    case ActionKind::conjugation:
      return {haar_sample(group_, rng).matrix(), 1.0};
    case ActionKind::adjoint_rep:
    case ActionKind::s_representation: {
      // Gaussian importance sampling: coordinates in an orthonormal basis of
      // the flat target are standard normal, weight = 1/density.
      MatrixXcd x = MatrixXcd::Zero(group_.n, group_.n);
      const int d = ambient_dim_;
      double sq = 0.0;
      int used = 0;
      for (const auto& b : ambient_cartan_) {
        const double c = rng.gaussian();
        x += c * b;
        sq += c * c;
        ++used;
      }
      for (const auto& b : ambient_normals_) {
        const double c = rng.gaussian();
        x += c * b;
        sq += c * c;
        ++used;
      }
      if (used != d) throw std::logic_error(id_ + ": ambient basis size mismatch");
      const double w = std::pow(kTwoPi, 0.5 * d) * std::exp(0.5 * sq);
      return {x, w};
    }
    case ActionKind::symmetric_space_compact:
    case ActionKind::hermann: {
      const int n = group_.n;
      double r;
      if (n == 2) {
        r = std::acos(1.0 - 2.0 * rng.uniform());
      } else {
        do {
          r = kPi * rng.uniform();
        } while (rng.uniform() >= std::sin(r) * std::sin(r));
      }
      VectorXd u(n);
      double nu = 0.0;
      do {
        for (int i = 0; i < n; ++i) u[i] = rng.gaussian();
        nu = u.norm();
      } while (nu < 1e-12);
      u /= nu;
      VectorXd x(ambient_dim_ + 1);
      x.head(n) = std::sin(r) * u;
      x[n] = std::cos(r);
      return {x, reference_integral_};
    }
    case ActionKind::symmetric_space_noncompact: {
      const double mass = std::cosh(radial_limit_) - 1.0;
      const double r = std::acosh(1.0 + rng.uniform() * mass);
      const double phi = kTwoPi * rng.uniform();
      VectorXd x(3);
      x << std::sinh(r) * std::cos(phi), std::sinh(r) * std::sin(phi), std::cosh(r);
      return {x, reference_integral_};
    }
  }
  throw std::logic_error("unreachable");
}

PolarAction make_action_impl(ActionKind kind, const GroupDescriptor& acting,
                             const std::optional<SymmetricSpaceDescriptor>& space,
                             const ActionOptions& options) {
  PolarAction a;
  a.kind_ = kind;
  a.group_ = acting;
  a.space_ = space;

  const auto su = [](int n) { return GroupDescriptor::special_unitary(n); };
  switch (kind) {
    case ActionKind::conjugation:
      a.id_ = "conj-" + (acting.family == lie::GroupFamily::special_unitary ? std::string("su")
                                                                            : std::string("so")) +
              std::to_string(acting.n);
      a.section_dim_ = acting.rank;
      a.ambient_dim_ = acting.dim_g;
      a.roots_ = roots::torus_angle_roots(acting);
      a.domain_ = SectionDomain::torus_cell;
      a.wall_lattice_ = 1;
      a.reference_integral_ = 1.0;
      a.angle_map_ = lie::angle_to_cartan(acting);
      {
        const auto& basis = lie::standard_basis(acting);
        for (int i = acting.rank; i < acting.dim_g; ++i)
          a.ambient_normals_.push_back(basis.elements[i].matrix());
      }
      break;
    case ActionKind::adjoint_rep: {
      a.id_ = "adj-su" + std::to_string(acting.n);
      a.section_dim_ = acting.rank;
      a.ambient_dim_ = acting.dim_g;
      a.roots_ = roots::group_roots(acting);
      a.domain_ = SectionDomain::euclidean_box;
      a.wall_lattice_ = 0;
      a.reference_integral_ = std::pow(kTwoPi, 0.5 * acting.dim_g);
      const auto& basis = lie::standard_basis(acting);
      for (int i = 0; i < acting.rank; ++i) a.ambient_cartan_.push_back(basis.elements[i].matrix());
      for (int i = acting.rank; i < acting.dim_g; ++i)
        a.ambient_normals_.push_back(basis.elements[i].matrix());
      break;
    }
    case ActionKind::s_representation: {
      const int n = space->n;
      a.id_ = "srep-su" + std::to_string(n) + "so" + std::to_string(n);
      a.section_dim_ = n - 1;
      a.ambient_dim_ = n * (n + 1) / 2 - 1;
      a.roots_ = roots::restricted_roots(*space);
      a.domain_ = SectionDomain::euclidean_box;
      a.wall_lattice_ = 0;
      a.reference_integral_ = std::pow(kTwoPi, 0.5 * a.ambient_dim_);
      const auto& basis = lie::standard_basis(su(n));
      for (int i = 0; i < n - 1; ++i) a.ambient_cartan_.push_back(basis.elements[i].matrix());
      // i (E_pq + E_qp)/sqrt(2): the off-diagonal part of the flat target
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
          MatrixXcd m = MatrixXcd::Zero(n, n);
          m(p, q) = std::complex<double>(0.0, 1.0 / std::sqrt(2.0));
          m(q, p) = std::complex<double>(0.0, 1.0 / std::sqrt(2.0));
          a.ambient_normals_.push_back(m);
        }
      break;
    }
    case ActionKind::symmetric_space_compact: {
      const int n = space->n;
      a.id_ = "sym-s" + std::to_string(n);
      a.section_dim_ = 1;
      a.ambient_dim_ = n;
      a.roots_ = roots::restricted_roots(*space);
      a.domain_ = SectionDomain::radial_interval;
      a.radial_limit_ = kPi;
      a.wall_lattice_ = 2;
      a.reference_integral_ = n == 2 ? 4.0 * kPi : 2.0 * kPi * kPi;
      a.closed_form_scale_ = std::pow(std::sqrt(2.0), n - 1);
      break;
    }
    case ActionKind::symmetric_space_noncompact:
      a.id_ = "sym-h2";
      a.section_dim_ = 1;
      a.ambient_dim_ = 2;
      a.roots_ = roots::restricted_roots(*space);
      a.domain_ = SectionDomain::radial_interval;
      a.radial_limit_ = options.disk_radius;
      a.wall_lattice_ = 0;
      a.reference_integral_ = kTwoPi * (std::cosh(options.disk_radius) - 1.0);
      a.closed_form_scale_ = std::sqrt(2.0);
      break;
    case ActionKind::hermann:
      a.id_ = "hermann-so2-s2";
      a.section_dim_ = 1;
      a.ambient_dim_ = 2;
      a.roots_ = roots::restricted_roots(*space);
      a.domain_ = SectionDomain::radial_interval;
      a.radial_limit_ = kPi;
      a.wall_lattice_ = 2;
      a.reference_integral_ = 4.0 * kPi;
      a.has_closed_form_ = false;
      break;
  }

  // Lie algebra of the section centralizer: joint kernel of the infinitesimal
  // action over generic section points, complemented orthogonally.
  const auto& basis = lie::standard_basis(acting);
  std::vector<SectionCoord> probes;
  {
    SectionCoord s1(a.section_dim_), s2(a.section_dim_);
    const double v1[] = {0.83, 1.31, 0.57, 1.91};
    const double v2[] = {1.47, 0.29, 2.03, 0.71};
    for (int k = 0; k < a.section_dim_; ++k) {
      s1[k] = v1[k];
      s2[k] = v2[k];
    }
    probes = {s1, s2};
  }
  const int target_rows = flatten(a.infinitesimal_action(basis.elements[0], probes[0])).size();
  MatrixXd stacked(int(probes.size()) * target_rows, acting.dim_g);
  for (int i = 0; i < acting.dim_g; ++i)
    for (size_t j = 0; j < probes.size(); ++j)
      stacked.block(int(j) * target_rows, i, target_rows, 1) =
          flatten(a.infinitesimal_action(basis.elements[i], probes[j]));
  Eigen::JacobiSVD<MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double tol = 1e-8 * std::max(1.0, sigma.size() ? sigma[0] : 0.0);
  int rank = 0;
  while (rank < sigma.size() && sigma[rank] > tol) ++rank;
  const int h_dim = acting.dim_g - rank;
  if (h_dim != expected_isotropy_dim(kind, acting))
    throw std::logic_error(a.id_ + ": isotropy dimension " + std::to_string(h_dim) +
                           " does not match the catalog value " +
                           std::to_string(expected_isotropy_dim(kind, acting)));
  for (int c = 0; c < acting.dim_g; ++c) {
    MatrixXcd m = MatrixXcd::Zero(acting.n, acting.n);
    for (int i = 0; i < acting.dim_g; ++i) m += svd.matrixV()(i, c) * basis.elements[i].matrix();
    AlgebraElement combo(acting, m);
    (c < rank ? a.complement_ : a.isotropy_).push_back(std::move(combo));
  }
  if (int(a.complement_.size()) != a.ambient_dim_ - a.section_dim_)
    throw std::logic_error(a.id_ + ": complement dimension does not match the orbit dimension");
  return a;
}

PolarAction make_action(ActionKind kind, const GroupDescriptor& group) {
  const bool su = group.family == lie::GroupFamily::special_unitary;
  if (kind == ActionKind::conjugation) {
    if (!((su && (group.n == 2 || group.n == 3)) || (!su && group.n == 3)))
      throw std::invalid_argument(
          "conjugation actions are cataloged for su(2), su(3), so(3); got " + group.name());
    return make_action_impl(kind, group, std::nullopt, {});
  }
  if (kind == ActionKind::adjoint_rep) {
    if (!(su && (group.n == 2 || group.n == 3)))
      throw std::invalid_argument("adjoint_rep actions are cataloged for su(2), su(3); got " +
                                  group.name());
    return make_action_impl(kind, group, std::nullopt, {});
  }
  throw std::invalid_argument("make_action(kind, group) covers conjugation and adjoint_rep only");
}

PolarAction make_action(ActionKind kind, const SymmetricSpaceDescriptor& space,
                        const ActionOptions& options) {
  switch (kind) {
    case ActionKind::s_representation:
      if (space.kind != SpaceKind::unitary_mod_orthogonal)
        throw std::invalid_argument("s_representation expects an SU(n)/SO(n) space");
      return make_action_impl(kind, GroupDescriptor::special_orthogonal(space.n), space, options);
    case ActionKind::symmetric_space_compact:
      if (space.kind != SpaceKind::sphere)
        throw std::invalid_argument("symmetric_space_compact expects a sphere");
      return make_action_impl(kind, GroupDescriptor::special_orthogonal(space.n), space, options);
    case ActionKind::symmetric_space_noncompact:
      if (space.kind != SpaceKind::hyperbolic_plane)
        throw std::invalid_argument("symmetric_space_noncompact expects the hyperbolic plane");
      return make_action_impl(kind, GroupDescriptor::special_orthogonal(2), space, options);
    case ActionKind::hermann:
      if (space.kind != SpaceKind::sphere || space.n != 2)
        throw std::invalid_argument("the hermann catalog instance acts on S^2");
      return make_action_impl(kind, GroupDescriptor::special_orthogonal(2), space, options);
    default:
      throw std::invalid_argument("make_action(kind, space) covers the symmetric-space kinds");
  }
}

const std::vector<PolarAction>& catalog() {
  static const std::vector<PolarAction> entries = [] {
    using GD = GroupDescriptor;
    using SS = SymmetricSpaceDescriptor;
    std::vector<PolarAction> list;
    list.push_back(make_action(ActionKind::conjugation, GD::special_unitary(2)));
    list.push_back(make_action(ActionKind::conjugation, GD::special_unitary(3)));
    list.push_back(make_action(ActionKind::conjugation, GD::special_orthogonal(3)));
    list.push_back(make_action(ActionKind::adjoint_rep, GD::special_unitary(2)));
    list.push_back(make_action(ActionKind::adjoint_rep, GD::special_unitary(3)));
    list.push_back(make_action(ActionKind::s_representation, SS::unitary_mod_orthogonal(2)));
    list.push_back(make_action(ActionKind::s_representation, SS::unitary_mod_orthogonal(3)));
    list.push_back(make_action(ActionKind::symmetric_space_compact, SS::sphere(2)));
    list.push_back(make_action(ActionKind::symmetric_space_compact, SS::sphere(3)));
    list.push_back(make_action(ActionKind::symmetric_space_noncompact, SS::hyperbolic_plane()));
    list.push_back(make_action(ActionKind::hermann, SS::sphere(2)));
    return list;
  }();
  return entries;
}

const PolarAction& find_action(std::string_view id) {
  for (const auto& a : catalog())
    if (a.id() == id) return a;
  std::string ids;
  for (const auto& a : catalog()) ids += (ids.empty() ? "" : ", ") + a.id();
  throw std::invalid_argument("unknown action '" + std::string(id) + "'; available: " + ids);
}

}  // namespace weylreduce::actions
