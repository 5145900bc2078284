// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include "weylreduce/jacobians.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weylreduce::jacobians {

namespace {

using actions::ActionKind;
using actions::PolarAction;
using actions::SectionCoord;
using actions::TangentVector;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double root_factor(ActionKind kind, double alpha) {
  switch (kind) {
    case ActionKind::conjugation: {
      const double s = 2.0 * std::sin(0.5 * alpha);
      return s * s;
    }
    case ActionKind::adjoint_rep:
      return alpha * alpha;
    case ActionKind::s_representation:
      return std::abs(alpha);
    case ActionKind::symmetric_space_compact:
      return std::abs(std::sin(alpha));
    case ActionKind::symmetric_space_noncompact:
      return std::abs(std::sinh(alpha));
    case ActionKind::hermann:
      break;
  }
  throw std::logic_error("no closed-form root factor for this action kind");
}

}  // namespace

double delta_numeric(const PolarAction& a, const SectionCoord& s) {
  return delta_numeric(a, s, a.normal_frame(s));
}

double delta_numeric(const PolarAction& a, const SectionCoord& s,
                     const std::vector<TangentVector>& normal_frame) {
  const int l = a.orbit_dim();
  if (int(normal_frame.size()) != l)
    throw std::invalid_argument(a.id() + ": normal frame must have " + std::to_string(l) +
                                " vectors");
  if (l == 0) return 1.0;
  Eigen::MatrixXd m(l, l);
  for (int j = 0; j < l; ++j) {
    const TangentVector v = a.infinitesimal_action(a.complement_basis()[j], s);
    for (int i = 0; i < l; ++i) m(i, j) = a.metric_inner(s, v, normal_frame[i]);
  }
  return std::abs(m.determinant());
}

double delta_closed(const PolarAction& a, const SectionCoord& s) {
  if (!a.has_closed_form())
    throw std::logic_error(a.id() + ": no closed-form Jacobian is cataloged");
  double prod = 1.0;
  const auto& datum = a.roots();
  for (size_t i = 0; i < datum.positive_roots.size(); ++i) {
    const double alpha = roots::eval_root(datum.positive_roots[i], s);
    prod *= std::pow(root_factor(a.kind(), alpha), datum.multiplicities[i]);
  }
  return prod;
}

double measured_scale(const PolarAction& a) {
  const SectionCoord s = a.calibration_point();
  const double num = delta_numeric(a, s);
  if (num <= 0.0)
    throw std::runtime_error(a.id() + ": numeric Jacobian vanished at the calibration point");
  return delta_closed(a, s) / num;
}

SectionCoord random_section_point(const PolarAction& a, lie::RandomStream& rng) {
  SectionCoord s(a.section_dim());
  switch (a.domain()) {
    case actions::SectionDomain::torus_cell:
      for (int k = 0; k < a.section_dim(); ++k) s[k] = kTwoPi * rng.uniform();
      break;
    case actions::SectionDomain::euclidean_box:
      // cross-validation range; the full quadrature box is wider
      for (int k = 0; k < a.section_dim(); ++k) s[k] = 6.0 * rng.uniform() - 3.0;
      break;
    case actions::SectionDomain::radial_interval:
      s[0] = a.radial_limit() * rng.uniform();
      break;
  }
  return s;
}

JacobianReport cross_validate(const PolarAction& a, int points, double min_margin, double rel_tol,
                              std::uint64_t seed) {
  JacobianReport report;
  report.action = a.id();
  report.has_closed_form = a.has_closed_form();
  report.scale = a.closed_form_scale();
  report.worst_point = SectionCoord::Zero(a.section_dim());
  lie::RandomStream rng(seed);

  double err_sum = 0.0;
  while (report.points_tested < points) {
    const SectionCoord s = random_section_point(a, rng);
    const auto reg = a.is_regular(s);
    if (!reg.regular || reg.margin < min_margin) {
      ++report.points_skipped;
      continue;
    }
    const double num = delta_numeric(a, s);
    double rel;
    if (a.has_closed_form()) {
      const double closed = delta_closed(a, s);
      rel = std::abs(closed - report.scale * num) / std::max(std::abs(closed), 1e-300);
    } else {
      // no reference formula: check Weyl invariance of the determinant instead
      double worst = 0.0;
      for (const auto& w : roots::weyl_orbit(a.roots(), s))
        worst = std::max(worst, std::abs(delta_numeric(a, w) - num));
      rel = worst / std::max(num, 1e-300);
    }
    err_sum += rel;
    if (rel >= report.max_rel_error) {
      report.max_rel_error = rel;
      report.worst_point = s;
      report.worst_margin = reg.margin;
    }
    ++report.points_tested;
  }
  report.mean_rel_error = points > 0 ? err_sum / points : 0.0;
  report.pass = report.max_rel_error <= rel_tol;
  return report;
}

}  // namespace weylreduce::jacobians
