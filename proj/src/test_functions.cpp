// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include "weylreduce/test_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace weylreduce::test_functions {

namespace {

using actions::ActionKind;
using actions::AmbientPoint;
using actions::PolarAction;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

const MatrixXcd& mat(const AmbientPoint& p) { return std::get<MatrixXcd>(p); }
const VectorXd& vec(const AmbientPoint& p) { return std::get<VectorXd>(p); }

bool is_group(const PolarAction& a) { return a.kind() == ActionKind::conjugation; }
bool is_flat(const PolarAction& a) {
  return a.kind() == ActionKind::adjoint_rep || a.kind() == ActionKind::s_representation;
}
bool is_model(const PolarAction& a) {
  return a.kind() == ActionKind::symmetric_space_compact ||
         a.kind() == ActionKind::symmetric_space_noncompact || a.kind() == ActionKind::hermann;
}

double abs_trace_sq(const AmbientPoint& p) { return std::norm(mat(p).trace()); }

std::vector<TestFunction> build_registry() {
  std::vector<TestFunction> fns;
  fns.push_back({"const1", "constant 1 (reference mass)", true,
                 [](const PolarAction&) { return true; },
                 [](const AmbientPoint&) { return 1.0; }});
  fns.push_back({"abs_trace_sq", "|tr g|^2", true, is_group, abs_trace_sq});
  fns.push_back({"abs_trace_4", "|tr g|^4", true, is_group, [](const AmbientPoint& p) {
                   const double t = abs_trace_sq(p);
                   return t * t;
                 }});
  fns.push_back({"abs_trace_6", "|tr g|^6", true, is_group, [](const AmbientPoint& p) {
                   const double t = abs_trace_sq(p);
                   return t * t * t;
                 }});
  fns.push_back({"re_trace_gsq", "Re tr(g^2)", true, is_group, [](const AmbientPoint& p) {
                   return (mat(p) * mat(p)).trace().real();
                 }});
  fns.push_back({"char2_sq",
                 "|second character|^2 = (|tr g|^2 - 1)^2 on SU(2)",
                 true,
                 [](const PolarAction& a) { return a.id() == "conj-su2"; },
                 [](const AmbientPoint& p) {
                   const double c = abs_trace_sq(p) - 1.0;
                   return c * c;
                 }});
  fns.push_back({"re_g11", "Re g_{11} (matrix entry, not invariant)", false, is_group,
                 [](const AmbientPoint& p) { return mat(p)(0, 0).real(); }});
  fns.push_back({"gaussian", "exp(-|x|^2/2) with the trace-form norm", true, is_flat,
                 [](const AmbientPoint& p) { return std::exp(-0.5 * mat(p).squaredNorm()); }});
  fns.push_back({"radius_sq_gaussian", "|x|^2 exp(-|x|^2/2) with the trace-form norm", true,
                 is_flat, [](const AmbientPoint& p) {
                   const double r2 = mat(p).squaredNorm();
                   return r2 * std::exp(-0.5 * r2);
                 }});
  fns.push_back({"entry01_sq", "|x_{12}|^2 exp(-|x|^2/2) (not invariant)", false, is_flat,
                 [](const AmbientPoint& p) {
                   return std::norm(mat(p)(0, 1)) * std::exp(-0.5 * mat(p).squaredNorm());
                 }});
  fns.push_back({"height_sq", "square of the last embedding coordinate", true, is_model,
                 [](const AmbientPoint& p) {
                   const double h = vec(p)[vec(p).size() - 1];
                   return h * h;
                 }});
  fns.push_back({"first_coord_sq", "square of the first embedding coordinate (not invariant)",
                 false, is_model, [](const AmbientPoint& p) {
                   const double x = vec(p)[0];
                   return x * x;
                 }});
  return fns;
}

}  // namespace

const std::vector<TestFunction>& registry() {
  static const std::vector<TestFunction> fns = build_registry();
  return fns;
}

const TestFunction& find_function(std::string_view id) {
  for (const auto& f : registry())
    if (f.id == id) return f;
  std::string ids;
  for (const auto& f : registry()) ids += (ids.empty() ? "" : ", ") + f.id;
  throw std::invalid_argument("unknown function '" + std::string(id) + "'; available: " + ids);
}

std::vector<const TestFunction*> functions_for(const actions::PolarAction& a) {
  std::vector<const TestFunction*> out;
  for (const auto& f : registry())
    if (f.applies(a)) out.push_back(&f);
  return out;
}

}  // namespace weylreduce::test_functions
