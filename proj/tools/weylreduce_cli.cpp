// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylreduce/jacobians.hpp"
#include "weylreduce/quadrature.hpp"
#include "weylreduce/test_functions.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace weylreduce;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WEYLREDUCE_SEED")) return std::strtoull(env, nullptr, 10);
  return 12345;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text << "\n";
}

std::string domain_name(actions::SectionDomain d) {
  switch (d) {
    case actions::SectionDomain::torus_cell: return "torus_cell";
    case actions::SectionDomain::euclidean_box: return "euclidean_box";
    case actions::SectionDomain::radial_interval: return "radial_interval";
  }
  return "?";
}

json action_summary(const actions::PolarAction& a) {
  json j;
  j["id"] = a.id();
  j["kind"] = actions::to_string(a.kind());
  j["group"] = a.group().name();
  if (a.space()) j["space"] = a.space()->name();
  j["section_dim"] = a.section_dim();
  j["ambient_dim"] = a.ambient_dim();
  j["orbit_dim"] = a.orbit_dim();
  j["weyl_order"] = a.weyl_order();
  j["domain"] = domain_name(a.domain());
  j["has_closed_form"] = a.has_closed_form();
  if (a.has_closed_form()) j["closed_form_scale"] = a.closed_form_scale();
  j["reference_integral"] = a.reference_integral();
  return j;
}

// Per-axis sweep range matching the cross-validation conventions.
std::pair<double, double> sweep_range(const actions::PolarAction& a) {
  switch (a.domain()) {
    case actions::SectionDomain::torus_cell: return {0.0, 2.0 * 3.14159265358979323846};
    case actions::SectionDomain::euclidean_box: return {-3.0, 3.0};
    case actions::SectionDomain::radial_interval: return {0.0, a.radial_limit()};
  }
  return {0.0, 1.0};
}

int run_catalog(const std::string& out_path) {
  json out = json::array();
  for (const auto& a : actions::catalog()) out.push_back(action_summary(a));
  emit(out.dump(2), out_path);
  return 0;
}

int run_delta(const std::string& id, std::vector<double> point, const std::string& out_path) {
  const auto& a = actions::find_action(id);
  actions::SectionCoord s;
  if (point.empty()) {
    s = a.calibration_point();
  } else {
    s = Eigen::Map<Eigen::VectorXd>(point.data(), point.size());
  }
  json j;
  j["action"] = a.id();
  j["point"] = std::vector<double>(s.data(), s.data() + s.size());
  j["delta_numeric"] = jacobians::delta_numeric(a, s);
  if (a.has_closed_form()) {
    j["delta_closed"] = jacobians::delta_closed(a, s);
    j["closed_form_scale"] = a.closed_form_scale();
  }
  const auto reg = a.is_regular(s);
  j["regular"] = reg.regular;
  j["margin"] = reg.margin;
  j["exceptional_index"] = a.exceptional_index(s);
  emit(j.dump(2), out_path);
  return 0;
}

int run_sweep(const std::string& id, int grid, const std::string& out_path) {
  const auto& a = actions::find_action(id);
  if (grid < 2) throw std::invalid_argument("sweep: --grid must be at least 2");
  const auto [lo, hi] = sweep_range(a);
  std::string csv;
  for (int k = 0; k < a.section_dim(); ++k) csv += "s" + std::to_string(k) + ",";
  csv += a.has_closed_form() ? "delta_numeric,delta_closed" : "delta_numeric";
  const long total = [&] {
    long t = 1;
    for (int d = 0; d < a.section_dim(); ++d) t *= grid;
    return t;
  }();
  std::vector<int> idx(a.section_dim(), 0);
  for (long row = 0; row < total; ++row) {
    actions::SectionCoord s(a.section_dim());
    for (int d = 0; d < a.section_dim(); ++d)
      s[d] = lo + (hi - lo) * (double(idx[d]) + 0.5) / grid;
    csv += "\n";
    char buf[64];
    for (int d = 0; d < a.section_dim(); ++d) {
      std::snprintf(buf, sizeof buf, "%.12g,", s[d]);
      csv += buf;
    }
    std::snprintf(buf, sizeof buf, "%.12g", jacobians::delta_numeric(a, s));
    csv += buf;
    if (a.has_closed_form()) {
      std::snprintf(buf, sizeof buf, ",%.12g", jacobians::delta_closed(a, s));
      csv += buf;
    }
    for (int d = 0; d < a.section_dim(); ++d) {
      if (++idx[d] < grid) break;
      idx[d] = 0;
    }
  }
  emit(csv, out_path);
  return 0;
}

int run_validate(const std::string& id, int points, double margin, double tol, std::uint64_t seed,
                 const std::string& out_path) {
  const auto run_one = [&](const actions::PolarAction& a) {
    const auto report = jacobians::cross_validate(a, points, margin, tol, seed);
    json j;
    j["action"] = report.action;
    j["mode"] = report.has_closed_form ? "closed_vs_numeric" : "weyl_invariance";
    j["points_tested"] = report.points_tested;
    j["points_skipped"] = report.points_skipped;
    if (report.has_closed_form) j["closed_form_scale"] = report.scale;
    j["max_rel_error"] = report.max_rel_error;
    j["mean_rel_error"] = report.mean_rel_error;
    j["worst_point"] =
        std::vector<double>(report.worst_point.data(), report.worst_point.data() + report.worst_point.size());
    j["tolerance"] = tol;
    j["pass"] = report.pass;
    return std::pair(j, report.pass);
  };
  json out;
  bool all_pass = true;
  if (id == "all") {
    out = json::array();
    for (const auto& a : actions::catalog()) {
      auto [j, pass] = run_one(a);
      out.push_back(j);
      all_pass = all_pass && pass;
    }
  } else {
    auto [j, pass] = run_one(actions::find_action(id));
    out = j;
    all_pass = pass;
  }
  emit(out.dump(2), out_path);
  return all_pass ? 0 : 1;
}

int run_calibrate(const std::string& id, int order, const std::string& source_name,
                  const std::string& out_path) {
  const auto& a = actions::find_action(id);
  const auto source = source_name == "closed" ? quadrature::DeltaSource::closed
                                              : quadrature::DeltaSource::numeric;
  json j;
  j["action"] = a.id();
  j["order"] = order;
  j["source"] = source_name;
  j["c"] = quadrature::calibrate_c(a, order, source);
  j["reference_integral"] = a.reference_integral();
  j["weyl_order"] = a.weyl_order();
  emit(j.dump(2), out_path);
  return 0;
}

int run_integrate(const std::string& id, const std::string& fn_id, const std::string& method,
                  int order, std::int64_t n, std::int64_t orbit_samples, std::uint64_t seed,
                  const std::string& source_name, const std::string& out_path) {
  const auto& a = actions::find_action(id);
  const auto& fn = test_functions::find_function(fn_id);
  if (!fn.applies(a))
    throw std::invalid_argument("function '" + fn.id + "' does not apply to action '" + a.id() +
                                "'");
  const auto source = source_name == "closed" ? quadrature::DeltaSource::closed
                                              : quadrature::DeltaSource::numeric;
  json j;
  j["action"] = a.id();
  j["function"] = fn.id;
  j["invariant"] = fn.invariant;
  j["method"] = method;
  j["weyl_order"] = a.weyl_order();
  if (method == "mc") {
    const auto est = quadrature::mc_integrate(a, fn.eval, n, seed);
    j["value"] = est.value;
    j["std_error"] = est.std_error;
    j["n"] = est.n;
    j["seed"] = est.seed;
  } else if (method == "reduced") {
    if (!fn.invariant)
      throw std::invalid_argument("function '" + fn.id +
                                  "' is not invariant; use --method general");
    const double c = quadrature::calibrate_c(a, order, source);
    j["value"] = quadrature::reduced_integrate(a, fn.eval, order, c, source);
    j["order"] = order;
    j["c"] = c;
    j["source"] = source_name;
  } else if (method == "general") {
    const double c = quadrature::calibrate_c(a, order, source);
    const auto est =
        quadrature::reduced_integrate_general(a, fn.eval, order, c, orbit_samples, seed, source);
    j["value"] = est.value;
    j["std_error"] = est.std_error;
    j["n"] = est.n;
    j["seed"] = est.seed;
    j["order"] = order;
    j["orbit_samples"] = orbit_samples;
    j["c"] = c;
    j["source"] = source_name;
  } else {
    throw std::invalid_argument("unknown method '" + method + "' (reduced, mc, general)");
  }
  emit(j.dump(2), out_path);
  return 0;
}

int run_functions(const std::string& out_path) {
  json out = json::array();
  for (const auto& f : test_functions::registry()) {
    json j;
    j["id"] = f.id;
    j["description"] = f.description;
    j["invariant"] = f.invariant;
    json applies = json::array();
    for (const auto& a : actions::catalog())
      if (f.applies(a)) applies.push_back(a.id());
    j["applies_to"] = applies;
    out.push_back(j);
  }
  emit(out.dump(2), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylreduce: orbit Jacobians and reduced integration for polar actions"};
  app.require_subcommand(1);

  std::string action_id, fn_id = "const1", method = "reduced", source = "numeric", out_path;
  std::vector<double> point;
  int order = 48, grid = 64, points = 100;
  std::int64_t n = 200000, orbit_samples = 64;
  double margin = 0.05, tol = 1e-8;
  std::uint64_t seed = default_seed();

  auto* cat = app.add_subcommand("catalog", "list the cataloged polar actions");
  cat->add_option("--out", out_path, "write to a file instead of stdout");

  auto* fns = app.add_subcommand("functions", "list the cataloged test integrands");
  fns->add_option("--out", out_path, "write to a file instead of stdout");

  auto* del = app.add_subcommand("delta", "evaluate the Jacobian at one section point");
  del->add_option("--action", action_id, "action id (see catalog)")->required();
  del->add_option("--point", point, "comma-separated section coordinates")->delimiter(',');
  del->add_option("--out", out_path, "write to a file instead of stdout");

  auto* swp = app.add_subcommand("sweep", "CSV grid sweep of the Jacobian over the section");
  swp->add_option("--action", action_id, "action id")->required();
  swp->add_option("--grid", grid, "nodes per axis (default 64)");
  swp->add_option("--out", out_path, "write to a file instead of stdout");

  auto* val = app.add_subcommand("validate", "compare closed-form and numeric Jacobians");
  val->add_option("--action", action_id, "action id, or 'all'")->required();
  val->add_option("--points", points, "regular sample points (default 100)");
  val->add_option("--margin", margin, "regularity margin for sampled points (default 0.05)");
  val->add_option("--tol", tol, "max relative error to pass (default 1e-8)");
  val->add_option("--seed", seed, "sampling seed (default env WEYLREDUCE_SEED or 12345)");
  val->add_option("--out", out_path, "write to a file instead of stdout");

  auto* cal = app.add_subcommand("calibrate", "measure the reduction constant c");
  cal->add_option("--action", action_id, "action id")->required();
  cal->add_option("--order", order, "quadrature order (default 48)");
  cal->add_option("--source", source, "Jacobian source: numeric|closed (default numeric)");
  cal->add_option("--out", out_path, "write to a file instead of stdout");

  auto* integ = app.add_subcommand("integrate", "integrate a cataloged function over M");
  integ->add_option("--action", action_id, "action id")->required();
  integ->add_option("--function", fn_id, "function id (see functions; default const1)");
  integ->add_option("--method", method, "reduced|mc|general (default reduced)");
  integ->add_option("--order", order, "quadrature order (default 48)");
  integ->add_option("--n", n, "Monte Carlo samples (default 200000)");
  integ->add_option("--orbit-samples", orbit_samples,
                    "per-node orbit samples for --method general (default 64)");
  integ->add_option("--seed", seed, "Monte Carlo seed (default env WEYLREDUCE_SEED or 12345)");
  integ->add_option("--source", source, "Jacobian source: numeric|closed (default numeric)");
  integ->add_option("--out", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cat->parsed()) return run_catalog(out_path);
    if (fns->parsed()) return run_functions(out_path);
    if (del->parsed()) return run_delta(action_id, point, out_path);
    if (swp->parsed()) return run_sweep(action_id, grid, out_path);
    if (val->parsed()) return run_validate(action_id, points, margin, tol, seed, out_path);
    if (cal->parsed()) return run_calibrate(action_id, order, source, out_path);
    if (integ->parsed())
      return run_integrate(action_id, fn_id, method, order, n, orbit_samples, seed, source,
                           out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
