// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include "weylreduce/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace weylreduce::quadrature {

namespace {

using actions::AmbientPoint;
using actions::PolarAction;
using actions::SectionCoord;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::int64_t kChunk = 65536;

double fold_factor(const PolarAction& a) {
  switch (a.domain()) {
    case actions::SectionDomain::torus_cell:
      return 1.0 / (a.weyl_order() * std::pow(kTwoPi, a.section_dim()));
    case actions::SectionDomain::euclidean_box:
      return 1.0 / a.weyl_order();
    case actions::SectionDomain::radial_interval:
      return 1.0;
  }
  throw std::logic_error("unreachable");
}

double delta_value(const PolarAction& a, const SectionCoord& s, DeltaSource source) {
  return source == DeltaSource::closed ? jacobians::delta_closed(a, s)
                                       : jacobians::delta_numeric(a, s);
}

void check_finite(double v, const std::string& where) {
  if (!std::isfinite(v)) throw std::runtime_error("non-finite integrand value in " + where);
}

QuadratureRule tensor_rule(const std::vector<double>& nodes1, const std::vector<double>& weights1,
                           int dims) {
  QuadratureRule rule;
  const size_t m = nodes1.size();
  size_t total = 1;
  for (int d = 0; d < dims; ++d) total *= m;
  rule.nodes.reserve(total);
  rule.weights.reserve(total);
  std::vector<size_t> idx(dims, 0);
  for (size_t k = 0; k < total; ++k) {
    SectionCoord s(dims);
    double w = 1.0;
    for (int d = 0; d < dims; ++d) {
      s[d] = nodes1[idx[d]];
      w *= weights1[idx[d]];
    }
    rule.nodes.push_back(std::move(s));
    rule.weights.push_back(w);
    for (int d = 0; d < dims; ++d) {
      if (++idx[d] < m) break;
      idx[d] = 0;
    }
  }
  return rule;
}

}  // namespace

void gauss_legendre(int order, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  const int half = (order + 1) / 2;
  const double mid = 0.5 * (b + a);
  const double span = 0.5 * (b - a);
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double deriv = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      deriv = order * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / deriv;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    nodes[i] = mid - span * z;
    nodes[order - 1 - i] = mid + span * z;
    weights[i] = 2.0 * span / ((1.0 - z * z) * deriv * deriv);
    weights[order - 1 - i] = weights[i];
  }
}

QuadratureRule section_rule(const PolarAction& a, int order) {
  if (order < 1) throw std::invalid_argument("section_rule: order must be positive");
  std::vector<double> n1, w1;
  switch (a.domain()) {
    case actions::SectionDomain::torus_cell:
      n1.resize(order);
      w1.assign(order, kTwoPi / order);
      for (int i = 0; i < order; ++i) n1[i] = kTwoPi * (i + 0.5) / order;
      break;
    case actions::SectionDomain::euclidean_box: {
      // split at 0 so the |.| kinks of the Jacobian sit on panel boundaries
      std::vector<double> gn, gw;
      gauss_legendre(order, -a.box_halfwidth(), 0.0, n1, w1);
      gauss_legendre(order, 0.0, a.box_halfwidth(), gn, gw);
      n1.insert(n1.end(), gn.begin(), gn.end());
      w1.insert(w1.end(), gw.begin(), gw.end());
      break;
    }
    case actions::SectionDomain::radial_interval:
      gauss_legendre(order, 0.0, a.radial_limit(), n1, w1);
      break;
  }
  return tensor_rule(n1, w1, a.section_dim());
}

double reduced_integrate(const PolarAction& a, const AmbientFunction& f, int order, double c,
                         DeltaSource source) {
  const QuadratureRule rule = section_rule(a, order);
  const double cn = c * fold_factor(a);
  double sum = 0.0;
  for (size_t k = 0; k < rule.nodes.size(); ++k) {
    const double d = delta_value(a, rule.nodes[k], source);
    if (d == 0.0) continue;
    const double v = f(a.section_embed(rule.nodes[k]));
    check_finite(v, "reduced_integrate (" + a.id() + ")");
    sum += rule.weights[k] * v * d;
  }
  return cn * sum;
}

double calibrate_c(const PolarAction& a, int order, DeltaSource source) {
  const QuadratureRule rule = section_rule(a, order);
  double sum = 0.0;
  for (size_t k = 0; k < rule.nodes.size(); ++k)
    sum += rule.weights[k] * a.reference_section_integrand(rule.nodes[k]) *
           delta_value(a, rule.nodes[k], source);
  sum *= fold_factor(a);
  if (!(sum > 0.0))
    throw std::runtime_error(a.id() + ": reference fold vanished; cannot calibrate");
  return a.reference_integral() / sum;
}

Estimate mc_integrate(const PolarAction& a, const AmbientFunction& f, std::int64_t n,
                      std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_integrate: sample count must be positive");
  const lie::RandomStream root(seed);
  double sum = 0.0;
  double sumsq = 0.0;
  std::int64_t done = 0;
  std::uint64_t chunk = 0;
  while (done < n) {
    const std::int64_t m = std::min(kChunk, n - done);
    lie::RandomStream rng = root.derive(chunk++);
    for (std::int64_t i = 0; i < m; ++i) {
      const auto sample = a.sample_ambient(rng);
      const double v = f(sample.point) * sample.weight;
      check_finite(v, "mc_integrate (" + a.id() + ")");
      sum += v;
      sumsq += v * v;
    }
    done += m;
  }
  Estimate est;
  est.value = sum / double(n);
  const double var =
      n > 1 ? std::max(0.0, (sumsq - double(n) * est.value * est.value) / double(n - 1)) : 0.0;
  est.std_error = std::sqrt(var / double(n));
  est.n = n;
  est.seed = seed;
  return est;
}

Estimate reduced_integrate_general(const PolarAction& a, const AmbientFunction& f, int order,
                                   double c, std::int64_t orbit_samples, std::uint64_t seed,
                                   DeltaSource source) {
  if (orbit_samples < 2)
    throw std::invalid_argument("reduced_integrate_general: need at least 2 orbit samples");
  const QuadratureRule rule = section_rule(a, order);
  const double cn = c * fold_factor(a);
  const lie::RandomStream root(seed);
  double value = 0.0;
  double variance = 0.0;
  std::int64_t used = 0;
  for (size_t k = 0; k < rule.nodes.size(); ++k) {
    const double coeff = cn * rule.weights[k] * delta_value(a, rule.nodes[k], source);
    if (coeff == 0.0) continue;
    lie::RandomStream rng = root.derive(k);
    const AmbientPoint base = a.section_embed(rule.nodes[k]);
    // Welford accumulation: the naive sum-of-squares form loses ~8 digits to
    // cancellation when f is constant on the orbit, inflating the error bar.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t j = 0; j < orbit_samples; ++j) {
      const auto g = lie::haar_sample(a.group(), rng);
      const double v = f(a.act(g, base));
      check_finite(v, "reduced_integrate_general (" + a.id() + ")");
      const double d = v - mean;
      mean += d / double(j + 1);
      m2 += d * (v - mean);
    }
    const double node_var = std::max(0.0, m2 / double(orbit_samples - 1));
    value += coeff * mean;
    variance += coeff * coeff * node_var / double(orbit_samples);
    used += orbit_samples;
  }
  Estimate est;
  est.value = value;
  est.std_error = std::sqrt(variance);
  est.n = used;
  est.seed = seed;
  return est;
}

FoldReport fold_mass_check(const PolarAction& a, const AmbientFunction& f, int order, double c,
                           std::int64_t mc_samples, std::uint64_t seed) {
  if (a.domain() == actions::SectionDomain::radial_interval)
    throw std::invalid_argument(a.id() +
                                ": fold_mass_check needs a domain that covers orbits |W| times");
  FoldReport report;
  report.weyl_order = a.weyl_order();
  const AmbientFunction abs_f = [&f](const AmbientPoint& p) { return std::abs(f(p)); };
  report.section_value = double(a.weyl_order()) * reduced_integrate(a, abs_f, order, c);
  report.ambient = mc_integrate(a, abs_f, mc_samples, seed);
  report.ratio = report.section_value / report.ambient.value;
  return report;
}

double orbit_volume(const PolarAction& a, const SectionCoord& s) {
  const auto reg = a.is_regular(s);
  if (!reg.regular)
    throw std::domain_error(a.id() + ": orbit volume is undefined on the singular set");
  return jacobians::delta_numeric(a, s) / double(a.exceptional_index(s));
}

}  // namespace weylreduce::quadrature
