// Copyright (C) 2026 the weylreduce authors
//
// SPDX-License-Identifier: Apache-2.0

#include "weylreduce/lie_core.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace weylreduce::lie {

namespace {

constexpr double kAlgebraTol = 1e-12;
constexpr double kGroupTol = 1e-10;

using Complex = std::complex<double>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

GroupDescriptor GroupDescriptor::special_unitary(int n) {
  require(n >= 2, "special_unitary: n must be >= 2");
  return GroupDescriptor{GroupFamily::special_unitary, n, n * n - 1, n - 1};
}

GroupDescriptor GroupDescriptor::special_orthogonal(int n) {
  require(n >= 2, "special_orthogonal: n must be >= 2");
  return GroupDescriptor{GroupFamily::special_orthogonal, n, n * (n - 1) / 2, n / 2};
}

std::string GroupDescriptor::name() const {
  std::string stem = family == GroupFamily::special_unitary ? "su" : "so";
  return stem + "(" + std::to_string(n) + ")";
}

AlgebraElement::AlgebraElement(GroupDescriptor group, Eigen::MatrixXcd m)
    : group_(group), m_(std::move(m)) {
  require(m_.rows() == group_.n && m_.cols() == group_.n,
          "algebra element has wrong shape for " + group_.name());
  const double herm = (m_ + m_.adjoint()).cwiseAbs().maxCoeff();
  require(herm <= kAlgebraTol,
          "algebra element is not anti-Hermitian (deviation " + format_double(herm) + ")");
  const double tr = std::abs(m_.trace());
  require(tr <= kAlgebraTol * group_.n,
          "algebra element is not traceless (|tr| = " + format_double(tr) + ")");
  if (group_.family == GroupFamily::special_orthogonal) {
    const double im = m_.imag().cwiseAbs().maxCoeff();
    require(im <= kAlgebraTol,
            "so(n) algebra element must be real (deviation " + format_double(im) + ")");
  }
}

GroupElement::GroupElement(GroupDescriptor group, Eigen::MatrixXcd m)
    : group_(group), m_(std::move(m)) {
  require(m_.rows() == group_.n && m_.cols() == group_.n,
          "group element has wrong shape for " + group_.name());
  const double unit =
      (m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(group_.n, group_.n)).cwiseAbs().maxCoeff();
  require(unit <= kGroupTol,
          "group element is not unitary (deviation " + format_double(unit) + ")");
  const double det = std::abs(m_.determinant() - Complex(1.0, 0.0));
  require(det <= kGroupTol,
          "group element determinant is not 1 (deviation " + format_double(det) + ")");
  if (group_.family == GroupFamily::special_orthogonal) {
    const double im = m_.imag().cwiseAbs().maxCoeff();
    require(im <= kGroupTol,
            "so(n) group element must be real (deviation " + format_double(im) + ")");
  }
}

GroupElement GroupElement::inverse() const { return GroupElement(group_, m_.adjoint()); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  require(a.group() == b.group(), "group element product across different groups");
  return GroupElement(a.group(), a.matrix() * b.matrix());
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require(a.group() == b.group(), "algebra element sum across different groups");
  return AlgebraElement(a.group(), a.matrix() + b.matrix());
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require(a.group() == b.group(), "algebra element difference across different groups");
  return AlgebraElement(a.group(), a.matrix() - b.matrix());
}

AlgebraElement operator*(double s, const AlgebraElement& a) {
  return AlgebraElement(a.group(), s * a.matrix());
}

double inner(const AlgebraElement& x, const AlgebraElement& y) {
  require(x.group() == y.group(), "inner product across different groups");
  return -(x.matrix() * y.matrix()).trace().real();
}

double norm(const AlgebraElement& x) { return std::sqrt(inner(x, x)); }

namespace {

Eigen::MatrixXcd unit_pair_sym(int n, int p, int q) {
  // (E_pq - E_qp)/sqrt(2)
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  m(p, q) = Complex(1.0 / std::sqrt(2.0), 0.0);
  m(q, p) = Complex(-1.0 / std::sqrt(2.0), 0.0);
  return m;
}

Eigen::MatrixXcd unit_pair_asym(int n, int p, int q) {
  // i(E_pq + E_qp)/sqrt(2)
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  m(p, q) = Complex(0.0, 1.0 / std::sqrt(2.0));
  m(q, p) = Complex(0.0, 1.0 / std::sqrt(2.0));
  return m;
}

OrthonormalBasis build_basis(const GroupDescriptor& g) {
  OrthonormalBasis basis;
  const int n = g.n;
  if (g.family == GroupFamily::special_unitary) {
    basis.cartan_count = g.rank;
    for (int k = 1; k < n; ++k) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
      const double s = 1.0 / std::sqrt(double(k) * (k + 1));
      for (int p = 0; p < k; ++p) m(p, p) = Complex(0.0, s);
      m(k, k) = Complex(0.0, -k * s);
      basis.elements.emplace_back(g, m);
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        basis.elements.emplace_back(g, unit_pair_sym(n, p, q));
        basis.elements.emplace_back(g, unit_pair_asym(n, p, q));
      }
  } else {
    basis.cartan_count = g.rank;
    for (int j = 0; j < g.rank; ++j)
      basis.elements.emplace_back(g, unit_pair_sym(n, 2 * j, 2 * j + 1));
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (q == p + 1 && p % 2 == 0 && q < 2 * g.rank) continue;  // Cartan block
        basis.elements.emplace_back(g, unit_pair_sym(n, p, q));
      }
  }
  if (int(basis.elements.size()) != g.dim_g)
    throw std::logic_error("basis size mismatch for " + g.name());
  return basis;
}

}  // namespace

const OrthonormalBasis& standard_basis(const GroupDescriptor& group) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, OrthonormalBasis> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(int(group.family), group.n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_basis(group)).first;
  return it->second;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require(x.group() == y.group(), "bracket across different groups");
  return AlgebraElement(x.group(), x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

AlgebraElement adjoint_group(const GroupElement& g, const AlgebraElement& y) {
  require(g.group() == y.group(), "adjoint_group across different groups");
  return AlgebraElement(y.group(), g.matrix() * y.matrix() * g.matrix().adjoint());
}

GroupElement exp_matrix(const AlgebraElement& x) {
  Eigen::MatrixXcd e = x.matrix().exp();
  const int n = x.group().n;
  const double drift =
      (e.adjoint() * e - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (drift > kGroupTol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
    e = svd.matrixU() * svd.matrixV().adjoint();
  }
  return GroupElement(x.group(), std::move(e));
}

GroupElement torus_element(const GroupDescriptor& group, const Eigen::VectorXd& angles) {
  require(angles.size() == group.rank,
          "torus_element: expected " + std::to_string(group.rank) + " angles for " + group.name());
  const OrthonormalBasis& basis = standard_basis(group);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(group.n, group.n);
  for (int k = 0; k < group.rank; ++k) m += angles[k] * basis.elements[k].matrix();
  return exp_matrix(AlgebraElement(group, m));
}

Eigen::MatrixXd angle_to_cartan(const GroupDescriptor& group) {
  const OrthonormalBasis& basis = standard_basis(group);
  const int n = group.n;
  Eigen::MatrixXd a(group.rank, group.rank);
  for (int j = 0; j < group.rank; ++j) {
    Eigen::MatrixXcd lattice = Eigen::MatrixXcd::Zero(n, n);
    if (group.family == GroupFamily::special_unitary) {
      lattice(j, j) = Complex(0.0, 1.0);
      lattice(j + 1, j + 1) = Complex(0.0, -1.0);
    } else {
      lattice(2 * j, 2 * j + 1) = Complex(1.0, 0.0);
      lattice(2 * j + 1, 2 * j) = Complex(-1.0, 0.0);
    }
    AlgebraElement gen(group, lattice);
    for (int k = 0; k < group.rank; ++k) a(k, j) = inner(gen, basis.elements[k]);
  }
  return a;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed), normal_(0.0, 1.0) {}

RandomStream RandomStream::derive(std::uint64_t index) const {
  return RandomStream(splitmix64(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
}

double RandomStream::uniform() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double RandomStream::gaussian() { return normal_(engine_); }

std::uint64_t RandomStream::next_u64() { return engine_(); }

GroupElement haar_sample(const GroupDescriptor& group, RandomStream& rng) {
  const int n = group.n;
  if (group.family == GroupFamily::special_unitary) {
    Eigen::MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z(i, j) = Complex(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::VectorXcd d = qr.matrixQR().diagonal();
    for (int i = 0; i < n; ++i) {
      const double a = std::abs(d[i]);
      q.col(i) *= a > 0 ? d[i] / a : Complex(1.0, 0.0);
    }
    const Complex det = q.determinant();
    q *= std::exp(Complex(0.0, -std::arg(det) / n));
    return GroupElement(group, std::move(q));
  }
  Eigen::MatrixXd z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = rng.gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd d = qr.matrixQR().diagonal();
  for (int i = 0; i < n; ++i) q.col(i) *= d[i] < 0 ? -1.0 : 1.0;
  if (q.determinant() < 0) q.col(n - 1) *= -1.0;
  return GroupElement(group, q.cast<Complex>());
}

}  // namespace weylreduce::lie
