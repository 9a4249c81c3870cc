// Copyright 2026 The cliffordlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffordlab/rkhs.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "axial.hpp"

namespace cliffordlab {

CoefficientFunction::CoefficientFunction(int n, std::vector<ExactMultivector> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  check_dimension(n);
  for (const auto& c : coeffs_)
    if (c.dim() != n) throw std::invalid_argument("coefficient dimension mismatch");
  trim();
}

CoefficientFunction CoefficientFunction::appell(int n, int k, const ExactMultivector& coeff) {
  if (k < 0) throw std::invalid_argument("index must be nonnegative");
  std::vector<ExactMultivector> coeffs(static_cast<std::size_t>(k) + 1, ExactMultivector(n));
  coeffs[k] = coeff;
  return {n, std::move(coeffs)};
}

CoefficientFunction CoefficientFunction::from_series(const AppellSeries& s) { return {s.dim(), s.coeffs()}; }

ExactMultivector CoefficientFunction::operator[](int k) const {
  if (k < 0 || k >= support_size()) return ExactMultivector(n_);
  return coeffs_[static_cast<std::size_t>(k)];
}

AppellSeries CoefficientFunction::to_series() const {
  if (coeffs_.empty()) return AppellSeries(n_, 0);
  return AppellSeries(n_, coeffs_);
}

ExactPolynomial CoefficientFunction::materialize() const { return cliffordlab::materialize(to_series()); }

CoefficientFunction& CoefficientFunction::operator+=(const CoefficientFunction& o) {
  if (o.n_ != n_) throw std::invalid_argument("coefficient function dimension mismatch");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ExactMultivector(n_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

CoefficientFunction& CoefficientFunction::operator-=(const CoefficientFunction& o) {
  if (o.n_ != n_) throw std::invalid_argument("coefficient function dimension mismatch");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ExactMultivector(n_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

void CoefficientFunction::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SpaceConfig SpaceConfig::fock(int n) {
  check_odd_dimension(n);
  return {SpaceKind::CliffordAppellFock, n, WeightSequence::fock()};
}

SpaceConfig SpaceConfig::hardy(int n) {
  check_odd_dimension(n);
  return {SpaceKind::CliffordAppellHardy, n, WeightSequence::hardy()};
}

SpaceConfig SpaceConfig::fueter_range(int n, const WeightSequence& c) {
  return {SpaceKind::FueterRange, n, transport_weights(n, c)};
}

double SpaceConfig::domain_radius_sq() const {
  switch (weights_.kind()) {
    case WeightKind::Fock: return std::numeric_limits<double>::infinity();
    case WeightKind::Hardy:
    case WeightKind::Bergman:
    case WeightKind::Dirichlet: return 1.0;
    case WeightKind::Custom: break;
  }
  // Ratio-test estimate of the radius of sum |x|^{2k} / b_k.
  constexpr int kProbe = 512;
  return Rational(weight(kProbe + 1) / weight(kProbe)).get_d();
}

namespace {

void check_space(const SpaceConfig& space, int n) {
  if (space.dim() != n) throw std::invalid_argument("space and function dimensions differ");
}

double point_norm_sq(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc;
}

void check_point(const SpaceConfig& space, std::span<const double> x, const char* name) {
  if (static_cast<int>(x.size()) != space.dim() + 1) {
    throw std::invalid_argument(std::string(name) + " must have n+1 coordinates");
  }
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
  if (point_norm_sq(x) >= space.domain_radius_sq()) {
    throw std::domain_error(std::string(name) + " lies outside the domain of the space");
  }
}

double weight_d(const SpaceConfig& space, int k) {
  const Rational b = space.weight(k);
  if (sgn(b) <= 0) throw std::domain_error("weight sequence must be positive");
  return b.get_d();
}

// Upper bound on sum_{k > order} t^k / b_k.
double kernel_tail(const SpaceConfig& space, double t, int order) {
  if (t == 0.0) return 0.0;
  switch (space.kind()) {
    case SpaceKind::CliffordAppellFock:
      return std::exp(t + (order + 1) * std::log(t) - std::lgamma(order + 2.0));
    case SpaceKind::CliffordAppellHardy:
      return std::pow(t, order + 1) / (1.0 - t);
    case SpaceKind::FueterRange: break;
  }
  // Ratios b_k / b_{k+1} are non-increasing for the built-in families, so
  // the first ratio past the cut bounds all later ones.
  const double ratio = t * Rational(space.weight(order + 1) / space.weight(order + 2)).get_d();
  if (ratio >= 1.0) throw std::domain_error("truncation order too small for a certified kernel tail");
  const double first = std::exp((order + 1) * std::log(t) - std::log(weight_d(space, order + 1)));
  return first / (1.0 - ratio);
}

}  // namespace

ExactMultivector inner_product(const SpaceConfig& space, const CoefficientFunction& f,
                               const CoefficientFunction& g) {
  check_space(space, f.dim());
  check_space(space, g.dim());
  ExactMultivector acc(f.dim());
  const int k_max = std::min(f.support_size(), g.support_size());
  for (int k = 0; k < k_max; ++k) {
    if (f[k].is_zero() || g[k].is_zero()) continue;
    acc += clifford_conjugate(f[k]) * g[k] * space.weight(k);
  }
  return acc;
}

Rational norm_sq(const SpaceConfig& space, const CoefficientFunction& f) {
  return real_part(inner_product(space, f, f));
}

KernelValue kernel_eval(const SpaceConfig& space, std::span<const double> x, std::span<const double> y,
                        int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
  check_point(space, x, "x");
  check_point(space, y, "y");
  const int n = space.dim();
  const auto px = appell_values(n, order, x);
  const auto py = appell_values(n, order, y);
  Multivector<double> sum(n);
  for (int k = 0; k <= order; ++k) sum += px[k] * clifford_conjugate(py[k]) * (1.0 / weight_d(space, k));
  const double t = std::sqrt(point_norm_sq(x) * point_norm_sq(y));
  return {std::move(sum), kernel_tail(space, t, order)};
}

CoefficientFunction kernel_section(const SpaceConfig& space, std::span<const Rational> y, int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
  const int n = space.dim();
  std::vector<ExactMultivector> coeffs;
  for (int k = 0; k <= order; ++k) {
    const ExactMultivector pk = detail::axial_appell(n, k).evaluate(n, y);
    coeffs.push_back(clifford_conjugate(pk) * Rational(1 / space.weight(k)));
  }
  return {n, std::move(coeffs)};
}

ExactMultivector reproducing_residual_exact(const SpaceConfig& space, const CoefficientFunction& f,
                                            std::span<const Rational> y, int order) {
  if (f.support_size() > order + 1) throw std::invalid_argument("support of f exceeds the truncation order");
  const ExactMultivector pairing = inner_product(space, kernel_section(space, y, order), f);
  return pairing - evaluate_exact(f.materialize(), y);
}

double reproducing_check(const SpaceConfig& space, const CoefficientFunction& f, std::span<const double> y,
                         int order) {
  if (f.support_size() > order + 1) throw std::invalid_argument("support of f exceeds the truncation order");
  check_point(space, y, "y");
  const int n = space.dim();
  const auto py = appell_values(n, order, y);
  // <K_y, f> = sum_k b_k conj(conj(P_k(y)) / b_k) f_k
  Multivector<double> pairing(n);
  for (int k = 0; k < f.support_size(); ++k) {
    const Multivector<double> section = clifford_conjugate(py[k]) * (1.0 / weight_d(space, k));
    pairing += clifford_conjugate(section) * approximate(f[k]) * weight_d(space, k);
  }
  return norm(pairing - evaluate(f.materialize(), y));
}

PointwiseBound pointwise_bound(const SpaceConfig& space, const CoefficientFunction& f,
                               std::span<const double> x) {
  check_space(space, f.dim());
  check_point(space, x, "x");
  const int n = space.dim();
  const double r_sq = point_norm_sq(x);
  const double f_norm = std::sqrt(norm_sq(space, f).get_d());
  const auto px = appell_values(n, std::max(f.support_size() - 1, 0), x);
  Multivector<double> value(n);
  for (int k = 0; k < f.support_size(); ++k) value += px[k] * approximate(f[k]);

  double factor = 0.0;
  switch (space.kind()) {
    case SpaceKind::CliffordAppellFock:
      factor = std::pow(2.0, n / 2.0) * std::exp(r_sq / 2.0);
      break;
    case SpaceKind::CliffordAppellHardy:
      factor = 1.0 / std::sqrt(1.0 - r_sq);
      break;
    case SpaceKind::FueterRange: {
      // (2^n sum_k |x|^{2k} / b_k)^{1/2}, summed until the terms are negligible
      double acc = 0.0;
      for (int k = 0; k < 100000; ++k) {
        const double term = std::exp(k * std::log(r_sq) - std::log(weight_d(space, k)));
        acc += (k == 0) ? 1.0 / weight_d(space, 0) : term;
        if (r_sq == 0.0 || (k > f.support_size() && term < 1e-18 * acc)) break;
      }
      factor = std::sqrt(std::pow(2.0, n) * acc);
      break;
    }
  }
  return {norm(value), factor * f_norm};
}

bool pointwise_bound_check(const SpaceConfig& space, const CoefficientFunction& f, std::span<const double> x) {
  return pointwise_bound(space, f, x).holds();
}

CoefficientFunction creation(const CoefficientFunction& f) {
  if (f.support_size() == 0) return f;
  std::vector<ExactMultivector> coeffs{ExactMultivector(f.dim())};
  coeffs.insert(coeffs.end(), f.coeffs().begin(), f.coeffs().end());
  return {f.dim(), std::move(coeffs)};
}

CoefficientFunction annihilation(const CoefficientFunction& f) {
  std::vector<ExactMultivector> coeffs;
  for (int k = 0; k + 1 < f.support_size(); ++k) coeffs.push_back(f[k + 1] * Rational(k + 1));
  return {f.dim(), std::move(coeffs)};
}

CoefficientFunction backward_shift(const CoefficientFunction& f) {
  std::vector<ExactMultivector> coeffs;
  for (int k = 0; k + 1 < f.support_size(); ++k) coeffs.push_back(f[k + 1]);
  return {f.dim(), std::move(coeffs)};
}

bool adjoint_check(const SpaceConfig& space, const CoefficientFunction& f, const CoefficientFunction& g) {
  switch (space.kind()) {
    case SpaceKind::CliffordAppellFock:
      return inner_product(space, annihilation(f), g) == inner_product(space, f, creation(g));
    case SpaceKind::CliffordAppellHardy:
      return inner_product(space, backward_shift(f), g) == inner_product(space, f, creation(g));
    case SpaceKind::FueterRange: break;
  }
  throw std::invalid_argument("adjoint identity is defined for the Fock and Hardy modules only");
}

bool commutator_check(const CoefficientFunction& f) {
  return annihilation(creation(f)) - creation(annihilation(f)) == f;
}

bool DivergenceWitness::certified(double threshold) const {
  return g_norm_sq <= std::numbers::pi * std::numbers::pi / 6.0 && creation_norm_sq >= creation_lower_bound &&
         annihilation_norm_sq >= annihilation_lower_bound && creation_lower_bound > threshold &&
         annihilation_lower_bound > threshold;
}

// g_k = 1 / sqrt((k+1) (k+1)!) for k < terms, measured in the Fock weights.
DivergenceWitness divergence_witness(long terms) {
  if (terms < 1) throw std::invalid_argument("witness needs at least one term");
  auto log_g_sq = [](long k) { return -std::log(k + 1.0) - std::lgamma(k + 2.0); };
  auto log_b = [](long k) { return std::lgamma(k + 1.0); };
  double g = 0.0, mg = 0.0, ag = 0.0;
  for (long k = 0; k < terms; ++k) {
    g += std::exp(log_b(k) + log_g_sq(k));
    mg += std::exp(log_b(k + 1) + log_g_sq(k));  // (Mg)_{k+1} = g_k
    if (k + 1 < terms) {
      // (Ag)_k = (k+1) g_{k+1}
      ag += std::exp(log_b(k) + 2.0 * std::log(k + 1.0) + log_g_sq(k + 1));
    }
  }
  const double pi_sq_6 = std::numbers::pi * std::numbers::pi / 6.0;
  return {terms, g, mg, std::log(terms + 1.0), ag, std::log(terms + 1.0) - pi_sq_6};
}

}  // namespace cliffordlab
