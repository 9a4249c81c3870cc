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

#include "cliffordlab/polyanalytic.hpp"

#include <cmath>

#include "axial.hpp"
#include "cliffordlab/fueter.hpp"

namespace cliffordlab {

PolySliceFunction::PolySliceFunction(int n, int m, int order) : n(n), m(m) {
  check_odd_dimension(n);
  if (m < 0) throw std::invalid_argument("polyanalytic order must be at least 1");
  layers.assign(static_cast<std::size_t>(m) + 1, TaylorSeries(n, order));
}

PolySliceFunction::PolySliceFunction(int n, std::vector<TaylorSeries> layers_in)
    : n(n), m(static_cast<int>(layers_in.size()) - 1), layers(std::move(layers_in)) {
  check_odd_dimension(n);
  if (layers.empty()) throw std::invalid_argument("at least one layer is required");
  for (const auto& l : layers)
    if (l.dim() != n) throw std::invalid_argument("layer dimension mismatch");
}

void PolySliceFunction::set(int k, int j, ExactMultivector coeff) {
  if (k < 0 || k > m) throw std::out_of_range("layer index out of range");
  layers[static_cast<std::size_t>(k)].set(j, std::move(coeff));
}

ExactPolynomial poly_compose(const PolySliceFunction& f) {
  ExactPolynomial out(f.n);
  for (int k = 0; k <= f.m; ++k) {
    const ExactPolynomial layer = slice_extend(f.layer(k));
    if (layer.is_zero()) continue;
    out += conj_paravector_power<Rational>(f.n, k) * layer;
  }
  return out;
}

ExactPolynomial axial_compose(std::span<const ExactPolynomial> components) {
  if (components.empty()) throw std::invalid_argument("at least one component is required");
  const int n = components.front().dim();
  ExactPolynomial out(n);
  for (std::size_t k = 0; k < components.size(); ++k) {
    out += real_power<Rational>(n, static_cast<int>(k)) * components[k];
  }
  return out;
}

std::vector<ExactPolynomial> poly_project(const ExactPolynomial& p, int m) {
  if (m < 0) throw std::invalid_argument("polyanalytic order must be at least 1");
  const int order = m + 1;
  std::vector<ExactPolynomial> powers{p};
  for (int i = 1; i <= order; ++i) powers.push_back(dirac(powers.back()));
  if (!powers[order].is_zero()) throw std::domain_error("input is not polyanalytic of the requested order");

  const int n = p.dim();
  std::vector<ExactPolynomial> out;
  for (int k = 0; k <= m; ++k) {
    ExactPolynomial g(n);
    for (int s = 0; s <= order - k; ++s) {
      const int e = order - k - s;
      if (powers[order - s].is_zero()) continue;
      Rational scale = Rational(e % 2 ? -1 : 1) / factorial(static_cast<unsigned>(e));
      g += real_power<Rational>(n, e) * powers[order - s] * scale;
    }
    out.push_back(g * Rational(1 / factorial(static_cast<unsigned>(k))));
  }
  return out;
}

ExactPolynomial c_map_monomial(int n, int m, int k, int j) {
  check_odd_dimension(n);
  if (k < 0 || k > m) throw std::out_of_range("layer index must satisfy 0 <= k <= m");
  if (j < 0) throw std::invalid_argument("power must be nonnegative");
  if (j < n - 1) return ExactPolynomial(n);
  const unsigned h = static_cast<unsigned>((n - 1) / 2);
  const Rational g = factorial(h);
  const Rational sign(h % 2 ? -1 : 1);
  if (j == n - 1) {
    return real_power<Rational>(n, k) * (sign * int_power(Rational(4), h) * g * g);
  }
  const int s = j + 1 - n;
  const Rational scale = g * g * int_power(Rational(2), static_cast<unsigned>(n - 1)) * sign *
                         pochhammer(Rational(n), s) / factorial(static_cast<unsigned>(s));
  return real_power<Rational>(n, k) * appell_polynomial(n, s) * scale;
}

ExactPolynomial c_map(const PolySliceFunction& f) {
  ExactPolynomial out(f.n);
  for (int k = 0; k <= f.m; ++k) {
    for (int j = 0; j <= f.layer(k).order(); ++j) {
      const ExactMultivector& a = f.layer(k)[j];
      if (a.is_zero()) continue;
      out += c_map_monomial(f.n, f.m, k, j) * a;
    }
  }
  return out;
}

ExactPolynomial tau_map_monomial(int n, int m, int k, int j) {
  check_odd_dimension(n);
  if (k < 0 || k > m) throw std::out_of_range("layer index must satisfy 0 <= k <= m");
  if (k != m) return ExactPolynomial(n);
  const Rational scale = int_power(Rational(2), static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(m));
  return fueter_sce_monomial(n, j) * scale;
}

AppellSeries tau_map(const PolySliceFunction& f) {
  const Rational scale = int_power(Rational(2), static_cast<unsigned>(f.m)) * factorial(static_cast<unsigned>(f.m));
  return fueter_sce_series(f.n, f.layer(f.m)) * scale;
}

ExactPolynomial appell_poly(int k, int s, int n) {
  if (k < 0 || s < 0) throw std::invalid_argument("indices must be nonnegative");
  return real_power<Rational>(n, k) * appell_polynomial(n, s);
}

bool appell_like_check(int k, int s, int n) {
  ExactPolynomial rhs(n);
  if (k > 0) rhs += appell_poly(k - 1, s, n) * Rational(k);
  if (s > 0) rhs += appell_poly(k, s - 1, n) * Rational(2 * s);
  return conj_derivative(appell_poly(k, s, n)) == rhs;
}

bool relation_check(const PolySliceFunction& f) {
  const ExactPolynomial lhs = dirac_power(c_map(f), f.m);
  const ExactPolynomial rhs = materialize(tau_map(f)) * Rational(1, 1 << f.m);
  return lhs == rhs;
}

AxialRational::AxialRational(const ExactPolynomial& p) : n_(p.dim()) {
  if (!p.is_zero()) parts_.emplace(0, p);
}

// V(Q r^{-i}) = (d_0 Q) r^{-i} + xv (E Q - 2 i Q) r^{-i-1}, E the Euler operator
// in x_1..x_n and r = |xv|^2.
AxialRational AxialRational::apply_v() const {
  std::map<int, ExactPolynomial> out;
  auto accumulate = [&](int i, const ExactPolynomial& q) {
    if (q.is_zero()) return;
    auto [it, inserted] = out.try_emplace(i, q);
    if (!inserted) {
      it->second += q;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  const ExactPolynomial xv = vector_variable<Rational>(n_);
  for (const auto& [i, q] : parts_) {
    accumulate(i, partial_derivative(q, 0));
    ExactPolynomial euler(n_);
    for (const auto& [mono, c] : q.terms()) {
      int spatial = 0;
      for (int l = 1; l <= n_; ++l) spatial += mono.exps[l];
      if (spatial != 2 * i) euler.add_term(mono, c * Rational(spatial - 2 * i));
    }
    if (!euler.is_zero()) accumulate(i + 1, xv * euler);
  }
  return AxialRational(n_, std::move(out));
}

Multivector<double> AxialRational::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != n_ + 1) {
    throw std::invalid_argument("evaluation point must have n+1 coordinates");
  }
  double r = 0.0;
  for (int l = 1; l <= n_; ++l) r += point[l] * point[l];
  if (r == 0.0) throw std::domain_error("V is undefined on the real axis");
  Multivector<double> out(n_);
  for (const auto& [i, q] : parts_) out += cliffordlab::evaluate(q, point) * std::pow(r, -i);
  return out;
}

std::vector<Multivector<double>> global_v(const ExactPolynomial& p, int m,
                                          std::span<const std::vector<double>> points) {
  if (m < 0) throw std::invalid_argument("power must be nonnegative");
  AxialRational f(p);
  for (int i = 0; i < m; ++i) f = f.apply_v();
  std::vector<Multivector<double>> out;
  for (const auto& pt : points) out.push_back(f.evaluate(pt));
  return out;
}

// V^m (sum_k xbar^k f_k) = sum_{k >= m} 2^m k!/(k-m)! xbar^{k-m} f_k
ExactPolynomial v_power_layers(const PolySliceFunction& f, int m) {
  if (m < 0) throw std::invalid_argument("power must be nonnegative");
  ExactPolynomial out(f.n);
  for (int k = m; k <= f.m; ++k) {
    const ExactPolynomial layer = slice_extend(f.layer(k));
    if (layer.is_zero()) continue;
    const Rational scale = int_power(Rational(2), static_cast<unsigned>(m)) *
                           factorial(static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k - m));
    out += conj_paravector_power<Rational>(f.n, k - m) * layer * scale;
  }
  return out;
}

}  // namespace cliffordlab
