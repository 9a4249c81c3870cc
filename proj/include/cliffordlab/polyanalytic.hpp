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

#pragma once

// Polyanalytic extensions: slice polyanalytic functions
// f = sum_{k<=m} xbar^k f_k(x) with slice monogenic layers f_k, the two
// polyanalytic Fueter-Sce maps C_{m+1} and tau_{m+1}, the global operator V
// and the polyanalytic Clifford-Appell polynomials A_{k,s} = x_0^k P_s.

#include <map>
#include <span>
#include <vector>

#include "cliffordlab/appell.hpp"

namespace cliffordlab {

/// Layer k holds the Taylor data alpha_{k,j} of f_k(x) = sum_j x^j alpha_{k,j}.
struct PolySliceFunction {
  int n;
  int m;
  std::vector<TaylorSeries> layers;  // size m + 1

  PolySliceFunction(int n, int m, int order);
  PolySliceFunction(int n, std::vector<TaylorSeries> layers);

  const TaylorSeries& layer(int k) const { return layers.at(static_cast<std::size_t>(k)); }
  void set(int k, int j, ExactMultivector coeff);
};

/// sum_k xbar^k S[layer_k].
ExactPolynomial poly_compose(const PolySliceFunction& f);

/// sum_k x_0^k g_k for given polynomials g_0..g_m.
ExactPolynomial axial_compose(std::span<const ExactPolynomial> components);

/// Monogenic components g_0..g_m of p = sum_k x_0^k g_k, via
///   g_k = 1/k! sum_{s=0}^{M-k} (-x_0)^{M-k-s}/(M-k-s)! d^{M-s} p,  M = m+1.
/// Throws std::domain_error unless dirac^{m+1} p = 0.
std::vector<ExactPolynomial> poly_project(const ExactPolynomial& p, int m);

/// C_{m+1}(xbar^k x^j) in closed form (throws for k > m).
ExactPolynomial c_map_monomial(int n, int m, int k, int j);
/// sum_{k,j} C_{m+1}(xbar^k x^j) alpha_{k,j}.
ExactPolynomial c_map(const PolySliceFunction& f);

/// tau_{m+1}(xbar^k x^j) in closed form; zero unless k == m and j >= n-1.
ExactPolynomial tau_map_monomial(int n, int m, int k, int j);
/// tau_{m+1}(f) as coefficients in the Appell basis.
AppellSeries tau_map(const PolySliceFunction& f);

/// A_{k,s}^n = x_0^k P_s^n.
ExactPolynomial appell_poly(int k, int s, int n);
/// conj_derivative(A_{k,s}) == k A_{k-1,s} + 2 s A_{k,s-1}.
bool appell_like_check(int k, int s, int n);

/// dirac^m(C_{m+1} f) == 2^{-m} tau_{m+1} f, both materialized.
bool relation_check(const PolySliceFunction& f);

/// Functions sum_i Q_i(x) |x_vec|^{-2i} with polynomial Q_i: closed under the
/// global operator V, which is therefore applied exactly.
class AxialRational {
 public:
  explicit AxialRational(const ExactPolynomial& p);

  int dim() const { return n_; }
  const std::map<int, ExactPolynomial>& parts() const { return parts_; }

  /// V = d/dx_0 + (x_vec / |x_vec|^2) sum_l x_l d/dx_l.
  AxialRational apply_v() const;
  /// Off-axis evaluation; throws std::domain_error when x_vec = 0.
  Multivector<double> evaluate(std::span<const double> point) const;

 private:
  AxialRational(int n, std::map<int, ExactPolynomial> parts) : n_(n), parts_(std::move(parts)) {}

  int n_;
  std::map<int, ExactPolynomial> parts_;
};

/// V^m p evaluated at each sample point (all off the real axis).
std::vector<Multivector<double>> global_v(const ExactPolynomial& p, int m,
                                          std::span<const std::vector<double>> points);

/// 2^m m! S[layer m], obtained by applying V(xbar^k g) = 2k xbar^{k-1} g to
/// the layers m times.
ExactPolynomial v_power_layers(const PolySliceFunction& f, int m);

}  // namespace cliffordlab
