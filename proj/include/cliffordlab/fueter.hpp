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

// The Fueter-Sce map Delta^{(n-1)/2} on slice monogenic monomials and
// series, its kernel and range, and the weight transport c -> b between the
// slice space HS(Omega_c) and the axially monogenic space HM(Omega_b).

#include <functional>
#include <string>
#include <utility>

#include "cliffordlab/appell.hpp"

namespace cliffordlab {

/// gamma_n = (-1)^{(n-1)/2} 2^{n-1} [((n-1)/2)!]^2 / (n-1)!, n odd.
Rational fueter_gamma(int n);

/// Closed form of Delta^{(n-1)/2} x^j:
///   0                                   j < n-1
///   gamma_n (n-1)!                      j = n-1
///   gamma_n j!/(j-n+1)! P_{j+1-n}^n     j > n-1
ExactPolynomial fueter_sce_monomial(int n, int j);

/// beta_k = gamma_n (n+k-1)!/k! a_{k+n-1}; the first n-1 Taylor
/// coefficients are annihilated.
AppellSeries fueter_sce_series(int n, const TaylorSeries& f);

/// Right inverse of fueter_sce_series: the Taylor series with zero
/// coefficients below n-1 whose image is g.
TaylorSeries fueter_sce_preimage(int n, const AppellSeries& g);

enum class WeightKind { Hardy, Bergman, Dirichlet, Fock, Custom };

std::string to_string(WeightKind kind);
WeightKind parse_weight_kind(const std::string& name);

class WeightSequence {
 public:
  using Generator = std::function<Rational(int)>;

  WeightSequence(WeightKind kind, Generator gen) : kind_(kind), gen_(std::move(gen)) {}

  static WeightSequence hardy();      // c_k = 1
  static WeightSequence bergman();    // c_k = 1/(k+1)
  static WeightSequence dirichlet();  // c_k = k
  static WeightSequence fock();       // c_k = k!
  static WeightSequence builtin(WeightKind kind);

  WeightKind kind() const { return kind_; }
  Rational operator()(int k) const { return gen_(k); }

  /// c_0 = 1 and non-decreasing on 0..upto.
  bool is_admissible(int upto) const;

 private:
  WeightKind kind_;
  Generator gen_;
};

/// b_k = c_{k+n-1} (k!)^2 / ((n+k-1)!)^2.
WeightSequence transport_weights(int n, const WeightSequence& c);

/// sum_k c_k |a_k|^2 over the stored coefficients.
Rational weighted_norm_sq(const WeightSequence& c, const TaylorSeries& f);
Rational weighted_norm_sq(const WeightSequence& b, const AppellSeries& f);

struct NormIdentity {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// lhs = ||Delta^{(n-1)/2} f||_b^2,
/// rhs = gamma_n^2 (||f||_c^2 - sum_{k<=n-2} c_k |f^{(k)}(0)|^2 / (k!)^2).
NormIdentity range_norm_identity(int n, const WeightSequence& c, const TaylorSeries& f);

struct DiagramRoutes {
  ExactPolynomial fueter_route;  // Delta^{(n-1)/2} S[f]
  ExactPolynomial gck_route;     // gamma_n GCK[f^{(n-1)}]
  bool agree() const { return fueter_route == gck_route; }
};

/// Materializes both sides of Delta^{(n-1)/2} S = gamma_n GCK d^{n-1}/dx_0^{n-1}.
DiagramRoutes diagram_routes(int n, const TaylorSeries& f);
bool diagram_check(int n, const TaylorSeries& f);

/// True iff a_k = 0 for every k >= n-1.
bool kernel_membership(int n, const TaylorSeries& f);

}  // namespace cliffordlab
