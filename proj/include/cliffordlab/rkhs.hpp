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

// Hilbert modules HM(Omega_b) of axially monogenic functions written in the
// Clifford-Appell basis. Everything operates on coefficient functions
// f = sum_k P_k^n alpha_k; polynomials are only materialized for
// cross-checks.

#include <span>
#include <string>
#include <vector>

#include "cliffordlab/appell.hpp"
#include "cliffordlab/fueter.hpp"

namespace cliffordlab {

/// Finitely supported k -> alpha_k in the Appell basis. Trailing zeros are
/// trimmed, so equality is equality of functions.
class CoefficientFunction {
 public:
  explicit CoefficientFunction(int n) : n_(n) { check_dimension(n); }
  CoefficientFunction(int n, std::vector<ExactMultivector> coeffs);

  static CoefficientFunction appell(int n, int k, const ExactMultivector& coeff);
  static CoefficientFunction appell(int n, int k) {
    return appell(n, k, ExactMultivector::scalar(n, 1));
  }
  static CoefficientFunction from_series(const AppellSeries& s);

  int dim() const { return n_; }
  /// One past the largest index with a nonzero coefficient.
  int support_size() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<ExactMultivector>& coeffs() const { return coeffs_; }
  ExactMultivector operator[](int k) const;

  AppellSeries to_series() const;
  ExactPolynomial materialize() const;

  CoefficientFunction& operator+=(const CoefficientFunction& o);
  CoefficientFunction& operator-=(const CoefficientFunction& o);
  friend CoefficientFunction operator+(CoefficientFunction a, const CoefficientFunction& b) { return a += b; }
  friend CoefficientFunction operator-(CoefficientFunction a, const CoefficientFunction& b) { return a -= b; }
  friend bool operator==(const CoefficientFunction&, const CoefficientFunction&) = default;

 private:
  void trim();

  int n_;
  std::vector<ExactMultivector> coeffs_;
};

enum class SpaceKind { CliffordAppellFock, CliffordAppellHardy, FueterRange };

class SpaceConfig {
 public:
  static SpaceConfig fock(int n);   // b_k = k!
  static SpaceConfig hardy(int n);  // b_k = 1
  /// b from transport_weights(n, c).
  static SpaceConfig fueter_range(int n, const WeightSequence& c);

  SpaceKind kind() const { return kind_; }
  int dim() const { return n_; }
  Rational weight(int k) const { return weights_(k); }
  /// Squared radius of the domain of convergence; infinity for Fock-type.
  double domain_radius_sq() const;

 private:
  SpaceConfig(SpaceKind kind, int n, WeightSequence w) : kind_(kind), n_(n), weights_(std::move(w)) {}

  SpaceKind kind_;
  int n_;
  WeightSequence weights_;
};

/// <f, g> = sum_k b_k conj(alpha_k) beta_k.
ExactMultivector inner_product(const SpaceConfig& space, const CoefficientFunction& f,
                               const CoefficientFunction& g);
/// Re <f, f>.
Rational norm_sq(const SpaceConfig& space, const CoefficientFunction& f);

struct KernelValue {
  Multivector<double> value;
  double tail_bound;
};

/// sum_{k<=K} P_k(x) conj(P_k(y)) / b_k with a bound on the omitted tail.
KernelValue kernel_eval(const SpaceConfig& space, std::span<const double> x, std::span<const double> y,
                        int order);

/// The coefficient function of K_y truncated at K, alpha_k = conj(P_k(y))/b_k,
/// for an exact point y.
CoefficientFunction kernel_section(const SpaceConfig& space, std::span<const Rational> y, int order);

/// <K_y, f> - f(y) computed exactly; zero whenever the support of f is
/// within the truncation order.
ExactMultivector reproducing_residual_exact(const SpaceConfig& space, const CoefficientFunction& f,
                                            std::span<const Rational> y, int order);
/// Double-precision version: max component of <K_y, f> - f(y).
double reproducing_check(const SpaceConfig& space, const CoefficientFunction& f, std::span<const double> y,
                         int order);

struct PointwiseBound {
  double lhs;  // |f(x)|
  double rhs;  // space-specific bound times ||f||
  bool holds() const { return lhs <= rhs; }
};

PointwiseBound pointwise_bound(const SpaceConfig& space, const CoefficientFunction& f,
                               std::span<const double> x);
bool pointwise_bound_check(const SpaceConfig& space, const CoefficientFunction& f, std::span<const double> x);

/// M_{P_1}: (Mf)_{k+1} = f_k.
CoefficientFunction creation(const CoefficientFunction& f);
/// d-bar/2: (Af)_k = (k+1) f_{k+1}.
CoefficientFunction annihilation(const CoefficientFunction& f);
/// S: (Sf)_k = f_{k+1}.
CoefficientFunction backward_shift(const CoefficientFunction& f);

/// Fock: <A f, g> = <f, M g>; Hardy: <S f, g> = <f, M g>.
bool adjoint_check(const SpaceConfig& space, const CoefficientFunction& f, const CoefficientFunction& g);

/// A(M f) - M(A f) = f.
bool commutator_check(const CoefficientFunction& f);

/// Partial sums for g = sum_k P_k / sqrt((k+1)(k+1)!) in the
/// Clifford-Appell-Fock space, together with lower bounds certifying that
/// ||M g|| and ||A g|| diverge while ||g|| stays below pi^2/6.
struct DivergenceWitness {
  long terms;
  double g_norm_sq;
  double creation_norm_sq;
  double creation_lower_bound;  // ln(N+1) <= H_N
  double annihilation_norm_sq;
  double annihilation_lower_bound;  // ln(N+1) - pi^2/6
  bool certified(double threshold) const;
};

DivergenceWitness divergence_witness(long terms);

}  // namespace cliffordlab
