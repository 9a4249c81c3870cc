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

// Clifford-Appell polynomials P_k^n and the generalized CK-extension (GCK).
//
// P_k^n(x) = sum_{s=0}^k T_s^k(n) x^{k-s} xbar^s restricts to x_0^k on the
// real line and is monogenic, so GCK acts on truncated series as a change of
// basis: the Taylor coefficient of x_0^k becomes the coefficient of P_k^n.

#include <span>
#include <stdexcept>
#include <vector>

#include "cliffordlab/clifford.hpp"
#include "cliffordlab/polynomial.hpp"

namespace cliffordlab {

using ExactMultivector = Multivector<Rational>;

/// Only odd n >= 1 (up to kMaxDim) are supported by the Fueter-Sce machinery.
void check_odd_dimension(int n);

/// Rising factorial (a)_s = a (a+1) ... (a+s-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, int s);

/// T_s^k(n) = C(k,s) ((n+1)/2)_{k-s} ((n-1)/2)_s / (n)_k.
Rational t_coefficient(int n, int k, int s);

ExactPolynomial appell_polynomial(int n, int k);
/// P_0^n .. P_kmax^n, sharing the paravector powers between degrees.
std::vector<ExactPolynomial> appell_polynomials(int n, int kmax);

/// Numeric P_0^n(x) .. P_kmax^n(x) at a point (x_0..x_n). Uses that x and
/// xbar lie in the commutative plane span{1, x/|x|}, so each term is a
/// complex power computed in that plane.
std::vector<Multivector<double>> appell_values(int n, int kmax, std::span<const double> point);

struct TaylorBasis {
  static constexpr const char* name = "taylor";
};
struct AppellBasis {
  static constexpr const char* name = "appell";
};

/// Truncated coefficient sequence c_0..c_K of Clifford numbers. For the
/// Taylor basis c_k multiplies x_0^k (or x^k after slice extension); for the
/// Appell basis it multiplies P_k^n. Coefficients act from the right.
template <class Basis>
class Series {
 public:
  Series(int n, int order) : n_(n), coeffs_(static_cast<std::size_t>(order) + 1, ExactMultivector(n)) {
    check_dimension(n);
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  }
  Series(int n, std::vector<ExactMultivector> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    check_dimension(n);
    if (coeffs_.empty()) coeffs_.emplace_back(n);
    for (const auto& c : coeffs_) {
      if (c.dim() != n) throw std::invalid_argument("series coefficient dimension mismatch");
    }
  }

  /// The single term x_0^k (Taylor) or P_k (Appell), truncated at order.
  static Series monomial(int n, int k, int order, const Rational& scale = 1) {
    Series s(n, std::max(order, 0));
    if (k <= order) s.set(k, ExactMultivector::scalar(n, scale));
    return s;
  }

  int dim() const { return n_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactMultivector>& coeffs() const { return coeffs_; }

  ExactMultivector operator[](int k) const {
    if (k < 0 || k > order()) return ExactMultivector(n_);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  void set(int k, ExactMultivector c) {
    if (k < 0 || k > order()) throw std::out_of_range("series index beyond truncation order");
    if (c.dim() != n_) throw std::invalid_argument("series coefficient dimension mismatch");
    coeffs_[static_cast<std::size_t>(k)] = std::move(c);
  }

  Series truncated(int order) const {
    Series out(n_, order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) out.coeffs_[k] = coeffs_[k];
    return out;
  }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  Series& operator+=(const Series& o) {
    check_same(o);
    if (o.order() > order()) coeffs_.resize(o.coeffs_.size(), ExactMultivector(n_));
    for (int k = 0; k <= o.order(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Series& operator-=(const Series& o) { return *this += o * Rational(-1); }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend Series operator*(const Rational& s, Series a) { return std::move(a) * s; }
  /// Right multiplication of every coefficient by a Clifford constant.
  friend Series operator*(const Series& a, const ExactMultivector& c) {
    Series out = a;
    for (auto& v : out.coeffs_) v = v * c;
    return out;
  }
  /// Equal when orders and all coefficients agree.
  friend bool operator==(const Series& a, const Series& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  void check_same(const Series& o) const {
    if (o.n_ != n_) throw std::invalid_argument("series dimension mismatch");
  }

 private:
  int n_;
  std::vector<ExactMultivector> coeffs_;
};

using TaylorSeries = Series<TaylorBasis>;
using AppellSeries = Series<AppellBasis>;

/// Coefficient-wise relabeling x_0^k -> P_k^n.
AppellSeries gck_extend(const TaylorSeries& f0);
/// Restriction to the real line, inverse of gck_extend.
TaylorSeries gck_restrict(const AppellSeries& f);

/// sum_k P_k^n(x) alpha_k as an exact polynomial.
ExactPolynomial materialize(const AppellSeries& f);
/// sum_k x^k a_k: the slice monogenic extension exp(x_vec d/dx_0) of f0.
ExactPolynomial slice_extend(const TaylorSeries& f0);

/// GCK[A(x_0,0) B(x_0,0)]: Cauchy product of restrictions in A-then-B
/// coefficient order, truncated at min(K, order(A), order(B)).
AppellSeries gck_product(const AppellSeries& a, const AppellSeries& b, int order);

/// GCK[1 / A(x_0,0)] truncated at min(K, order(A)). The constant coefficient
/// must be invertible; std::domain_error otherwise.
AppellSeries gck_inverse(const AppellSeries& a, int order);

/// A^{-GCK} (.) B for A whose restriction may vanish at 0: with v the lowest
/// order of A (its coefficient must be invertible), computes the formal
/// Laurent quotient x_0^{-v} (A/x_0^v)^{-1} B and requires its negative
/// powers to cancel. std::domain_error otherwise.
AppellSeries gck_inverse_product(const AppellSeries& a, const AppellSeries& b, int order);

/// d^m/dx_0^m of a truncated Taylor series.
TaylorSeries taylor_derivative(const TaylorSeries& f, int m);

std::string to_string(const AppellSeries& f);

}  // namespace cliffordlab
