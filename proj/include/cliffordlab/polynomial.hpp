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

// Polynomials in the real variables x_0..x_n with Clifford-valued
// coefficients. Variables commute with everything; a term is stored as
// (coefficient, monomial) and products keep the left-to-right order of the
// coefficients. The Dirac-type operators act with e_i from the left.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffordlab/clifford.hpp"

namespace cliffordlab {

/// Total-degree ceiling for products. Defaults to 64 and can be overridden
/// once per process through CLIFFORDLAB_MAX_DEGREE.
int degree_cap();

struct Monomial {
  std::array<std::uint8_t, kMaxDim + 1> exps{};

  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

template <CliffordScalar S>
class Polynomial {
 public:
  using Coefficient = Multivector<S>;
  using Terms = std::map<Monomial, Coefficient>;

  explicit Polynomial(int n) : n_(n) { check_dimension(n); }

  static Polynomial constant(const Coefficient& c) {
    Polynomial p(c.dim());
    p.add_term(Monomial{}, c);
    return p;
  }
  static Polynomial constant(int n, const S& value) {
    return constant(Coefficient::scalar(n, value));
  }
  /// The real variable x_i, 0 <= i <= n.
  static Polynomial variable(int n, int i) {
    Polynomial p(n);
    p.check_variable(i);
    Monomial m;
    m.exps[i] = 1;
    p.add_term(m, Coefficient::scalar(n, S(1)));
    return p;
  }

  int dim() const { return n_; }
  int num_vars() const { return n_ + 1; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Coefficient coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient(n_) : it->second;
  }

  void add_term(const Monomial& m, const Coefficient& c) {
    if (c.dim() != n_) throw std::invalid_argument("polynomial coefficient dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const S& s) {
    if (ScalarTraits<S>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= S(-1); }
  friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
  friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }
  /// p * c: constant multiplied from the right (right-module action).
  friend Polynomial operator*(const Polynomial& p, const Coefficient& c) {
    Polynomial out(p.n_);
    for (const auto& [m, coeff] : p.terms_) out.add_term(m, coeff * c);
    return out;
  }
  /// c * p: constant multiplied from the left.
  friend Polynomial operator*(const Coefficient& c, const Polynomial& p) {
    Polynomial out(p.n_);
    for (const auto& [m, coeff] : p.terms_) out.add_term(m, c * coeff);
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void check_same(const Polynomial& o) const {
    if (o.n_ != n_) throw std::invalid_argument("polynomial dimension mismatch");
  }
  void check_variable(int i) const {
    if (i < 0 || i > n_) throw std::out_of_range("variable index out of range");
  }

 private:
  int n_;
  Terms terms_;
};

using ExactPolynomial = Polynomial<Rational>;

template <CliffordScalar S>
Polynomial<S> poly_mul(const Polynomial<S>& p, const Polynomial<S>& q) {
  p.check_same(q);
  Polynomial<S> out(p.dim());
  if (p.is_zero() || q.is_zero()) return out;
  if (p.degree() + q.degree() > degree_cap()) {
    throw std::length_error("polynomial product exceeds the total-degree cap");
  }
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      Monomial m;
      for (int i = 0; i <= p.dim(); ++i) m.exps[i] = static_cast<std::uint8_t>(mp.exps[i] + mq.exps[i]);
      out.add_term(m, cp * cq);
    }
  }
  return out;
}

template <CliffordScalar S>
Polynomial<S> partial_derivative(const Polynomial<S>& p, int i) {
  p.check_variable(i);
  Polynomial<S> out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (m.exps[i] == 0) continue;
    Monomial d = m;
    d.exps[i] -= 1;
    out.add_term(d, c * S(static_cast<long>(m.exps[i])));
  }
  return out;
}

template <CliffordScalar S>
Polynomial<S> laplacian(const Polynomial<S>& p) {
  Polynomial<S> out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i <= p.dim(); ++i) {
      const long e = m.exps[i];
      if (e < 2) continue;
      Monomial d = m;
      d.exps[i] -= 2;
      out.add_term(d, c * S(e * (e - 1)));
    }
  }
  return out;
}

template <CliffordScalar S>
Polynomial<S> laplacian_power(Polynomial<S> p, int m) {
  if (m < 0) throw std::invalid_argument("negative Laplacian power");
  for (int i = 0; i < m && !p.is_zero(); ++i) p = laplacian(p);
  return p;
}

namespace detail {
// d/dx_0 + sign * sum_i e_i d/dx_i, generators acting from the left.
template <CliffordScalar S>
Polynomial<S> cauchy_riemann(const Polynomial<S>& p, int sign) {
  const int n = p.dim();
  Polynomial<S> out(n);
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i <= n; ++i) {
      const long e = m.exps[i];
      if (e == 0) continue;
      Monomial d = m;
      d.exps[i] -= 1;
      Multivector<S> coeff = c * S(e);
      if (i > 0) coeff = Multivector<S>::generator(n, i) * coeff * S(sign);
      out.add_term(d, coeff);
    }
  }
  return out;
}
}  // namespace detail

/// The generalized Cauchy-Riemann operator d/dx_0 + sum_i e_i d/dx_i.
template <CliffordScalar S>
Polynomial<S> dirac(const Polynomial<S>& p) {
  return detail::cauchy_riemann(p, +1);
}

template <CliffordScalar S>
Polynomial<S> dirac_power(Polynomial<S> p, int m) {
  for (int i = 0; i < m && !p.is_zero(); ++i) p = dirac(p);
  return p;
}

/// Hypercomplex derivative d/dx_0 - sum_i e_i d/dx_i.
template <CliffordScalar S>
Polynomial<S> conj_derivative(const Polynomial<S>& p) {
  return detail::cauchy_riemann(p, -1);
}

/// x = x_0 + sum_i x_i e_i as a degree-one polynomial.
template <CliffordScalar S>
Polynomial<S> paravector_variable(int n, int vector_sign = +1) {
  Polynomial<S> x = Polynomial<S>::variable(n, 0);
  for (int i = 1; i <= n; ++i) {
    Monomial m;
    m.exps[i] = 1;
    x.add_term(m, Multivector<S>::generator(n, i) * S(vector_sign));
  }
  return x;
}

/// The vector part sum_i x_i e_i.
template <CliffordScalar S>
Polynomial<S> vector_variable(int n) {
  return paravector_variable<S>(n) - Polynomial<S>::variable(n, 0);
}

template <CliffordScalar S>
Polynomial<S> paravector_power(int n, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  const Polynomial<S> x = paravector_variable<S>(n);
  Polynomial<S> out = Polynomial<S>::constant(n, S(1));
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

template <CliffordScalar S>
Polynomial<S> conj_paravector_power(int n, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  const Polynomial<S> xbar = paravector_variable<S>(n, -1);
  Polynomial<S> out = Polynomial<S>::constant(n, S(1));
  for (int i = 0; i < k; ++i) out = out * xbar;
  return out;
}

/// x_0^k as a scalar polynomial.
template <CliffordScalar S>
Polynomial<S> real_power(int n, int k) {
  Monomial m;
  m.exps[0] = static_cast<std::uint8_t>(k);
  Polynomial<S> p(n);
  p.add_term(m, Multivector<S>::scalar(n, S(1)));
  return p;
}

/// Substitutes x_1 = ... = x_n = 0.
template <CliffordScalar S>
Polynomial<S> restrict_real(const Polynomial<S>& p) {
  Polynomial<S> out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    bool real_only = true;
    for (int i = 1; i <= p.dim(); ++i) real_only = real_only && m.exps[i] == 0;
    if (real_only) out.add_term(m, c);
  }
  return out;
}

/// p(-x): every monomial of odd total degree changes sign.
template <CliffordScalar S>
Polynomial<S> reflect(const Polynomial<S>& p) {
  Polynomial<S> out(p.dim());
  for (const auto& [m, c] : p.terms()) out.add_term(m, (m.degree() & 1) ? Multivector<S>(-c) : c);
  return out;
}

namespace detail {
template <CliffordScalar S, class T>
Multivector<T> evaluate_as(const Polynomial<S>& p, std::span<const T> point, auto&& convert) {
  const int n = p.dim();
  if (static_cast<int>(point.size()) != n + 1) {
    throw std::invalid_argument("evaluation point must have n+1 coordinates");
  }
  Multivector<T> out(n);
  for (const auto& [m, c] : p.terms()) {
    T mono(1);
    for (int i = 0; i <= n; ++i) {
      for (int e = 0; e < m.exps[i]; ++e) mono *= point[i];
    }
    for (const auto& [b, v] : c.components()) out.add(b, T(convert(v) * mono));
  }
  return out;
}
}  // namespace detail

/// Double-precision evaluation at (x_0, ..., x_n).
template <CliffordScalar S>
Multivector<double> evaluate(const Polynomial<S>& p, std::span<const double> point) {
  return detail::evaluate_as<S, double>(p, point, [](const S& v) { return ScalarTraits<S>::to_double(v); });
}

/// Exact evaluation at a rational point.
inline Multivector<Rational> evaluate_exact(const Polynomial<Rational>& p, std::span<const Rational> point) {
  return detail::evaluate_as<Rational, Rational>(p, point, [](const Rational& v) { return v; });
}

Polynomial<double> approximate(const Polynomial<Rational>& p);

/// max over grid (u, v) of |(d/du + I d/dv) p(u + I v)|_inf, computed by
/// exact differentiation followed by substitution. I must be a unit vector
/// (n components) within 1e-12.
double slice_cr_residual(const Polynomial<Rational>& p, std::span<const double> unit_vector,
                         std::span<const std::pair<double, double>> grid);

std::string to_string(const Polynomial<Rational>& p);

}  // namespace cliffordlab
