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

#include "cliffordlab/appell.hpp"

#include <complex>

#include "axial.hpp"

namespace cliffordlab {

void check_odd_dimension(int n) {
  check_dimension(n);
  if (n % 2 == 0) throw std::invalid_argument("only odd dimensions are supported, got n = " + std::to_string(n));
}

Rational pochhammer(const Rational& a, int s) {
  if (s < 0) throw std::invalid_argument("Pochhammer index must be nonnegative");
  Rational out(1);
  for (int i = 0; i < s; ++i) out *= a + i;
  return out;
}

Rational t_coefficient(int n, int k, int s) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (k < 0 || s < 0 || s > k) throw std::out_of_range("T coefficient requires 0 <= s <= k");
  const Rational up(n + 1, 2);
  const Rational down(n - 1, 2);
  Rational out = binomial(k, s) * pochhammer(up, k - s) * pochhammer(down, s) / pochhammer(Rational(n), k);
  out.canonicalize();
  return out;
}

ExactPolynomial appell_polynomial(int n, int k) {
  check_odd_dimension(n);
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  if (k > degree_cap()) throw std::length_error("degree exceeds the total-degree cap");
  return detail::cached_appell(n, k);
}

std::vector<ExactPolynomial> appell_polynomials(int n, int kmax) {
  std::vector<ExactPolynomial> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(appell_polynomial(n, k));
  return out;
}

std::vector<Multivector<double>> appell_values(int n, int kmax, std::span<const double> point) {
  check_odd_dimension(n);
  if (static_cast<int>(point.size()) != n + 1) {
    throw std::invalid_argument("evaluation point must have n+1 coordinates");
  }
  double r_sq = 0.0;
  for (int i = 1; i <= n; ++i) r_sq += point[i] * point[i];
  const double r = std::sqrt(r_sq);
  // x and conj(x) lie in span{1, w} with w = xv/|xv|, an isomorphic copy of C.
  const std::complex<double> z(point[0], r);
  std::vector<std::complex<double>> zp(static_cast<std::size_t>(kmax) + 1, 1.0);
  std::vector<std::complex<double>> zbp(zp);
  for (int a = 1; a <= kmax; ++a) {
    zp[a] = zp[a - 1] * z;
    zbp[a] = zbp[a - 1] * std::conj(z);
  }
  const double up = (n + 1) / 2.0;
  const double down = (n - 1) / 2.0;
  std::vector<Multivector<double>> out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    double t = 1.0;  // T_0^k = (up)_k / (n)_k
    for (int i = 0; i < k; ++i) t *= (up + i) / (n + i);
    std::complex<double> acc = 0.0;
    for (int s = 0; s <= k && t != 0.0; ++s) {
      acc += t * zp[k - s] * zbp[s];
      t *= static_cast<double>(k - s) / (s + 1) * (down + s) / (up + k - s - 1);
    }
    Multivector<double> value = Multivector<double>::scalar(n, acc.real());
    if (r > 0.0) {
      const double scale = acc.imag() / r;
      for (int i = 1; i <= n; ++i) value.add(Blade{1u << (i - 1)}, scale * point[i]);
    }
    out.push_back(std::move(value));
  }
  return out;
}

AppellSeries gck_extend(const TaylorSeries& f0) { return AppellSeries(f0.dim(), f0.coeffs()); }

TaylorSeries gck_restrict(const AppellSeries& f) { return TaylorSeries(f.dim(), f.coeffs()); }

ExactPolynomial materialize(const AppellSeries& f) {
  check_odd_dimension(f.dim());
  ExactPolynomial out(f.dim());
  for (int k = 0; k <= f.order(); ++k) {
    if (f[k].is_zero()) continue;
    out += appell_polynomial(f.dim(), k) * f[k];
  }
  return out;
}

ExactPolynomial slice_extend(const TaylorSeries& f0) {
  const int n = f0.dim();
  ExactPolynomial out(n);
  for (int k = 0; k <= f0.order(); ++k) {
    if (f0[k].is_zero()) continue;
    if (k > degree_cap()) throw std::length_error("degree exceeds the total-degree cap");
    out += detail::cached_power(n, k) * f0[k];
  }
  return out;
}

AppellSeries gck_product(const AppellSeries& a, const AppellSeries& b, int order) {
  a.check_same(b);
  const int k_max = std::min({order, a.order(), b.order()});
  if (k_max < 0) throw std::invalid_argument("truncation order must be nonnegative");
  AppellSeries out(a.dim(), k_max);
  for (int k = 0; k <= k_max; ++k) {
    ExactMultivector acc(a.dim());
    for (int i = 0; i <= k; ++i) {
      if (a[i].is_zero() || b[k - i].is_zero()) continue;
      acc += a[i] * b[k - i];
    }
    out.set(k, std::move(acc));
  }
  return out;
}

namespace {

// Right inverse of the power series with coefficients a[shift], a[shift+1], ...
std::vector<ExactMultivector> series_reciprocal(const AppellSeries& a, int shift, int order) {
  const ExactMultivector lead_inv = clifford_inverse(a[shift]);
  std::vector<ExactMultivector> inv;
  inv.push_back(lead_inv);
  for (int k = 1; k <= order; ++k) {
    ExactMultivector acc(a.dim());
    for (int i = 1; i <= k; ++i) {
      const ExactMultivector ai = a[shift + i];
      if (ai.is_zero() || inv[k - i].is_zero()) continue;
      acc += ai * inv[k - i];
    }
    inv.push_back(-(lead_inv * acc));
  }
  return inv;
}

}  // namespace

AppellSeries gck_inverse(const AppellSeries& a, int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
  if (a[0].is_zero()) throw std::domain_error("GCK inverse requires a nonzero constant term");
  return AppellSeries(a.dim(), series_reciprocal(a, 0, order));
}

AppellSeries gck_inverse_product(const AppellSeries& a, const AppellSeries& b, int order) {
  a.check_same(b);
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
  int v = 0;
  while (v <= a.order() && a[v].is_zero()) ++v;
  if (v > a.order()) throw std::domain_error("GCK inverse of the zero series");
  // a = x_0^v * a~ on the real line; the quotient b / a must have no pole.
  const auto inv = series_reciprocal(a, v, order + v);
  std::vector<ExactMultivector> quotient;
  for (int k = 0; k <= order + v; ++k) {
    ExactMultivector acc(a.dim());
    for (int i = 0; i <= k; ++i) {
      if (inv[i].is_zero() || b[k - i].is_zero()) continue;
      acc += inv[i] * b[k - i];
    }
    if (k < v) {
      if (!acc.is_zero()) throw std::domain_error("GCK quotient has a pole at the origin");
    } else {
      quotient.push_back(std::move(acc));
    }
  }
  return AppellSeries(a.dim(), std::move(quotient));
}

TaylorSeries taylor_derivative(const TaylorSeries& f, int m) {
  if (m < 0) throw std::invalid_argument("derivative order must be nonnegative");
  TaylorSeries out(f.dim(), std::max(f.order() - m, 0));
  for (int k = 0; k + m <= f.order(); ++k) {
    if (f[k + m].is_zero()) continue;
    Rational scale = factorial(static_cast<unsigned>(k + m)) / factorial(static_cast<unsigned>(k));
    out.set(k, f[k + m] * scale);
  }
  return out;
}

std::string to_string(const AppellSeries& f) {
  std::string out;
  for (int k = 0; k <= f.order(); ++k) {
    if (f[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "P" + std::to_string(k) + "*(" + to_string(f[k]) + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace cliffordlab
