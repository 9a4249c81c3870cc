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

#include "axial.hpp"

#include <mutex>
#include <vector>

#include "cliffordlab/appell.hpp"

namespace cliffordlab::detail {

namespace {

void add_to(AxialForm::Part& part, std::pair<int, int> key, const Rational& v) {
  if (sgn(v) == 0) return;
  auto [it, inserted] = part.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (sgn(it->second) == 0) part.erase(it);
  }
}

void accumulate_product(AxialForm::Part& out, const AxialForm::Part& p, const AxialForm::Part& q, int r_shift,
                        const Rational& sign) {
  for (const auto& [kp, vp] : p) {
    for (const auto& [kq, vq] : q) {
      add_to(out, {kp.first + kq.first, kp.second + kq.second + r_shift}, Rational(sign * vp * vq));
    }
  }
}

// Terms of r^q = (x_1^2 + ... + x_n^2)^q with multinomial weights.
using Expansion = std::vector<std::pair<Monomial, Rational>>;

void expand_rho(int n, int var, int remaining, Monomial& m, const Rational& weight, Expansion& out) {
  if (var == n) {
    if (remaining == 0) out.emplace_back(m, weight);
    return;
  }
  if (var == n - 1) {
    m.exps[var + 1] = static_cast<std::uint8_t>(2 * remaining);
    out.emplace_back(m, Rational(weight / factorial(remaining)));
    m.exps[var + 1] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    m.exps[var + 1] = static_cast<std::uint8_t>(2 * e);
    expand_rho(n, var + 1, remaining - e, m, Rational(weight / factorial(e)), out);
  }
  m.exps[var + 1] = 0;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const Expansion& rho_power(int n, int q) {
  static std::map<std::pair<int, int>, Expansion> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find({n, q});
  if (it != cache.end()) return it->second;
  Expansion out;
  Monomial m;
  expand_rho(n, 0, q, m, factorial(q), out);
  return cache.emplace(std::pair{n, q}, std::move(out)).first->second;
}

}  // namespace

AxialForm AxialForm::one() {
  AxialForm f;
  f.a[{0, 0}] = 1;
  return f;
}

AxialForm AxialForm::variable(int sign) {
  AxialForm f;
  f.a[{1, 0}] = 1;
  f.b[{0, 0}] = sign;
  return f;
}

AxialForm& AxialForm::operator+=(const AxialForm& o) {
  for (const auto& [k, v] : o.a) add_to(a, k, v);
  for (const auto& [k, v] : o.b) add_to(b, k, v);
  return *this;
}

AxialForm& AxialForm::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    a.clear();
    b.clear();
    return *this;
  }
  for (auto& [k, v] : a) v *= s;
  for (auto& [k, v] : b) v *= s;
  return *this;
}

AxialForm operator*(const AxialForm& p, const AxialForm& q) {
  // (A1 + xv B1)(A2 + xv B2) = A1 A2 - r B1 B2 + xv (A1 B2 + B1 A2)
  AxialForm out;
  accumulate_product(out.a, p.a, q.a, 0, Rational(1));
  accumulate_product(out.a, p.b, q.b, 1, Rational(-1));
  accumulate_product(out.b, p.a, q.b, 0, Rational(1));
  accumulate_product(out.b, p.b, q.a, 0, Rational(1));
  return out;
}

ExactPolynomial AxialForm::expand(int n) const {
  ExactPolynomial out(n);
  for (const auto& [key, v] : a) {
    for (const auto& [m, w] : rho_power(n, key.second)) {
      Monomial t = m;
      t.exps[0] = static_cast<std::uint8_t>(key.first);
      out.add_term(t, ExactMultivector::scalar(n, Rational(v * w)));
    }
  }
  for (const auto& [key, v] : b) {
    for (const auto& [m, w] : rho_power(n, key.second)) {
      for (int i = 1; i <= n; ++i) {
        Monomial t = m;
        t.exps[0] = static_cast<std::uint8_t>(key.first);
        t.exps[i] += 1;
        out.add_term(t, ExactMultivector::blade(n, Blade{1u << (i - 1)}, Rational(v * w)));
      }
    }
  }
  return out;
}

Multivector<Rational> AxialForm::evaluate(int n, std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != n + 1) {
    throw std::invalid_argument("evaluation point must have n+1 coordinates");
  }
  Rational r(0);
  for (int i = 1; i <= n; ++i) r += point[i] * point[i];
  auto eval_part = [&](const Part& part) {
    Rational acc(0);
    for (const auto& [key, v] : part) acc += v * int_power(point[0], key.first) * int_power(r, key.second);
    return acc;
  };
  const Rational av = eval_part(a);
  const Rational bv = eval_part(b);
  Multivector<Rational> out = Multivector<Rational>::scalar(n, av);
  for (int i = 1; i <= n; ++i) out.add(Blade{1u << (i - 1)}, Rational(bv * point[i]));
  return out;
}

const AxialForm& axial_power(int k, int sign) {
  static std::map<std::pair<int, int>, AxialForm> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({k, sign});
    if (it != cache.end()) return it->second;
  }
  AxialForm value = k == 0 ? AxialForm::one() : axial_power(k - 1, sign) * AxialForm::variable(sign);
  std::lock_guard lock(cache_mutex());
  return cache.try_emplace(std::pair{k, sign}, std::move(value)).first->second;
}

const AxialForm& axial_appell(int n, int k) {
  static std::map<std::pair<int, int>, AxialForm> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  // Horner in conj(x): sum_s T_s x^{k-s} xbar^s.
  AxialForm value;
  const AxialForm xbar = AxialForm::variable(-1);
  for (int s = k; s >= 0; --s) {
    AxialForm term = axial_power(k - s, +1);
    term *= t_coefficient(n, k, s);
    if (s == k) {
      value = term;
    } else {
      value = value * xbar;
      value += term;
    }
  }
  std::lock_guard lock(cache_mutex());
  return cache.try_emplace(std::pair{n, k}, std::move(value)).first->second;
}

const ExactPolynomial& cached_power(int n, int k) {
  static std::map<std::pair<int, int>, ExactPolynomial> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  ExactPolynomial value = axial_power(k, +1).expand(n);
  std::lock_guard lock(cache_mutex());
  return cache.try_emplace(std::pair{n, k}, std::move(value)).first->second;
}

const ExactPolynomial& cached_appell(int n, int k) {
  static std::map<std::pair<int, int>, ExactPolynomial> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  ExactPolynomial value = axial_appell(n, k).expand(n);
  std::lock_guard lock(cache_mutex());
  return cache.try_emplace(std::pair{n, k}, std::move(value)).first->second;
}

}  // namespace cliffordlab::detail
