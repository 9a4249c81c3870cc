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

#include "cliffordlab/elementary.hpp"

#include <cmath>

#include "cliffordlab/fueter.hpp"

namespace cliffordlab {

std::string to_string(ElementaryKind kind) {
  switch (kind) {
    case ElementaryKind::Exp: return "exp";
    case ElementaryKind::Sin: return "sin";
    case ElementaryKind::Cos: return "cos";
    case ElementaryKind::Sinh: return "sinh";
    case ElementaryKind::Cosh: return "cosh";
  }
  return "exp";
}

ElementaryKind parse_elementary_kind(const std::string& name) {
  for (auto kind : {ElementaryKind::Exp, ElementaryKind::Sin, ElementaryKind::Cos, ElementaryKind::Sinh,
                    ElementaryKind::Cosh}) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown function '" + name + "' (exp|sin|cos|sinh|cosh)");
}

namespace {

// Taylor pattern of the classical function: coefficient of x^k is pattern/k!.
int pattern(ElementaryKind kind, int k) {
  const bool even = k % 2 == 0;
  switch (kind) {
    case ElementaryKind::Exp: return 1;
    case ElementaryKind::Sinh: return even ? 0 : 1;
    case ElementaryKind::Cosh: return even ? 1 : 0;
    case ElementaryKind::Sin: return even ? 0 : (((k - 1) / 2) % 2 ? -1 : 1);
    case ElementaryKind::Cos: return even ? ((k / 2) % 2 ? -1 : 1) : 0;
  }
  return 0;
}

bool trigonometric(ElementaryKind kind) { return kind == ElementaryKind::Sin || kind == ElementaryKind::Cos; }

int trig_sign(ElementaryKind kind, int n) { return trigonometric(kind) && ((n - 1) / 2) % 2 ? -1 : 1; }

double log_tail(double t, int order) {
  // log of e^t t^{K+1} / (K+1)!
  return t + (order + 1) * std::log(t) - std::lgamma(order + 2.0);
}

}  // namespace

Rational elementary_coefficient(ElementaryKind kind, int n, int k) {
  if (k < 0) throw std::invalid_argument("index must be nonnegative");
  const int p = pattern(kind, k) * trig_sign(kind, n);
  if (p == 0) return Rational(0);
  return fueter_gamma(n) * p / factorial(static_cast<unsigned>(k));
}

TruncatedMonogenic truncated_elementary(ElementaryKind kind, int n, int order) {
  check_odd_dimension(n);
  AppellSeries series(n, order);
  for (int k = 0; k <= order; ++k) {
    const Rational c = elementary_coefficient(kind, n, k);
    if (sgn(c) != 0) series.set(k, ExactMultivector::scalar(n, c));
  }
  return {kind, n, std::move(series)};
}

double elementary_restriction(ElementaryKind kind, int n, double x0) {
  const double g = fueter_gamma(n).get_d() * trig_sign(kind, n);
  switch (kind) {
    case ElementaryKind::Exp: return g * std::exp(x0);
    case ElementaryKind::Sin: return g * std::sin(x0);
    case ElementaryKind::Cos: return g * std::cos(x0);
    case ElementaryKind::Sinh: return g * std::sinh(x0);
    case ElementaryKind::Cosh: return g * std::cosh(x0);
  }
  return 0.0;
}

double elementary_bound(ElementaryKind kind, int n, double abs_x) {
  const double g = std::abs(fueter_gamma(n).get_d());
  switch (kind) {
    case ElementaryKind::Exp: return g * std::exp(abs_x);
    case ElementaryKind::Sin:
    case ElementaryKind::Sinh: return g * std::sinh(abs_x);
    case ElementaryKind::Cos:
    case ElementaryKind::Cosh: return g * std::cosh(abs_x);
  }
  return 0.0;
}

ElementaryValue eval_elementary(ElementaryKind kind, int n, std::span<const double> point, double tol) {
  check_odd_dimension(n);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (static_cast<int>(point.size()) != n + 1) {
    throw std::invalid_argument("evaluation point must have n+1 coordinates");
  }
  double t_sq = 0.0;
  for (double v : point) {
    if (!std::isfinite(v)) throw std::invalid_argument("evaluation point must be finite");
    t_sq += v * v;
  }
  const double t = std::sqrt(t_sq);
  const double log_gamma = std::log(std::abs(fueter_gamma(n).get_d()));
  const double log_tol = std::log(tol);
  constexpr int kMaxOrder = 1 << 14;

  int order = 8;
  double tail = 0.0;
  if (t > 0.0) {
    while (log_gamma + log_tail(t, order) >= log_tol) {
      if (order >= kMaxOrder) throw std::domain_error("point too far from the origin for a certified sum");
      order *= 2;
    }
    tail = std::exp(log_gamma + log_tail(t, order));
  }

  const auto values = appell_values(n, order, point);
  Multivector<double> sum(n);
  for (int k = 0; k <= order; ++k) {
    const int p = pattern(kind, k);
    if (p == 0) continue;
    // gamma * sign * pattern / k!, accumulated in double
    const double c = fueter_gamma(n).get_d() * trig_sign(kind, n) * p * std::exp(-std::lgamma(k + 1.0));
    sum += values[k] * c;
  }
  return {std::move(sum), order, tail};
}

std::pair<ElementaryKind, int> derivative_partner(ElementaryKind kind) {
  switch (kind) {
    case ElementaryKind::Exp: return {ElementaryKind::Exp, 1};
    case ElementaryKind::Sinh: return {ElementaryKind::Cosh, 1};
    case ElementaryKind::Cosh: return {ElementaryKind::Sinh, 1};
    case ElementaryKind::Sin: return {ElementaryKind::Cos, 1};
    case ElementaryKind::Cos: return {ElementaryKind::Sin, -1};
  }
  return {kind, 1};
}

bool derivative_identity_check(ElementaryKind kind, int n, int order) {
  if (order < 2) throw std::invalid_argument("truncation order must be at least 2");
  const auto [partner, sign] = derivative_partner(kind);
  const ExactPolynomial lhs = conj_derivative(materialize(truncated_elementary(kind, n, order).series));
  const ExactPolynomial rhs = materialize(truncated_elementary(partner, n, order - 1).series) * Rational(2 * sign);
  return lhs == rhs;
}

bool parity_identity_check(int n, int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
  const auto exp = truncated_elementary(ElementaryKind::Exp, n, order).series;
  const auto cosh = truncated_elementary(ElementaryKind::Cosh, n, order).series;
  const auto sinh = truncated_elementary(ElementaryKind::Sinh, n, order).series;
  // EXP(-x): P_k is homogeneous of degree k, so reflection flips odd terms.
  const ExactPolynomial e_plus = materialize(exp);
  const ExactPolynomial e_minus = reflect(e_plus);
  const Rational half(1, 2);
  return materialize(cosh) == (e_plus + e_minus) * half && materialize(sinh) == (e_plus - e_minus) * half;
}

bool PythagoreanResult::holds() const {
  const auto expected_series = [&](const AppellSeries& s) {
    return AppellSeries::monomial(s.dim(), 0, s.order(), expected);
  };
  return trig == expected_series(trig) && hyperbolic == expected_series(hyperbolic);
}

PythagoreanResult pythagorean_sums(int n, int order) {
  if (order < 1) throw std::invalid_argument("truncation order must be at least 1");
  auto series = [&](ElementaryKind kind) { return truncated_elementary(kind, n, order).series; };
  const auto sin = series(ElementaryKind::Sin), cos = series(ElementaryKind::Cos);
  const auto sinh = series(ElementaryKind::Sinh), cosh = series(ElementaryKind::Cosh);
  const Rational gamma = fueter_gamma(n);
  return {gck_product(cos, cos, order) + gck_product(sin, sin, order),
          gck_product(cosh, cosh, order) - gck_product(sinh, sinh, order), gamma * gamma};
}

bool pythagorean_check(int n, int order) { return pythagorean_sums(n, order).holds(); }

}  // namespace cliffordlab
