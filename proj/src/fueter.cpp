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

#include "cliffordlab/fueter.hpp"

namespace cliffordlab {

Rational fueter_gamma(int n) {
  check_odd_dimension(n);
  const unsigned h = static_cast<unsigned>((n - 1) / 2);
  const Rational g = factorial(h);
  Rational out = int_power(Rational(2), static_cast<unsigned>(n - 1)) * g * g / factorial(static_cast<unsigned>(n - 1));
  if (h % 2 == 1) out = -out;
  return out;
}

ExactPolynomial fueter_sce_monomial(int n, int j) {
  check_odd_dimension(n);
  if (j < 0) throw std::invalid_argument("power must be nonnegative");
  if (j < n - 1) return ExactPolynomial(n);
  const Rational scale = fueter_gamma(n) * factorial(static_cast<unsigned>(j)) /
                         factorial(static_cast<unsigned>(j - n + 1));
  return appell_polynomial(n, j + 1 - n) * scale;
}

AppellSeries fueter_sce_series(int n, const TaylorSeries& f) {
  check_odd_dimension(n);
  if (f.dim() != n) throw std::invalid_argument("series dimension mismatch");
  const Rational gamma = fueter_gamma(n);
  AppellSeries out(n, std::max(f.order() - (n - 1), 0));
  for (int k = 0; k + n - 1 <= f.order(); ++k) {
    const auto& a = f[k + n - 1];
    if (a.is_zero()) continue;
    const Rational scale = gamma * factorial(static_cast<unsigned>(n + k - 1)) / factorial(static_cast<unsigned>(k));
    out.set(k, a * scale);
  }
  return out;
}

TaylorSeries fueter_sce_preimage(int n, const AppellSeries& g) {
  check_odd_dimension(n);
  if (g.dim() != n) throw std::invalid_argument("series dimension mismatch");
  const Rational gamma = fueter_gamma(n);
  TaylorSeries out(n, g.order() + n - 1);
  for (int k = 0; k <= g.order(); ++k) {
    if (g[k].is_zero()) continue;
    const Rational scale = factorial(static_cast<unsigned>(k)) /
                           (gamma * factorial(static_cast<unsigned>(n + k - 1)));
    out.set(k + n - 1, g[k] * scale);
  }
  return out;
}

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Hardy: return "hardy";
    case WeightKind::Bergman: return "bergman";
    case WeightKind::Dirichlet: return "dirichlet";
    case WeightKind::Fock: return "fock";
    case WeightKind::Custom: return "custom";
  }
  return "custom";
}

WeightKind parse_weight_kind(const std::string& name) {
  for (auto kind : {WeightKind::Hardy, WeightKind::Bergman, WeightKind::Dirichlet, WeightKind::Fock}) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown weight space '" + name + "' (hardy|bergman|dirichlet|fock)");
}

WeightSequence WeightSequence::hardy() {
  return {WeightKind::Hardy, [](int) { return Rational(1); }};
}
WeightSequence WeightSequence::bergman() {
  return {WeightKind::Bergman, [](int k) { return Rational(1, k + 1); }};
}
WeightSequence WeightSequence::dirichlet() {
  return {WeightKind::Dirichlet, [](int k) { return Rational(k); }};
}
WeightSequence WeightSequence::fock() {
  return {WeightKind::Fock, [](int k) { return factorial(static_cast<unsigned>(k)); }};
}

WeightSequence WeightSequence::builtin(WeightKind kind) {
  switch (kind) {
    case WeightKind::Hardy: return hardy();
    case WeightKind::Bergman: return bergman();
    case WeightKind::Dirichlet: return dirichlet();
    case WeightKind::Fock: return fock();
    case WeightKind::Custom: break;
  }
  throw std::invalid_argument("custom weights have no built-in generator");
}

bool WeightSequence::is_admissible(int upto) const {
  if ((*this)(0) != 1) return false;
  for (int k = 0; k < upto; ++k)
    if ((*this)(k + 1) < (*this)(k)) return false;
  return true;
}

// The transported sequence keeps the source kind so the domain of
// convergence can be classified.
WeightSequence transport_weights(int n, const WeightSequence& c) {
  check_odd_dimension(n);
  return {c.kind(), [n, c](int k) {
            const Rational r = factorial(static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(n + k - 1));
            return Rational(c(k + n - 1) * r * r);
          }};
}

Rational weighted_norm_sq(const WeightSequence& c, const TaylorSeries& f) {
  Rational acc(0);
  for (int k = 0; k <= f.order(); ++k)
    if (!f[k].is_zero()) acc += c(k) * norm_sq(f[k]);
  return acc;
}

Rational weighted_norm_sq(const WeightSequence& b, const AppellSeries& f) {
  Rational acc(0);
  for (int k = 0; k <= f.order(); ++k)
    if (!f[k].is_zero()) acc += b(k) * norm_sq(f[k]);
  return acc;
}

NormIdentity range_norm_identity(int n, const WeightSequence& c, const TaylorSeries& f) {
  const Rational gamma = fueter_gamma(n);
  NormIdentity out;
  out.lhs = weighted_norm_sq(transport_weights(n, c), fueter_sce_series(n, f));
  // |f^{(k)}(0)|^2 / (k!)^2 = |a_k|^2
  Rational low(0);
  for (int k = 0; k <= std::min(n - 2, f.order()); ++k) low += c(k) * norm_sq(f[k]);
  out.rhs = gamma * gamma * (weighted_norm_sq(c, f) - low);
  return out;
}

DiagramRoutes diagram_routes(int n, const TaylorSeries& f) {
  check_odd_dimension(n);
  if (f.dim() != n) throw std::invalid_argument("series dimension mismatch");
  DiagramRoutes out{laplacian_power(slice_extend(f), (n - 1) / 2),
                    materialize(gck_extend(taylor_derivative(f, n - 1))) * fueter_gamma(n)};
  return out;
}

bool diagram_check(int n, const TaylorSeries& f) { return diagram_routes(n, f).agree(); }

bool kernel_membership(int n, const TaylorSeries& f) {
  check_odd_dimension(n);
  for (int k = n - 1; k <= f.order(); ++k)
    if (!f[k].is_zero()) return false;
  return true;
}

}  // namespace cliffordlab
