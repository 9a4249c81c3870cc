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

#include "cliffordlab/polynomial.hpp"

#include <cstdlib>
#include <string>

namespace cliffordlab {

namespace {

constexpr int kDefaultDegreeCap = 64;
constexpr int kHardDegreeCap = 255;  // exponents are stored in 8 bits

int read_degree_cap() {
  const char* env = std::getenv("CLIFFORDLAB_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return kDefaultDegreeCap;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > kHardDegreeCap) {
    throw std::invalid_argument("CLIFFORDLAB_MAX_DEGREE must be an integer in [1, 255]");
  }
  return static_cast<int>(v);
}

}  // namespace

int degree_cap() {
  static const int cap = read_degree_cap();
  return cap;
}

Polynomial<double> approximate(const Polynomial<Rational>& p) {
  Polynomial<double> out(p.dim());
  for (const auto& [m, c] : p.terms()) out.add_term(m, approximate(c));
  return out;
}

double slice_cr_residual(const Polynomial<Rational>& p, std::span<const double> unit_vector,
                         std::span<const std::pair<double, double>> grid) {
  const int n = p.dim();
  if (static_cast<int>(unit_vector.size()) != n) {
    throw std::invalid_argument("imaginary unit must have n components");
  }
  double len_sq = 0.0;
  for (double v : unit_vector) len_sq += v * v;
  if (std::abs(len_sq - 1.0) > 1e-12) throw std::invalid_argument("imaginary unit is not a unit vector");

  Multivector<double> unit(n);
  for (int i = 0; i < n; ++i) unit.add(Blade{1u << i}, unit_vector[i]);
  std::vector<Polynomial<double>> partials;
  for (int i = 0; i <= n; ++i) partials.push_back(approximate(partial_derivative(p, i)));

  double worst = 0.0;
  std::vector<double> point(static_cast<std::size_t>(n) + 1);
  for (const auto& [u, v] : grid) {
    point[0] = u;
    for (int i = 0; i < n; ++i) point[i + 1] = v * unit_vector[i];
    // d/du f(u + Iv) = d_0 f;  d/dv f(u + Iv) = sum_i I_i d_i f
    Multivector<double> dv(n);
    for (int i = 1; i <= n; ++i) dv += evaluate(partials[i], point) * unit_vector[i - 1];
    const Multivector<double> residual = evaluate(partials[0], point) + unit * dv;
    worst = std::max(worst, max_abs_component(residual));
  }
  return worst;
}

std::string to_string(const Polynomial<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (int i = 0; i <= p.dim(); ++i) {
      if (m.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
    }
    const bool plain = c.size() == 1 && c.components().begin()->first == Blade{};
    const bool negative = plain && sgn(c.components().begin()->second) < 0;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = plain ? Rational(abs(c.components().begin()->second)) : Rational(0);
    std::string coeff = plain ? magnitude.get_str() : "(" + to_string(c) + ")";
    if (mono.empty()) {
      out += coeff;
    } else if (plain && magnitude == 1) {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace cliffordlab
