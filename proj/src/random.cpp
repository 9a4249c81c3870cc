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

#include "cliffordlab/random.hpp"

namespace cliffordlab {

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

ExactMultivector random_coefficient(Rng& rng, int n, bool scalar_only) {
  if (scalar_only) return ExactMultivector::scalar(n, random_rational(rng));
  return random_multivector(rng, n, 0.3);
}

}  // namespace

Rational random_rational(Rng& rng, int max_num, int max_den) {
  Rational out(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
  out.canonicalize();
  return out;
}

ExactMultivector random_multivector(Rng& rng, int n, double density) {
  ExactMultivector out(n);
  const std::uint32_t blades = 1u << n;
  for (std::uint32_t b = 0; b < blades; ++b)
    if (coin(rng, density)) out.add(Blade{b}, random_rational(rng));
  return out;
}

ExactMultivector random_paravector(Rng& rng, int n) {
  ExactMultivector out = ExactMultivector::scalar(n, random_rational(rng));
  for (int i = 0; i < n; ++i) out.add(Blade{1u << i}, random_rational(rng));
  return out;
}

TaylorSeries random_taylor(Rng& rng, int n, int degree, bool scalar_only) {
  TaylorSeries out(n, degree);
  for (int k = 0; k <= degree; ++k) out.set(k, random_coefficient(rng, n, scalar_only));
  return out;
}

AppellSeries random_appell(Rng& rng, int n, int degree, bool scalar_only) {
  return gck_extend(random_taylor(rng, n, degree, scalar_only));
}

CoefficientFunction random_coefficients(Rng& rng, int n, int support, bool scalar_only) {
  std::vector<ExactMultivector> coeffs;
  for (int k = 0; k < support; ++k) coeffs.push_back(random_coefficient(rng, n, scalar_only));
  return {n, std::move(coeffs)};
}

ExactPolynomial random_polynomial(Rng& rng, int n, int degree, int terms, bool scalar_only) {
  ExactPolynomial out(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = uniform_int(rng, 0, degree);
    for (int i = 0; i <= n && budget > 0; ++i) {
      const int e = (i == n) ? budget : uniform_int(rng, 0, budget);
      m.exps[i] = static_cast<std::uint8_t>(e);
      budget -= e;
    }
    out.add_term(m, random_coefficient(rng, n, scalar_only));
  }
  return out;
}

std::vector<double> random_point(Rng& rng, int n, double radius) {
  // Uniform direction, radius uniform in [0, radius].
  std::normal_distribution<double> gauss;
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  double len_sq = 0.0;
  do {
    len_sq = 0.0;
    for (auto& x : v) {
      x = gauss(rng);
      len_sq += x * x;
    }
  } while (len_sq == 0.0);
  const double scale = std::uniform_real_distribution<double>(0.0, radius)(rng) / std::sqrt(len_sq);
  for (auto& x : v) x *= scale;
  return v;
}

}  // namespace cliffordlab
