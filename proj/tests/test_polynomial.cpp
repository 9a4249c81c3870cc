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

#include <doctest.h>

#include <cstdlib>

#include "cliffordlab/appell.hpp"
#include "generators.hpp"

using namespace cliffordlab;
using namespace testing_support;

TEST_SUITE("polycalc") {

TEST_CASE("ring operations") {
  const int n = 3;
  const auto e1 = ExactMultivector::generator(n, 1);
  const auto x0 = var(n, 0), x1 = var(n, 1);
  Monomial m01;
  m01.exps[0] = 1;
  m01.exps[1] = 1;
  CHECK(x0 * (x1 * e1) == ExactPolynomial::constant(e1) * x0 * x1);
  CHECK((x0 * (x1 * e1)).coefficient(m01) == e1);
  Monomial m11;
  m11.exps[1] = 2;
  CHECK((x1 * e1) * (x1 * e1) == x1 * x1 * Rational(-1));
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_polynomial(rng, n, 4, 5);
    CHECK(p * scalar_poly(n, 1) == p);
    CHECK(p - p == ExactPolynomial(n));
  }
}

TEST_CASE("coefficient order is preserved in products") {
  const int n = 2;
  const auto e1 = ExactMultivector::generator(n, 1), e2 = ExactMultivector::generator(n, 2);
  const auto p = ExactPolynomial::constant(e1) * var(n, 0);
  const auto q = ExactPolynomial::constant(e2) * var(n, 1);
  Monomial m;
  m.exps[0] = m.exps[1] = 1;
  CHECK((p * q).coefficient(m) == e1 * e2);
  CHECK((q * p).coefficient(m) == e2 * e1);
}

TEST_CASE("partial derivatives and Laplacian") {
  const int n = 3;
  const auto x0 = var(n, 0);
  CHECK(partial_derivative(x0 * x0 * x0, 0) == x0 * x0 * Rational(3));
  const auto q = x0 * x0 - var(n, 1) * var(n, 1) - var(n, 2) * var(n, 2) - var(n, 3) * var(n, 3);
  CHECK(laplacian(q) == scalar_poly(n, -4));
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_polynomial(rng, n, 5, 6);
    CHECK(laplacian_power(p, 0) == p);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        CHECK(partial_derivative(partial_derivative(p, i), j) == partial_derivative(partial_derivative(p, j), i));
  }
  CHECK_THROWS_AS(partial_derivative(x0, 4), std::out_of_range);
}

TEST_CASE("Dirac operators") {
  // d(x0 + x1 e1) = 1 + e1 e1 = 0, while d(x0 - x1 e1) = 1 - e1 e1 = 2.
  CHECK(dirac(paravector_variable<Rational>(1)).is_zero());
  CHECK(dirac(var(1, 0) - var(1, 1) * ExactMultivector::generator(1, 1)) == scalar_poly(1, 2));
  CHECK(dirac(paravector_variable<Rational>(3)) == scalar_poly(3, -2));
  CHECK(conj_derivative(var(3, 0)) == scalar_poly(3, 1));
  // Dirac times its conjugate is the Laplacian on real-coefficient input.
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_polynomial(rng, 3, 5, 6, true);
    CHECK(dirac(conj_derivative(p)) == laplacian(p));
    CHECK(conj_derivative(dirac(p)) == laplacian(p));
  }
}

TEST_CASE("paravector powers") {
  const int n = 3;
  CHECK(paravector_power<Rational>(n, 0) == scalar_poly(n, 1));
  const auto r2 = var(n, 1) * var(n, 1) + var(n, 2) * var(n, 2) + var(n, 3) * var(n, 3);
  const auto expected = var(n, 0) * var(n, 0) - r2 + var(n, 0) * vector_variable<Rational>(n) * Rational(2);
  CHECK(paravector_power<Rational>(n, 2) == expected);
  for (int k = 0; k <= 8; ++k) {
    CHECK(restrict_real(paravector_power<Rational>(n, k)) == real_power<Rational>(n, k));
    CHECK(paravector_power<Rational>(n, k) * conj_paravector_power<Rational>(n, k) ==
          conj_paravector_power<Rational>(n, k) * paravector_power<Rational>(n, k));
  }
  CHECK(restrict_real(vector_variable<Rational>(n)).is_zero());
}

TEST_CASE("evaluation") {
  const int n = 3;
  const std::vector<double> origin_x{1, 0, 0, 0};
  const auto v = evaluate(paravector_power<Rational>(n, 2), origin_x);
  CHECK(v == Multivector<double>::scalar(n, 1.0));
  const std::vector<double> pt{1, 1, 0, 0};
  const auto p1 = evaluate(appell_polynomial(n, 1), pt);
  CHECK(p1[Blade{}] == doctest::Approx(1.0));
  CHECK(p1[Blade{1}] == doctest::Approx(1.0 / 3.0));
  CHECK(p1.size() == 2);

  const std::vector<Rational> exact_pt{Rational(1, 2), Rational(1), Rational(-1, 3), Rational(0)};
  const auto x = evaluate_exact(paravector_variable<Rational>(n), exact_pt);
  CHECK(x == mv(n, {{{}, Rational(1, 2)}, {{1}, 1}, {{2}, Rational(-1, 3)}}));
}

TEST_CASE("evaluation is multiplicative") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    const auto p = random_polynomial(rng, 3, 3, 4), q = random_polynomial(rng, 3, 3, 4);
    const auto pt = random_point(rng, 3, 1.5);
    const auto lhs = evaluate(p * q, pt);
    const auto rhs = evaluate(p, pt) * evaluate(q, pt);
    CHECK(norm(lhs - rhs) <= 1e-10 * std::max(1.0, norm(rhs)));
  }
}

TEST_CASE("Appell modulus bound at random points") {
  Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    const auto pt = random_point(rng, 3, 1.3);
    const double r = point_norm(pt);
    for (int k = 0; k <= 10; ++k) CHECK(norm(evaluate(appell_polynomial(3, k), pt)) <= std::pow(r, k) * (1 + 1e-12));
  }
}

TEST_CASE("slice Cauchy-Riemann residual") {
  const int n = 3;
  Rng rng(15);
  std::vector<std::pair<double, double>> grid;
  for (double u : {-1.0, -0.3, 0.4, 1.1})
    for (double v : {-0.8, 0.2, 0.9}) grid.emplace_back(u, v);
  for (int t = 0; t < 10; ++t) {
    auto dir = random_point(rng, n - 1, 1.0);
    const double len = point_norm(dir);
    for (auto& d : dir) d /= len;
    CHECK(slice_cr_residual(paravector_power<Rational>(n, 5), dir, grid) < 1e-10);
  }
  const std::vector<double> e1{1, 0, 0};
  CHECK(slice_cr_residual(var(n, 1), e1, grid) > 0.5);
  CHECK(slice_cr_residual(scalar_poly(n, 7), e1, grid) == 0.0);
  const std::vector<double> not_unit{1, 1, 0};
  CHECK_THROWS_AS(slice_cr_residual(var(n, 1), not_unit, grid), std::invalid_argument);
}

TEST_CASE("reflection and degree cap") {
  const int n = 3;
  const auto p = paravector_power<Rational>(n, 3) + scalar_poly(n, 2);
  CHECK(reflect(p) == scalar_poly(n, 2) - paravector_power<Rational>(n, 3));
  if (std::getenv("CLIFFORDLAB_MAX_DEGREE") == nullptr) CHECK(degree_cap() == 64);
  CHECK_THROWS_AS(real_power<Rational>(n, 40) * real_power<Rational>(n, 30), std::length_error);
}

TEST_CASE("text rendering") {
  const int n = 3;
  CHECK(to_string(ExactPolynomial(n)) == "0");
  CHECK(to_string(var(n, 0) * Rational(-12) + scalar_poly(n, 1)) == "1 - 12*x0");
  CHECK(to_string(var(n, 1) * mv(n, {{{1}, Rational(1, 3)}}) + var(n, 0)) == "(1/3 e1)*x1 + x0");
  CHECK(to_string(var(n, 0) * var(n, 0) - var(n, 1) * Rational(1, 2)) == "-1/2*x1 + x0^2");
}

}  // TEST_SUITE
