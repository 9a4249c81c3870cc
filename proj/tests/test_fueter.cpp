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

#include <cmath>

#include "cliffordlab/fueter.hpp"
#include "generators.hpp"

using namespace cliffordlab;
using namespace testing_support;

namespace {

// Delta^h applied to x^j term by term, without the closed form.
ExactPolynomial fueter_direct(int n, int j) { return laplacian_power(paravector_power<Rational>(n, j), (n - 1) / 2); }

double transport_oracle(int n, double c, int k) {
  return c * std::exp(2.0 * (std::lgamma(k + 1.0) - std::lgamma(n + k + 0.0)));
}

const std::vector<WeightSequence> kSpaces{WeightSequence::hardy(), WeightSequence::bergman(),
                                          WeightSequence::dirichlet(), WeightSequence::fock()};

}  // namespace

TEST_SUITE("fueter") {

TEST_CASE("gamma constants") {
  CHECK(fueter_gamma(1) == 1);
  CHECK(fueter_gamma(3) == -2);
  CHECK(fueter_gamma(5) == Rational(8, 3));
  CHECK(fueter_gamma(7) == Rational(-16, 5));
  CHECK_THROWS_AS(fueter_gamma(4), std::invalid_argument);
}

TEST_CASE("monomial closed form against direct Laplacians") {
  for (int n : {1, 3, 5}) {
    for (int j = 0; j <= 9; ++j) CHECK(fueter_sce_monomial(n, j) == fueter_direct(n, j));
  }
  CHECK(fueter_sce_monomial(3, 1).is_zero());
  CHECK(fueter_sce_monomial(3, 2) == scalar_poly(3, -4));
  CHECK(fueter_sce_monomial(3, 3) == var(3, 0) * Rational(-12) + vector_variable<Rational>(3) * Rational(-4));
  CHECK(fueter_sce_monomial(5, 4) == scalar_poly(5, 64));
}

TEST_CASE("series coefficients") {
  const int n = 3, K = 8;
  TaylorSeries f(n, K);
  for (int k = 0; k <= K; ++k) f.set(k, ExactMultivector::scalar(n, 1));
  const auto g = fueter_sce_series(n, f);
  CHECK(g.order() == K - 2);
  for (int k = 0; k <= K - 2; ++k) CHECK(g[k] == ExactMultivector::scalar(n, -2 * (k + 2) * (k + 1)));
  CHECK(materialize(g) == laplacian(slice_extend(f)));
}

TEST_CASE("Clifford-valued series commute with the Laplacian") {
  Rng rng(30);
  for (int n : {3, 5}) {
    for (int t = 0; t < 4; ++t) {
      const auto f = random_taylor(rng, n, 8);
      CHECK(materialize(fueter_sce_series(n, f)) == laplacian_power(slice_extend(f), (n - 1) / 2));
    }
  }
}

TEST_CASE("weight tables") {
  CHECK(WeightSequence::hardy()(7) == 1);
  CHECK(WeightSequence::bergman()(3) == Rational(1, 4));
  CHECK(WeightSequence::dirichlet()(5) == 5);
  CHECK(WeightSequence::fock()(5) == 120);
  CHECK(parse_weight_kind("fock") == WeightKind::Fock);
  CHECK(to_string(WeightKind::Bergman) == "bergman");
  CHECK_THROWS_AS(parse_weight_kind("sobolev"), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence::builtin(WeightKind::Custom), std::invalid_argument);
}

TEST_CASE("admissibility of the built-in weights") {
  CHECK(WeightSequence::hardy().is_admissible(50));
  CHECK(WeightSequence::fock().is_admissible(50));
  CHECK_FALSE(WeightSequence::bergman().is_admissible(50));
  CHECK_FALSE(WeightSequence::dirichlet().is_admissible(50));
}

TEST_CASE("transported weights") {
  const auto fock3 = transport_weights(3, WeightSequence::fock());
  CHECK(fock3(0) == Rational(1, 2));
  CHECK(fock3(1) == Rational(1, 6));
  CHECK(fock3(2) == Rational(1, 6));
  CHECK(fock3(3) == Rational(3, 10));
  CHECK(fock3(4) == Rational(4, 5));
  CHECK(fock3.kind() == WeightKind::Fock);
  const auto hardy3 = transport_weights(3, WeightSequence::hardy());
  for (int k = 0; k <= 10; ++k) CHECK(hardy3(k) == Rational(1, (k + 1) * (k + 1) * (k + 2) * (k + 2)));
  for (int n : {3, 5, 7}) {
    for (const auto& c : kSpaces) {
      const auto b = transport_weights(n, c);
      for (int k = 0; k <= 12; ++k)
        CHECK(b(k).get_d() == doctest::Approx(transport_oracle(n, c(k + n - 1).get_d(), k)).epsilon(1e-12));
    }
  }
  const auto id = transport_weights(1, WeightSequence::fock());
  for (int k = 0; k <= 6; ++k) CHECK(id(k) == WeightSequence::fock()(k));
}

TEST_CASE("weighted norms") {
  const int n = 3;
  TaylorSeries f(n, 2);
  f.set(0, mv(n, {{{}, 1}, {{1, 2}, 2}}));
  f.set(2, mv(n, {{{3}, Rational(1, 2)}}));
  CHECK(weighted_norm_sq(WeightSequence::hardy(), f) == Rational(21, 4));
  CHECK(weighted_norm_sq(WeightSequence::fock(), f) == Rational(11, 2));
}

TEST_CASE("range norm identity") {
  Rng rng(31);
  for (int n : {3, 5}) {
    const Rational g2 = fueter_gamma(n) * fueter_gamma(n);
    for (const auto& c : kSpaces) {
      for (int t = 0; t < 5; ++t) {
        const auto f = random_taylor(rng, n, 9);
        const auto id = range_norm_identity(n, c, f);
        CHECK(id.holds());
        // independent assembly of the right-hand side: the tail of ||f||_c^2
        Rational tail(0);
        for (int k = n - 1; k <= f.order(); ++k) tail += c(k) * norm_sq(f[k]);
        CHECK(id.rhs == g2 * tail);
        CHECK(id.lhs == weighted_norm_sq(transport_weights(n, c), fueter_sce_series(n, f)));
      }
    }
  }
}

TEST_CASE("commutative diagram") {
  Rng rng(32);
  for (int n : {1, 3, 5}) {
    for (int t = 0; t < 3; ++t) {
      const auto f = random_taylor(rng, n, 7);
      const auto routes = diagram_routes(n, f);
      CHECK(routes.agree());
      CHECK(diagram_check(n, f));
      CHECK(routes.gck_route ==
            materialize(gck_extend(taylor_derivative(f, n - 1))) * fueter_gamma(n));
    }
  }
}

TEST_CASE("kernel membership") {
  const int n = 5;
  TaylorSeries f(n, 3);
  f.set(0, ExactMultivector::scalar(n, 1));
  f.set(3, mv(n, {{{1}, 2}}));
  CHECK(kernel_membership(n, f));
  CHECK(laplacian_power(slice_extend(f), 2).is_zero());
  f = f.truncated(6);
  f.set(4, ExactMultivector::scalar(n, Rational(1, 9)));
  CHECK_FALSE(kernel_membership(n, f));
  CHECK_FALSE(laplacian_power(slice_extend(f), 2).is_zero());
  CHECK(kernel_membership(1, TaylorSeries(1, 5)));
}

TEST_CASE("surjectivity through the preimage") {
  Rng rng(33);
  for (int n : {3, 5, 7}) {
    for (int t = 0; t < 4; ++t) {
      const auto g = random_appell(rng, n, 6);
      const auto f = fueter_sce_preimage(n, g);
      CHECK(fueter_sce_series(n, f) == g);
      for (int k = 0; k < n - 1; ++k) CHECK(f[k].is_zero());
    }
  }
}

}  // TEST_SUITE
