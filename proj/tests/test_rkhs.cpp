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
#include <numbers>

#include "cliffordlab/rkhs.hpp"
#include "generators.hpp"

using namespace cliffordlab;
using namespace testing_support;

namespace {

CoefficientFunction P(int n, int k) { return CoefficientFunction::appell(n, k); }

std::vector<Rational> exact_point(const std::vector<double>& x) {
  std::vector<Rational> out;
  for (double v : x) out.emplace_back(v);
  return out;
}

// Kernel from the symbolic polynomials, independent of appell_values.
Multivector<double> kernel_symbolic(const SpaceConfig& space, const std::vector<double>& x,
                                    const std::vector<double>& y, int order) {
  Multivector<double> acc(space.dim());
  for (int k = 0; k <= order; ++k) {
    const auto& pk = appell_polynomial(space.dim(), k);
    acc += evaluate(pk, x) * clifford_conjugate(evaluate(pk, y)) * (1.0 / space.weight(k).get_d());
  }
  return acc;
}

}  // namespace

TEST_SUITE("rkhs") {

TEST_CASE("coefficient functions") {
  const int n = 3;
  CoefficientFunction f(n, {ExactMultivector::scalar(n, 1), ExactMultivector(n), ExactMultivector(n)});
  CHECK(f.support_size() == 1);
  CHECK(f == P(n, 0));
  CHECK((P(n, 2) - P(n, 2)).support_size() == 0);
  CHECK(P(n, 3)[7].is_zero());
  CHECK(P(n, 2).materialize() == appell_polynomial(n, 2));
  CHECK(CoefficientFunction::from_series(P(n, 4).to_series()) == P(n, 4));
}

TEST_CASE("inner products") {
  const int n = 3;
  const auto fock = SpaceConfig::fock(n);
  const auto e1 = ExactMultivector::generator(n, 1);
  const auto f = P(n, 0) + CoefficientFunction::appell(n, 1, e1);
  CHECK(inner_product(fock, f, P(n, 1)) == -e1);
  CHECK(inner_product(fock, P(n, 1), f) == e1);
  for (int k = 0; k <= 8; ++k) {
    CHECK(norm_sq(fock, P(n, k)) == factorial(k));
    CHECK(norm_sq(SpaceConfig::hardy(n), P(n, k)) == 1);
  }
  CHECK(norm_sq(SpaceConfig::fueter_range(n, WeightSequence::hardy()), P(n, 1)) == Rational(1, 36));
  CHECK_THROWS_AS(inner_product(fock, P(5, 0), P(3, 0)), std::invalid_argument);
}

TEST_CASE("inner product properties") {
  Rng rng(50);
  for (const auto& space : {SpaceConfig::fock(3), SpaceConfig::hardy(3),
                            SpaceConfig::fueter_range(3, WeightSequence::bergman())}) {
    for (int t = 0; t < 20; ++t) {
      const auto f = random_coefficients(rng, 3, 6), g = random_coefficients(rng, 3, 6);
      const auto a = random_multivector(rng, 3);
      CHECK(inner_product(space, g, f) == clifford_conjugate(inner_product(space, f, g)));
      std::vector<ExactMultivector> ga;
      for (const auto& c : g.coeffs()) ga.push_back(c * a);
      CHECK(inner_product(space, f, CoefficientFunction(3, ga)) == inner_product(space, f, g) * a);
      CHECK(sgn(norm_sq(space, f)) >= 0);
      CHECK((sgn(norm_sq(space, f)) == 0) == (f.support_size() == 0));
    }
  }
}

TEST_CASE("domain radii") {
  CHECK(std::isinf(SpaceConfig::fock(3).domain_radius_sq()));
  CHECK(SpaceConfig::hardy(3).domain_radius_sq() == 1.0);
  CHECK(SpaceConfig::fueter_range(3, WeightSequence::dirichlet()).domain_radius_sq() == 1.0);
  CHECK(std::isinf(SpaceConfig::fueter_range(5, WeightSequence::fock()).domain_radius_sq()));
}

TEST_CASE("kernel values on the real line") {
  const std::vector<double> half{0.5, 0, 0, 0};
  const auto h = kernel_eval(SpaceConfig::hardy(3), half, half, 80);
  CHECK(h.value[Blade{}] == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(h.tail_bound < 1e-40);
  for (auto [a, b] : {std::pair{0.7, -1.3}, {2.0, 1.5}}) {
    const auto f = kernel_eval(SpaceConfig::fock(3), std::vector<double>{a, 0, 0, 0}, std::vector<double>{b, 0, 0, 0}, 60);
    CHECK(f.value[Blade{}] == doctest::Approx(std::exp(a * b)).epsilon(1e-13));
    CHECK(norm(f.value - Multivector<double>::scalar(3, f.value[Blade{}])) < 1e-15);
  }
}

TEST_CASE("kernel at the origin") {
  const std::vector<double> o(4, 0.0);
  Rng rng(51);
  for (const auto& space : {SpaceConfig::fock(3), SpaceConfig::hardy(3),
                            SpaceConfig::fueter_range(3, WeightSequence::hardy())}) {
    const auto y = random_point(rng, 3, 0.8);
    const auto k = kernel_eval(space, o, y, 30).value;
    CHECK(norm(k - Multivector<double>::scalar(3, 1.0 / space.weight(0).get_d())) < 1e-15);
  }
}

TEST_CASE("kernel symmetry and tail bounds") {
  Rng rng(52);
  for (int n : {3, 5}) {
    for (const auto& space : {SpaceConfig::fock(n), SpaceConfig::hardy(n)}) {
      for (int t = 0; t < 5; ++t) {
        const auto x = random_point(rng, n, 0.9), y = random_point(rng, n, 0.9);
        const auto kxy = kernel_eval(space, x, y, 20), kyx = kernel_eval(space, y, x, 20);
        CHECK(norm(kxy.value - clifford_conjugate(kyx.value)) < 1e-13);
        const auto full = kernel_eval(space, x, y, 400).value;
        CHECK(norm(kxy.value - full) <= kxy.tail_bound + 1e-13);
        CHECK(norm(kxy.value - kernel_symbolic(space, x, y, 20)) < 1e-12);
      }
    }
  }
}

TEST_CASE("kernel rejects points outside the domain") {
  const std::vector<double> inside{0.5, 0, 0, 0}, outside{0.6, 0.9, 0, 0};
  CHECK_THROWS_AS(kernel_eval(SpaceConfig::hardy(3), inside, outside, 10), std::domain_error);
  CHECK_NOTHROW(kernel_eval(SpaceConfig::fock(3), inside, outside, 10));
  CHECK_THROWS_AS(kernel_eval(SpaceConfig::hardy(3), inside, std::vector<double>{0.5, 0}, 10), std::invalid_argument);
}

TEST_CASE("reproducing property") {
  Rng rng(53);
  for (const auto& space : {SpaceConfig::fock(3), SpaceConfig::hardy(3),
                            SpaceConfig::fueter_range(3, WeightSequence::fock())}) {
    for (int t = 0; t < 5; ++t) {
      const auto f = random_coefficients(rng, 3, 6);
      const std::vector<Rational> y{Rational(1, 3), Rational(-1, 4), Rational(1, 5), Rational(0)};
      CHECK(reproducing_residual_exact(space, f, y, 8).is_zero());
      const auto yd = random_point(rng, 3, 0.7);
      CHECK(reproducing_check(space, f, yd, 8) < 1e-12);
    }
  }
  // the section itself: conj(P_k(y))/b_k
  const auto y = exact_point({0.5, 0.25, 0, 0});
  const auto sec = kernel_section(SpaceConfig::fock(3), y, 3);
  for (int k = 0; k <= 3; ++k)
    CHECK(sec[k] == clifford_conjugate(evaluate_exact(appell_polynomial(3, k), y)) * Rational(Rational(1) / factorial(k)));
}

TEST_CASE("pointwise bounds") {
  Rng rng(54);
  for (int n : {3, 5}) {
    for (const auto& space : {SpaceConfig::fock(n), SpaceConfig::hardy(n),
                              SpaceConfig::fueter_range(n, WeightSequence::hardy())}) {
      for (int t = 0; t < 20; ++t) {
        const auto f = random_coefficients(rng, n, 7);
        const auto x = random_point(rng, n, 0.95);
        const auto b = pointwise_bound(space, f, x);
        CHECK(b.holds());
        CHECK(b.lhs == doctest::Approx(norm(evaluate(f.materialize(), x))).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("shift operators") {
  const int n = 3;
  for (int k = 0; k <= 6; ++k) {
    CHECK(creation(P(n, k)) == P(n, k + 1));
    CHECK(backward_shift(P(n, k + 1)) == P(n, k));
    if (k > 0) {
      CHECK(annihilation(P(n, k)) == CoefficientFunction::appell(n, k - 1, ExactMultivector::scalar(n, k)));
    }
  }
  CHECK(annihilation(P(n, 0)).support_size() == 0);
  CHECK(backward_shift(P(n, 0)).support_size() == 0);
  Rng rng(55);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_coefficients(rng, n, 6);
    CHECK(backward_shift(creation(f)) == f);
    CHECK(creation(f).materialize() == materialize(gck_product(AppellSeries::monomial(n, 1, 7), f.to_series().truncated(7), 7)));
    CHECK(annihilation(f).materialize() == conj_derivative(f.materialize()) * Rational(1, 2));
    CHECK(commutator_check(f));
  }
}

TEST_CASE("adjoint pairs") {
  Rng rng(56);
  const int n = 3;
  const auto fock = SpaceConfig::fock(n), hardy = SpaceConfig::hardy(n);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_coefficients(rng, n, 6), g = random_coefficients(rng, n, 6);
    CHECK(adjoint_check(fock, f, g));
    CHECK(adjoint_check(hardy, f, g));
    CHECK(inner_product(fock, annihilation(f), g) == inner_product(fock, f, creation(g)));
    CHECK(inner_product(hardy, backward_shift(f), g) == inner_product(hardy, f, creation(g)));
  }
  CHECK_THROWS_AS(adjoint_check(SpaceConfig::fueter_range(n, WeightSequence::hardy()), P(n, 0), P(n, 0)),
                  std::invalid_argument);
}

TEST_CASE("unbounded operators on the Fock space") {
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  for (long N : {1L, 10L, 1000L, 100000L}) {
    const auto w = divergence_witness(N);
    double g = 0, mg = 0, ag = 0;
    for (long k = 0; k < N; ++k) {
      g += 1.0 / ((k + 1.0) * (k + 1.0));
      mg += 1.0 / (k + 1.0);
      if (k + 1 < N) ag += (k + 1.0) / ((k + 2.0) * (k + 2.0));
    }
    CHECK(w.g_norm_sq == doctest::Approx(g).epsilon(1e-12));
    CHECK(w.creation_norm_sq == doctest::Approx(mg).epsilon(1e-12));
    CHECK(w.annihilation_norm_sq == doctest::Approx(ag).epsilon(1e-12));
    CHECK(w.g_norm_sq <= pi2_6);
    CHECK(w.creation_norm_sq >= w.creation_lower_bound);
    CHECK(w.annihilation_norm_sq >= w.annihilation_lower_bound);
  }
  CHECK(divergence_witness(1000000).certified(12.0));
  CHECK_FALSE(divergence_witness(1000).certified(12.0));
  CHECK_THROWS_AS(divergence_witness(0), std::invalid_argument);
}

}  // TEST_SUITE
