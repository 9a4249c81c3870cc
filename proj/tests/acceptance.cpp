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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails. Every tolerance and sample size is fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cliffordlab/elementary.hpp"
#include "cliffordlab/fueter.hpp"
#include "cliffordlab/polyanalytic.hpp"
#include "cliffordlab/random.hpp"
#include "cliffordlab/rkhs.hpp"

using namespace cliffordlab;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kBoundTol = 1e-10;     // elementary certified tails
constexpr double kKernelTail = 1e-10;   // kernel truncation bound
constexpr double kRoundoff = 1e-12;     // relative slack for double sums
constexpr double kWitnessFloor = 10.0;  // harmonic lower bound to exceed

struct Outcome {
  bool pass = true;
  std::string detail;
  long checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string tag(const std::string& s, int a, int b = -1, int c = -1) {
  std::string out = s + " (" + std::to_string(a);
  if (b >= 0) out += ", " + std::to_string(b);
  if (c >= 0) out += ", " + std::to_string(c);
  return out + ")";
}

// Appell polynomial assembled from products of x and xbar.
ExactPolynomial appell_from_products(int n, int k) {
  ExactPolynomial out(n);
  for (int s = 0; s <= k; ++s) {
    out += paravector_power<Rational>(n, k - s) * conj_paravector_power<Rational>(n, s) * t_coefficient(n, k, s);
  }
  return out;
}

ExactPolynomial fueter_brute(int n, int j) {
  return laplacian_power(paravector_power<Rational>(n, j), (n - 1) / 2);
}

Outcome fueter_closed_form() {
  Outcome o;
  for (int n : {1, 3, 5})
    for (int j = 0; j <= 10; ++j) o.expect(fueter_brute(n, j) == fueter_sce_monomial(n, j), tag("n, j", n, j));
  return o;
}

Outcome quaternionic_regression() {
  Outcome o;
  const int n = 3;
  for (int k = 0; k <= 8; ++k) {
    const auto lhs = laplacian(paravector_power<Rational>(n, k + 2));
    const auto rhs = appell_from_products(n, k) * Rational(-2 * (k + 2) * (k + 1));
    o.expect(lhs == rhs, tag("k", k));
    o.expect(appell_polynomial(n, k) == appell_from_products(n, k), tag("cached P_k, k", k));
  }
  return o;
}

Outcome appell_suite() {
  Outcome o;
  for (int n : {3, 5, 7}) {
    for (int k = 0; k <= 12; ++k) {
      Rational sum(0);
      for (int s = 0; s <= k; ++s) sum += t_coefficient(n, k, s);
      o.expect(sum == 1, tag("sum rule n, k", n, k));
      const auto pk = appell_polynomial(n, k);
      o.expect(dirac(pk).is_zero(), tag("monogenic n, k", n, k));
      const auto lowered = conj_derivative(pk) * Rational(1, 2);
      o.expect(lowered == (k == 0 ? ExactPolynomial(n) : appell_polynomial(n, k - 1) * Rational(k)),
               tag("Appell property n, k", n, k));
      o.expect(restrict_real(pk) == real_power<Rational>(n, k), tag("restriction n, k", n, k));
    }
  }
  return o;
}

Outcome commuting_diagram() {
  Outcome o;
  Rng rng(kSeed);
  for (int n : {3, 5}) {
    for (int t = 0; t < 50; ++t) {
      const auto f = random_taylor(rng, n, 7);
      o.expect(diagram_routes(n, f).agree(), tag("n, trial", n, t));
    }
  }
  return o;
}

Outcome gck_product_suite() {
  Outcome o;
  Rng rng(kSeed + 1);
  for (int n : {3, 5}) {
    const int K = 16;
    for (int a = 0; a <= K; ++a)
      for (int b = 0; a + b <= K; ++b)
        o.expect(gck_product(AppellSeries::monomial(n, a, K), AppellSeries::monomial(n, b, K), K) ==
                     AppellSeries::monomial(n, a + b, K),
                 tag("P_a P_b, n, a, b", n, a, b));
    const int order = 12;
    const auto one = AppellSeries::monomial(n, 0, order);
    for (int t = 0; t < 10; ++t) {
      auto s = random_appell(rng, n, order);
      s.set(0, random_paravector(rng, n) + ExactMultivector::scalar(n, 1));
      const auto inv = gck_inverse(s, order);
      o.expect(gck_product(s, inv, order) == one && gck_product(inv, s, order) == one, tag("inverse n, trial", n, t));
    }
  }
  return o;
}

Outcome elementary_suite() {
  Outcome o;
  const int order = 12;
  const ElementaryKind kinds[] = {ElementaryKind::Exp, ElementaryKind::Sin, ElementaryKind::Cos,
                                  ElementaryKind::Sinh, ElementaryKind::Cosh};
  Rng rng(kSeed + 2);
  for (int n : {1, 3, 5}) {
    for (auto kind : kinds) o.expect(derivative_identity_check(kind, n, order), "derivative " + to_string(kind) + tag(" n", n));
    o.expect(parity_identity_check(n, order), tag("parity n", n));
    o.expect(pythagorean_check(n, order), tag("Pythagorean n", n));
    for (int t = 0; t < 500; ++t) {
      const auto x = random_point(rng, n, 4.0);
      double r = 0.0;
      for (double v : x) r += v * v;
      r = std::sqrt(r);
      for (auto kind : kinds) {
        const auto v = eval_elementary(kind, n, x, kBoundTol);
        o.expect(v.tail_bound <= kBoundTol, "tail " + to_string(kind) + tag(" n, point", n, t));
        o.expect(norm(v.value) <= elementary_bound(kind, n, r) + kBoundTol,
                 "bound " + to_string(kind) + tag(" n, point", n, t));
      }
    }
  }
  return o;
}

Outcome range_isometry() {
  Outcome o;
  Rng rng(kSeed + 3);
  const WeightSequence spaces[] = {WeightSequence::hardy(), WeightSequence::bergman(), WeightSequence::dirichlet(),
                                   WeightSequence::fock()};
  for (int n : {3, 5}) {
    for (const auto& c : spaces) {
      for (int t = 0; t < 100; ++t) {
        const auto f = random_taylor(rng, n, 9);
        o.expect(range_norm_identity(n, c, f).holds(), "range " + to_string(c.kind()) + tag(" n, trial", n, t));
        const auto g = random_appell(rng, n, 6);
        const auto pre = fueter_sce_preimage(n, g);
        o.expect(fueter_sce_series(n, pre) == g, "surjective " + to_string(c.kind()) + tag(" n, trial", n, t));
        o.expect(weighted_norm_sq(transport_weights(n, c), g) ==
                     fueter_gamma(n) * fueter_gamma(n) * weighted_norm_sq(c, pre),
                 "isometry " + to_string(c.kind()) + tag(" n, trial", n, t));
      }
    }
    // kernel: exhaustive over monomial degrees, then random combinations
    for (int j = 0; j <= 14; ++j) {
      const auto mono = TaylorSeries::monomial(n, j, j);
      o.expect(fueter_brute(n, j).is_zero() == kernel_membership(n, mono), tag("kernel sweep n, j", n, j));
      o.expect(kernel_membership(n, mono) == (j < n - 1), tag("kernel degree n, j", n, j));
    }
    for (int t = 0; t < 20; ++t) {
      auto f = random_taylor(rng, n, n - 2);
      if (t % 2) f = f.truncated(n + 1) + TaylorSeries::monomial(n, n - 1 + t % 3, n + 1);
      const bool zero = laplacian_power(slice_extend(f), (n - 1) / 2).is_zero();
      o.expect(zero == kernel_membership(n, f), tag("kernel combination n, trial", n, t));
    }
  }
  return o;
}

Outcome operator_algebra() {
  Outcome o;
  Rng rng(kSeed + 4);
  const int n = 3;
  const auto fock = SpaceConfig::fock(n), hardy = SpaceConfig::hardy(n);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_coefficients(rng, n, 8), g = random_coefficients(rng, n, 8);
    o.expect(inner_product(fock, annihilation(f), g) == inner_product(fock, f, creation(g)), tag("Fock adjoint", t));
    o.expect(inner_product(hardy, backward_shift(f), g) == inner_product(hardy, f, creation(g)),
             tag("Hardy adjoint", t));
    o.expect(adjoint_check(fock, f, g) && adjoint_check(hardy, f, g), tag("adjoint_check", t));
    o.expect(annihilation(creation(f)) - creation(annihilation(f)) == f, tag("commutator", t));
    o.expect(backward_shift(creation(f)) == f, tag("shift inverse", t));
  }
  const auto w = divergence_witness(1000000);
  o.expect(w.certified(kWitnessFloor), "divergence witness");
  o.expect(w.creation_lower_bound > kWitnessFloor && w.annihilation_lower_bound > kWitnessFloor,
           "witness lower bounds");
  return o;
}

int order_for_tail(const SpaceConfig& space, const std::vector<double>& x, const std::vector<double>& y) {
  for (int K = 8;; K += 8) {
    if (kernel_eval(space, x, y, K).tail_bound <= kKernelTail) return K;
  }
}

Outcome kernel_restrictions() {
  Outcome o;
  for (int n : {3, 5}) {
    for (int i = -9; i <= 9; ++i) {
      for (int j = -9; j <= 9; ++j) {
        std::vector<double> x(n + 1, 0.0), y(n + 1, 0.0);
        x[0] = i / 10.0;
        y[0] = j / 10.0;
        const auto hardy = SpaceConfig::hardy(n);
        const auto kh = kernel_eval(hardy, x, y, order_for_tail(hardy, x, y));
        const double exact_h = 1.0 / (1.0 - x[0] * y[0]);
        o.expect(kh.tail_bound <= kKernelTail &&
                     norm(kh.value - Multivector<double>::scalar(n, exact_h)) <= kh.tail_bound + kRoundoff * exact_h,
                 tag("Hardy n, i, j", n, i, j));

        x[0] = i / 4.5;
        y[0] = j / 4.5;
        const auto fock = SpaceConfig::fock(n);
        const auto kf = kernel_eval(fock, x, y, order_for_tail(fock, x, y));
        const double exact_f = std::exp(x[0] * y[0]);
        o.expect(kf.tail_bound <= kKernelTail &&
                     norm(kf.value - Multivector<double>::scalar(n, exact_f)) <= kf.tail_bound + kRoundoff * exact_f,
                 tag("Fock n, i, j", n, i, j));
      }
    }
  }
  return o;
}

Outcome polyanalytic_suite() {
  Outcome o;
  for (int n : {3, 5}) {
    for (int m = 0; m <= 2; ++m) {
      for (int k = 0; k <= m; ++k) {
        for (int j = 0; j <= 8; ++j) {
          const auto oracle = fueter_brute(n, j);
          o.expect(c_map_monomial(n, m, k, j) == real_power<Rational>(n, k) * oracle, tag("C table n, m, k", n, m, k));
          const Rational scale = k == m ? int_power(Rational(2), m) * factorial(m) : Rational(0);
          o.expect(tau_map_monomial(n, m, k, j) == oracle * scale, tag("tau table n, m, k", n, m, k));
        }
      }
    }
    for (int k = 0; k <= 6; ++k)
      for (int s = 0; s <= 6; ++s) o.expect(appell_like_check(k, s, n), tag("Appell-like n, k, s", n, k, s));
  }
  Rng rng(kSeed + 5);
  const int n = 3;
  for (int m = 0; m <= 2; ++m) {
    for (int t = 0; t < 10; ++t) {
      std::vector<TaylorSeries> layers;
      for (int k = 0; k <= m; ++k) layers.push_back(random_taylor(rng, n, 7));
      const PolySliceFunction f(n, std::move(layers));
      const auto c = c_map(f);
      o.expect(dirac_power(c, m) == materialize(tau_map(f)) * Rational(1, 1 << m), tag("relation m, trial", m, t));
      o.expect(relation_check(f), tag("relation_check m, trial", m, t));
      o.expect(dirac_power(c, m + 1).is_zero(), tag("C image m, trial", m, t));
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fueter closed form vs brute-force Laplacians", fueter_closed_form},
      {"quaternionic regression", quaternionic_regression},
      {"Appell polynomial identities", appell_suite},
      {"commuting diagram", commuting_diagram},
      {"GCK product and inverse", gck_product_suite},
      {"elementary function identities and bounds", elementary_suite},
      {"range isometry and kernel", range_isometry},
      {"operator algebra", operator_algebra},
      {"kernel restrictions to the real line", kernel_restrictions},
      {"polyanalytic maps", polyanalytic_suite},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %ld checks, %.2fs%s%s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.checks, secs,
                o.pass ? "" : ", first failure: ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
