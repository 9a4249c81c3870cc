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

#include "cliffordlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "cliffordlab/elementary.hpp"
#include "cliffordlab/fueter.hpp"
#include "cliffordlab/polyanalytic.hpp"
#include "cliffordlab/random.hpp"
#include "cliffordlab/rkhs.hpp"

namespace cliffordlab {

RunConfig RunConfig::with_env_defaults() {
  RunConfig config;
  if (const char* env = std::getenv("CLIFFORDLAB_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw std::invalid_argument("CLIFFORDLAB_TOL must be a positive number");
    }
    config.tol = v;
  }
  return config;
}

void RunConfig::validate() const {
  check_odd_dimension(n);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_k < 0 || max_degree < 0) throw std::invalid_argument("degree bounds must be nonnegative");
  if (m < 0) throw std::invalid_argument("polyanalytic m must be nonnegative");
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
}

void VerificationReport::record(const std::string& check, bool ok, const std::string& input) {
  ++cases;
  if (!ok) failures.push_back({check, input});
}

void VerificationReport::record_residual(const std::string& check, double residual, double tol,
                                         const std::string& input) {
  ++cases;
  if (std::isfinite(residual)) max_residual = std::max(max_residual, residual);
  if (!(residual <= tol)) {
    std::ostringstream out;
    out << input << (input.empty() ? "" : " ") << "residual=" << std::scientific << std::setprecision(3) << residual;
    failures.push_back({check, out.str()});
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  cases += other.cases;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  max_residual = std::max(max_residual, other.max_residual);
}

json VerificationReport::to_json(const RunConfig& config, bool include_timing) const {
  json out;
  out["schema"] = kSchema;
  out["suite"] = suite;
  out["config"] = {{"n", config.n},           {"max_k", config.max_k}, {"max_degree", config.max_degree},
                   {"m", config.m},           {"trials", config.trials}, {"tol", config.tol},
                   {"seed", config.seed}};
  out["cases"] = cases;
  json fails = json::array();
  for (const auto& f : failures) fails.push_back({{"check", f.check}, {"input", f.input}});
  out["failures"] = std::move(fails);
  out["max_residual"] = max_residual;
  out["passed"] = passed();
  if (include_timing) out["wall_time_s"] = wall_time_s;
  return out;
}

namespace {

std::string label(std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ' ';
    first = false;
    os << k << '=' << v;
  }
  return os.str();
}

// Runs a check body, turning unexpected exceptions into failures.
void guarded(VerificationReport& r, const std::string& check, const std::string& input,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.record(check, false, input + " threw: " + e.what());
  }
}

void suite_algebra(const RunConfig& c, VerificationReport& r) {
  Rng rng(c.seed);
  const int n = c.n;
  const double density = n <= 6 ? 0.5 : 8.0 / (1 << n);
  const double bound = std::pow(2.0, n / 2.0);
  for (int t = 0; t < c.trials; ++t) {
    const std::string in = label({{"n", n}, {"trial", t}});
    const auto a = random_multivector(rng, n, density);
    const auto b = random_multivector(rng, n, density);
    const auto d = random_multivector(rng, n, density);
    r.record("associativity", (a * b) * d == a * (b * d), in);
    r.record("anti_automorphism", clifford_conjugate(a * b) == clifford_conjugate(b) * clifford_conjugate(a), in);
    r.record("conjugate_norm", real_part(clifford_conjugate(a) * a) == norm_sq(a), in);
    r.record("submultiplicative", norm(a * b) <= bound * norm(a) * norm(b) * (1 + 1e-12), in);
    ExactMultivector sum(n);
    for (int k = 0; k <= n; ++k) sum += grade_projection(a, k);
    r.record("grade_partition", sum == a, in);
    const auto x = random_paravector(rng, n);
    r.record("paravector_modulus", x * clifford_conjugate(x) == ExactMultivector::scalar(n, norm_sq(x)), in);
    r.record("identity", ExactMultivector::scalar(n, 1) * a == a, in);
  }
}

void suite_appell(const RunConfig& c, VerificationReport& r) {
  const int n = c.n;
  Rng rng(c.seed);
  for (int k = 0; k <= c.max_k; ++k) {
    const std::string in = label({{"n", n}, {"k", k}});
    Rational total(0);
    for (int s = 0; s <= k; ++s) total += t_coefficient(n, k, s);
    r.record("t_sum_rule", total == 1, in);
    const auto pk = appell_polynomial(n, k);
    r.record("monogenic", dirac(pk).is_zero(), in);
    r.record("restriction", restrict_real(pk) == real_power<Rational>(n, k), in);
    const auto lhs = conj_derivative(pk) * Rational(1, 2);
    const auto rhs = k == 0 ? ExactPolynomial(n) : appell_polynomial(n, k - 1) * Rational(k);
    r.record("appell_property", lhs == rhs, in);
  }
  for (int t = 0; t < c.trials; ++t) {
    const auto pt = random_point(rng, n, 1.5);
    double len = 0.0;
    for (double v : pt) len += v * v;
    len = std::sqrt(len);
    const auto vals = appell_values(n, c.max_k, pt);
    for (int k = 0; k <= c.max_k; ++k) {
      r.record("modulus_bound", norm(vals[k]) <= std::pow(len, k) * (1 + 1e-12) + 1e-300,
               label({{"n", n}, {"k", k}, {"trial", t}}));
    }
  }
  for (int a = 0; a <= c.max_k; ++a) {
    for (int b = 0; a + b <= c.max_k; ++b) {
      const auto pa = AppellSeries::monomial(n, a, c.max_k), pb = AppellSeries::monomial(n, b, c.max_k);
      r.record("product_semigroup", gck_product(pa, pb, c.max_k) == AppellSeries::monomial(n, a + b, c.max_k),
               label({{"n", n}, {"a", a}, {"b", b}}));
    }
  }
  const int order = std::min(c.max_k, 8);
  for (int t = 0; t < std::min(c.trials, 20); ++t) {
    const std::string in = label({{"n", n}, {"trial", t}});
    const auto a = random_appell(rng, n, order), b = random_appell(rng, n, order), d = random_appell(rng, n, order);
    r.record("product_associative",
             gck_product(gck_product(a, b, order), d, order) == gck_product(a, gck_product(b, d, order), order), in);
    AppellSeries inv_src = random_appell(rng, n, order, true);
    inv_src.set(0, random_paravector(rng, n) + ExactMultivector::scalar(n, 1));
    guarded(r, "inverse", in, [&] {
      const auto inv = gck_inverse(inv_src, order);
      r.record("inverse", gck_product(inv_src, inv, order) == AppellSeries::monomial(n, 0, order), in);
    });
  }
  for (int t = 0; t < std::min(c.trials, 10); ++t) {
    const auto f = random_taylor(rng, n, std::min(c.max_k, 6));
    r.record("extension_monogenic", dirac(materialize(gck_extend(f))).is_zero(), label({{"n", n}, {"trial", t}}));
    r.record("extension_roundtrip", gck_restrict(gck_extend(f)) == f, label({{"n", n}, {"trial", t}}));
  }
}

void suite_fueter(const RunConfig& c, VerificationReport& r) {
  const int n = c.n;
  const int h = (n - 1) / 2;
  Rng rng(c.seed);
  for (int j = 0; j <= c.max_degree; ++j) {
    const std::string in = label({{"n", n}, {"j", j}});
    r.record("closed_form", laplacian_power(paravector_power<Rational>(n, j), h) == fueter_sce_monomial(n, j), in);
    const auto f = TaylorSeries::monomial(n, j, j);
    r.record("kernel_sweep", kernel_membership(n, f) == (j < n - 1), in);
    r.record("kernel_consistency", kernel_membership(n, f) == fueter_sce_series(n, f).is_zero(), in);
  }
  const int diagram_trials = std::min(c.trials, 10);
  for (int t = 0; t < diagram_trials; ++t) {
    const auto f = random_taylor(rng, n, c.max_degree);
    r.record("diagram", diagram_check(n, f), label({{"n", n}, {"trial", t}}));
  }
  for (int t = 0; t < c.trials; ++t) {
    const std::string in = label({{"n", n}, {"trial", t}});
    const auto f = random_taylor(rng, n, c.max_degree);
    for (auto kind : {WeightKind::Hardy, WeightKind::Bergman, WeightKind::Dirichlet, WeightKind::Fock}) {
      const auto id = range_norm_identity(n, WeightSequence::builtin(kind), f);
      r.record("range_identity_" + to_string(kind), id.holds(), in);
    }
    TaylorSeries f0 = f;
    for (int k = 0; k <= std::min(n - 2, f0.order()); ++k) f0.set(k, ExactMultivector(n));
    const auto c_fock = WeightSequence::fock();
    const Rational gamma = fueter_gamma(n);
    r.record("isometry", range_norm_identity(n, c_fock, f0).lhs == gamma * gamma * weighted_norm_sq(c_fock, f0), in);
    const auto g = random_appell(rng, n, c.max_degree);
    r.record("surjectivity", fueter_sce_series(n, fueter_sce_preimage(n, g)) == g, in);
  }
}

void suite_elementary(const RunConfig& c, VerificationReport& r) {
  const int n = c.n;
  const int order = std::max(c.max_k, 2);
  Rng rng(c.seed);
  for (auto kind : {ElementaryKind::Exp, ElementaryKind::Sin, ElementaryKind::Cos, ElementaryKind::Sinh,
                    ElementaryKind::Cosh}) {
    const std::string in = "n=" + std::to_string(n) + " fn=" + to_string(kind);
    r.record("derivative_" + to_string(kind), derivative_identity_check(kind, n, order), in);
    r.record("truncation_monogenic",
             dirac(materialize(truncated_elementary(kind, n, order).series)).is_zero(), in);
    for (double x0 : {-1.5, -0.25, 0.0, 0.75, 2.0}) {
      std::vector<double> pt(static_cast<std::size_t>(n) + 1, 0.0);
      pt[0] = x0;
      const auto v = eval_elementary(kind, n, pt, 1e-14);
      const double expected = elementary_restriction(kind, n, x0);
      const double resid = norm(v.value - Multivector<double>::scalar(n, expected)) / std::max(1.0, std::abs(expected));
      r.record_residual("restriction_law", resid, 1e-12, in);
    }
  }
  r.record("parity", parity_identity_check(n, order), label({{"n", n}, {"K", order}}));
  r.record("pythagorean", pythagorean_check(n, order), label({{"n", n}, {"K", order}}));
  for (int t = 0; t < c.trials; ++t) {
    const auto pt = random_point(rng, n, 3.0);
    double len = 0.0;
    for (double v : pt) len += v * v;
    len = std::sqrt(len);
    for (auto kind : {ElementaryKind::Exp, ElementaryKind::Sin, ElementaryKind::Cos, ElementaryKind::Sinh,
                      ElementaryKind::Cosh}) {
      const auto v = eval_elementary(kind, n, pt, c.tol);
      const std::string in = "n=" + std::to_string(n) + " fn=" + to_string(kind) + " trial=" + std::to_string(t);
      r.record("tail_certified", v.tail_bound < c.tol, in);
      r.record("bound", norm(v.value) <= elementary_bound(kind, n, len) + v.tail_bound, in);
    }
  }
}

void suite_rkhs(const RunConfig& c, VerificationReport& r, bool operators, bool kernel, bool bounds) {
  const int n = c.n;
  Rng rng(c.seed);
  const auto fock = SpaceConfig::fock(n);
  const auto hardy = SpaceConfig::hardy(n);
  if (operators) {
    for (int t = 0; t < c.trials; ++t) {
      const std::string in = label({{"n", n}, {"trial", t}});
      const auto f = random_coefficients(rng, n, 1 + t % 8);
      const auto g = random_coefficients(rng, n, 1 + (t * 3) % 8);
      r.record("adjoint_fock", adjoint_check(fock, f, g), in);
      r.record("adjoint_hardy", adjoint_check(hardy, f, g), in);
      r.record("commutator", commutator_check(f), in);
      r.record("shift_left_inverse", backward_shift(creation(f)) == f, in);
      const auto p0 = CoefficientFunction::appell(n, 0, f[0]);
      r.record("shift_right_inverse", creation(backward_shift(f)) == f - p0, in);
    }
    for (int k = 0; k <= std::min(c.max_k, 6); ++k) {
      const auto f = CoefficientFunction::appell(n, k, random_multivector(rng, n, 0.4));
      r.record("annihilation_symbolic",
               annihilation(f).materialize() == conj_derivative(f.materialize()) * Rational(1, 2),
               label({{"n", n}, {"k", k}}));
    }
    const auto w = divergence_witness(1000000);
    r.record("divergence_witness", w.certified(10.0), "terms=1000000");
  }
  if (kernel) {
    for (double x0 : {-2.0, -0.9, -0.3, 0.0, 0.5, 1.2, 2.0}) {
      for (double y0 : {-2.0, -0.7, 0.0, 0.4, 1.5, 2.0}) {
        std::vector<double> x(static_cast<std::size_t>(n) + 1, 0.0), y(x);
        x[0] = x0;
        y[0] = y0;
        const std::string in = "x0=" + std::to_string(x0) + " y0=" + std::to_string(y0);
        const auto kf = kernel_eval(fock, x, y, 64);
        r.record("fock_tail", kf.tail_bound <= c.tol, in);
        r.record_residual("fock_real_line", norm(kf.value - Multivector<double>::scalar(n, std::exp(x0 * y0))),
                          c.tol, in);
        const auto kf_swap = kernel_eval(fock, y, x, 64);
        r.record_residual("fock_symmetry", norm(kf.value - kf_swap.value), 1e-12, in);
        if (std::abs(x0) <= 0.9 && std::abs(y0) <= 0.9) {
          const auto kh = kernel_eval(hardy, x, y, 256);
          r.record("hardy_tail", kh.tail_bound <= c.tol, in);
          r.record_residual("hardy_real_line",
                            norm(kh.value - Multivector<double>::scalar(n, 1.0 / (1.0 - x0 * y0))), c.tol, in);
        }
      }
    }
    for (int t = 0; t < c.trials; ++t) {
      const std::string in = label({{"n", n}, {"trial", t}});
      const auto x = random_point(rng, n, 0.9);
      const std::vector<double> zero(static_cast<std::size_t>(n) + 1, 0.0);
      const auto k0 = kernel_eval(hardy, x, zero, 16);
      r.record_residual("kernel_at_origin", norm(k0.value - Multivector<double>::scalar(n, 1.0)), 1e-15, in);
      const auto f = random_coefficients(rng, n, 1 + t % 6);
      const int order = f.support_size() + 1;
      std::vector<Rational> y(static_cast<std::size_t>(n) + 1);
      for (auto& v : y) v = random_rational(rng, 3, 4);
      r.record("reproducing_exact", reproducing_residual_exact(fock, f, y, order).is_zero(), in);
      const auto yd = random_point(rng, n, 0.9);
      r.record_residual("reproducing_numeric", reproducing_check(fock, f, yd, order), c.tol, in);
    }
  }
  if (bounds) {
    for (int t = 0; t < c.trials; ++t) {
      const std::string in = label({{"n", n}, {"trial", t}});
      const auto f = random_coefficients(rng, n, 1 + t % 8);
      r.record("pointwise_fock", pointwise_bound_check(fock, f, random_point(rng, n, 2.0)), in);
      r.record("pointwise_hardy", pointwise_bound_check(hardy, f, random_point(rng, n, 0.9)), in);
      const auto range = SpaceConfig::fueter_range(n, WeightSequence::fock());
      r.record("containment", norm_sq(range, f) <= norm_sq(fock, f), in);
    }
  }
}

void suite_polyanalytic(const RunConfig& c, VerificationReport& r, bool tables) {
  const int n = c.n;
  const int m = c.m;
  Rng rng(c.seed);
  if (tables) {
    for (int k = 0; k <= m; ++k) {
      for (int j = 0; j <= c.max_degree; ++j) {
        const std::string in = label({{"n", n}, {"m", m}, {"k", k}, {"j", j}});
        const auto x0k = real_power<Rational>(n, k);
        r.record("c_table", c_map_monomial(n, m, k, j) == x0k * fueter_sce_monomial(n, j), in);
        const Rational tau_scale = k == m ? int_power(Rational(2), m) * factorial(m) : Rational(0);
        r.record("tau_table", tau_map_monomial(n, m, k, j) == fueter_sce_monomial(n, j) * tau_scale, in);
        if (n == 3 && j > 2) {
          r.record("quaternionic_regression",
                   c_map_monomial(n, m, k, j) == x0k * appell_polynomial(3, j - 2) * Rational(-2 * j * (j - 1)), in);
        }
      }
    }
    for (int k = 0; k <= 6; ++k)
      for (int s = 0; s <= 6; ++s) r.record("appell_like", appell_like_check(k, s, n), label({{"n", n}, {"k", k}, {"s", s}}));
  }
  const int trials = std::min(c.trials, 20);
  for (int t = 0; t < trials; ++t) {
    const std::string in = label({{"n", n}, {"m", m}, {"trial", t}});
    std::vector<TaylorSeries> layers;
    for (int k = 0; k <= m; ++k) layers.push_back(random_taylor(rng, n, c.max_degree));
    const PolySliceFunction f(n, layers);
    const auto cf = c_map(f);
    r.record("relation", relation_check(f), in);
    r.record("c_polyanalytic", dirac_power(cf, m + 1).is_zero(), in);
    r.record("tau_monogenic", dirac(materialize(tau_map(f))).is_zero(), in);
    const auto scalar = random_multivector(rng, n, 0.4);
    std::vector<TaylorSeries> scaled;
    for (const auto& l : layers) scaled.push_back(l * scalar);
    const PolySliceFunction fs(n, scaled);
    r.record("c_linear", c_map(fs) == cf * scalar, in);
    r.record("tau_linear", tau_map(fs) == tau_map(f) * scalar, in);
  }
  for (int t = 0; t < std::min(c.trials, 5); ++t) {
    const std::string in = label({{"n", n}, {"m", m}, {"trial", t}});
    const int deg = std::min(c.max_degree, 4);
    std::vector<ExactPolynomial> comps;
    for (int k = 0; k <= m; ++k) comps.push_back(materialize(random_appell(rng, n, deg)));
    guarded(r, "project_roundtrip", in, [&] {
      r.record("project_roundtrip", poly_project(axial_compose(comps), m) == comps, in);
    });
    const int vm = std::min(m, 2);
    std::vector<TaylorSeries> layers;
    for (int k = 0; k <= vm; ++k) layers.push_back(random_taylor(rng, n, std::min(c.max_degree, 3), true));
    const PolySliceFunction f(n, layers);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 4; ++i) {
      auto p = random_point(rng, n, 1.0);
      p[1] += 0.5;  // keep away from the real axis
      pts.push_back(std::move(p));
    }
    const auto numeric = global_v(poly_compose(f), vm, pts);
    const auto symbolic = v_power_layers(f, vm);
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto exact = evaluate(symbolic, pts[i]);
      worst = std::max(worst, norm(numeric[i] - exact) / std::max(1.0, norm(exact)));
    }
    r.record_residual("global_v", worst, 1e-8, in);
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"algebra", "appell", "fueter", "elementary", "rkhs", "polyanalytic", "all",
          "operators", "kernel", "bounds", "relation"};
}

VerificationReport run_suite(const std::string& suite, const RunConfig& config) {
  bool known = false;
  for (const auto& s : suite_names()) known = known || s == suite;
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite;
  auto run = [&](const std::string& name, const std::function<void(VerificationReport&)>& body) {
    guarded(report, name, label({{"n", config.n}}), [&] { body(report); });
  };
  if (suite == "algebra" || suite == "all") run("algebra", [&](auto& r) { suite_algebra(config, r); });
  if (suite == "appell" || suite == "all") run("appell", [&](auto& r) { suite_appell(config, r); });
  if (suite == "fueter" || suite == "all") run("fueter", [&](auto& r) { suite_fueter(config, r); });
  if (suite == "elementary" || suite == "all") run("elementary", [&](auto& r) { suite_elementary(config, r); });
  if (suite == "rkhs" || suite == "all") run("rkhs", [&](auto& r) { suite_rkhs(config, r, true, true, true); });
  if (suite == "operators") run("rkhs", [&](auto& r) { suite_rkhs(config, r, true, false, false); });
  if (suite == "kernel") run("rkhs", [&](auto& r) { suite_rkhs(config, r, false, true, false); });
  if (suite == "bounds") run("rkhs", [&](auto& r) { suite_rkhs(config, r, false, false, true); });
  if (suite == "polyanalytic" || suite == "all") run("polyanalytic", [&](auto& r) { suite_polyanalytic(config, r, true); });
  if (suite == "relation") run("polyanalytic", [&](auto& r) { suite_polyanalytic(config, r, false); });
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cliffordlab
