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

// cliffordlab command-line front end.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cliffordlab/elementary.hpp"
#include "cliffordlab/fueter.hpp"
#include "cliffordlab/json_io.hpp"
#include "cliffordlab/polyanalytic.hpp"
#include "cliffordlab/random.hpp"
#include "cliffordlab/rkhs.hpp"
#include "cliffordlab/verify.hpp"

namespace {

using namespace cliffordlab;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json header(const std::string& command) {
  json out;
  out["schema"] = kSchema;
  out["command"] = command;
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::vector<double> parse_point(const std::string& text, int n, const char* name) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed coordinate in --") + name + ": '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw UsageError(std::string("malformed coordinate in --") + name + ": '" + item + "'");
    }
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) != n + 1) {
    throw UsageError(std::string("--") + name + " needs " + std::to_string(n + 1) + " comma-separated coordinates");
  }
  return out;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "'");
}

int print_polynomial(const std::string& command, json doc, const ExactPolynomial& p, const std::string& format) {
  check_format(format, {"json", "text"});
  if (format == "text") {
    std::cout << to_string(p) << '\n';
  } else {
    doc["polynomial"] = to_json(p);
    emit(doc);
  }
  (void)command;
  return kPass;
}

int print_report(const VerificationReport& report, const RunConfig& config, bool timing) {
  emit(report.to_json(config, timing));
  return report.passed() ? kPass : kFail;
}

// Re-serializes every embedded payload after parsing it, leaving the rest
// of the document untouched.
json roundtrip(json doc) {
  if (doc.contains("polynomial")) doc["polynomial"] = to_json(polynomial_from_json(doc["polynomial"]));
  if (doc.contains("series")) {
    const auto& s = doc["series"];
    doc["series"] = s.value("basis", "") == "taylor" ? to_json(taylor_series_from_json(s))
                                                     : to_json(appell_series_from_json(s));
  }
  if (doc.contains("value") && doc["value"].is_object()) {
    doc["value"] = to_json(approx_multivector_from_json(doc["value"]));
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliffordlab: Clifford-Appell polynomials, the Fueter-Sce map and related identities"};
  app.require_subcommand(1);
  std::function<int()> action;

  RunConfig config;
  try {
    config = RunConfig::with_env_defaults();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  int n = 3;
  std::string format = "json";

  // appell gen
  auto* appell = app.add_subcommand("appell", "Clifford-Appell polynomials");
  appell->require_subcommand(1);
  int k = 0;
  auto* appell_gen = appell->add_subcommand("gen", "Generate P_k^n");
  appell_gen->add_option("--n", n, "odd dimension")->required();
  appell_gen->add_option("--k", k, "degree")->required();
  appell_gen->add_option("--format", format, "json|text");
  appell_gen->callback([&] {
    action = [&] {
      json doc = header("appell gen");
      doc["n"] = n;
      doc["k"] = k;
      return print_polynomial("appell gen", doc, appell_polynomial(n, k), format);
    };
  });

  // fueter apply | diagram | weights
  auto* fueter = app.add_subcommand("fueter", "Fueter-Sce map");
  fueter->require_subcommand(1);
  int power = 0;
  bool check = false;
  auto* fueter_apply = fueter->add_subcommand("apply", "Apply the Fueter-Sce map to x^power");
  fueter_apply->add_option("--n", n)->required();
  fueter_apply->add_option("--power", power)->required();
  fueter_apply->add_flag("--check", check, "compare with the iterated Laplacian");
  fueter_apply->add_option("--format", format, "json|text");
  fueter_apply->callback([&] {
    action = [&] {
      const auto p = fueter_sce_monomial(n, power);
      json doc = header("fueter apply");
      doc["n"] = n;
      doc["power"] = power;
      bool ok = true;
      if (check) {
        ok = laplacian_power(paravector_power<Rational>(n, power), (n - 1) / 2) == p;
        doc["check"] = {{"passed", ok}};
      }
      const int rc = print_polynomial("fueter apply", doc, p, format);
      if (check && format == "text") std::cout << (ok ? "check: pass" : "check: FAIL") << '\n';
      return ok ? rc : kFail;
    };
  });

  int degree = 7;
  auto* fueter_diagram = fueter->add_subcommand("diagram", "Check the Fueter-Sce / GCK diagram on random data");
  fueter_diagram->add_option("--n", n)->required();
  fueter_diagram->add_option("--degree", degree)->required();
  fueter_diagram->add_option("--trials", config.trials);
  fueter_diagram->add_option("--seed", config.seed);
  fueter_diagram->callback([&] {
    action = [&] {
      config.n = n;
      config.max_degree = degree;
      config.validate();
      Rng rng(config.seed);
      VerificationReport report;
      report.suite = "diagram";
      for (int t = 0; t < config.trials; ++t) {
        report.record("diagram", diagram_check(n, random_taylor(rng, n, degree)), "trial=" + std::to_string(t));
      }
      return print_report(report, config, false);
    };
  });

  std::string space = "hardy";
  int upto = 10;
  auto* fueter_weights = fueter->add_subcommand("weights", "Tabulate c_k and transported b_k");
  fueter_weights->add_option("--space", space, "hardy|bergman|dirichlet|fock")->required();
  fueter_weights->add_option("--n", n)->required();
  fueter_weights->add_option("--upto", upto);
  fueter_weights->add_option("--format", format, "csv|json");
  fueter_weights->callback([&] {
    action = [&] {
      check_format(format, {"csv", "json"});
      if (upto < 0) throw UsageError("--upto must be nonnegative");
      const auto c = WeightSequence::builtin(parse_weight_kind(space));
      const auto b = transport_weights(n, c);
      if (format == "csv") {
        std::cout << "k,c_k,b_k\n";
        for (int i = 0; i <= upto; ++i) std::cout << i << ',' << c(i).get_str() << ',' << b(i).get_str() << '\n';
        return kPass;
      }
      json doc = header("fueter weights");
      doc["n"] = n;
      doc["space"] = space;
      json rows = json::array();
      for (int i = 0; i <= upto; ++i) rows.push_back({{"k", i}, {"c", c(i).get_str()}, {"b", b(i).get_str()}});
      doc["weights"] = std::move(rows);
      emit(doc);
      return kPass;
    };
  });

  // eval
  std::string fn = "exp", point_text;
  double tol = config.tol;
  auto* eval = app.add_subcommand("eval", "Evaluate a monogenic elementary function");
  eval->add_option("--fn", fn, "exp|sin|cos|sinh|cosh")->required();
  eval->add_option("--n", n)->required();
  eval->add_option("--point", point_text, "x0,x1,...,xn")->required();
  eval->add_option("--tol", tol);
  eval->add_option("--format", format, "json|text");
  eval->callback([&] {
    action = [&] {
      check_format(format, {"json", "text"});
      check_odd_dimension(n);
      const auto kind = parse_elementary_kind(fn);
      const auto pt = parse_point(point_text, n, "point");
      const auto v = eval_elementary(kind, n, pt, tol);
      if (format == "text") {
        std::cout << to_string(v.value) << "\nK=" << v.order << " tail_bound=" << v.tail_bound << '\n';
        return kPass;
      }
      json doc = header("eval");
      doc["fn"] = fn;
      doc["n"] = n;
      doc["point"] = pt;
      doc["tol"] = tol;
      doc["value"] = to_json(v.value);
      doc["order"] = v.order;
      doc["tail_bound"] = v.tail_bound;
      emit(doc);
      return kPass;
    };
  });

  // kernel eval
  std::string x_text, y_text;
  int trunc = 64;
  auto* kernel = app.add_subcommand("kernel", "Reproducing kernels");
  kernel->require_subcommand(1);
  auto* kernel_ev = kernel->add_subcommand("eval", "Evaluate the truncated kernel K(x, y)");
  kernel_ev->add_option("--space", space, "fock|hardy")->required();
  kernel_ev->add_option("--n", n)->required();
  kernel_ev->add_option("--x", x_text)->required();
  kernel_ev->add_option("--y", y_text)->required();
  kernel_ev->add_option("--trunc", trunc);
  kernel_ev->callback([&] {
    action = [&] {
      check_odd_dimension(n);
      if (space != "fock" && space != "hardy") throw UsageError("--space must be fock or hardy");
      const auto cfg = space == "fock" ? SpaceConfig::fock(n) : SpaceConfig::hardy(n);
      const auto x = parse_point(x_text, n, "x");
      const auto y = parse_point(y_text, n, "y");
      const auto kv = kernel_eval(cfg, x, y, trunc);
      json doc = header("kernel eval");
      doc["space"] = space;
      doc["n"] = n;
      doc["x"] = x;
      doc["y"] = y;
      doc["order"] = trunc;
      doc["value"] = to_json(kv.value);
      doc["tail_bound"] = kv.tail_bound;
      emit(doc);
      return kPass;
    };
  });

  // rkhs verify
  std::string suite = "all";
  auto* rkhs = app.add_subcommand("rkhs", "Hilbert module checks");
  rkhs->require_subcommand(1);
  auto* rkhs_verify = rkhs->add_subcommand("verify", "Run operator, kernel or bound suites");
  rkhs_verify->add_option("--suite", suite, "operators|kernel|bounds|all");
  rkhs_verify->add_option("--n", n)->required();
  rkhs_verify->add_option("--trials", config.trials);
  rkhs_verify->add_option("--seed", config.seed);
  rkhs_verify->callback([&] {
    action = [&] {
      if (suite != "operators" && suite != "kernel" && suite != "bounds" && suite != "all") {
        throw UsageError("--suite must be operators, kernel, bounds or all");
      }
      config.n = n;
      return print_report(run_suite(suite == "all" ? "rkhs" : suite, config), config, false);
    };
  });

  // poly cmap | tau | appell | verify
  int m = 0, kk = 0, j = 0, s = 0;
  auto* poly = app.add_subcommand("poly", "Polyanalytic maps");
  poly->require_subcommand(1);
  auto* poly_cmap = poly->add_subcommand("cmap", "C_{m+1} on xbar^k x^j");
  auto* poly_tau = poly->add_subcommand("tau", "tau_{m+1} on xbar^k x^j");
  for (auto* sub : {poly_cmap, poly_tau}) {
    sub->add_option("--n", n)->required();
    sub->add_option("--m", m)->required();
    sub->add_option("--k", kk)->required();
    sub->add_option("--j", j)->required();
    sub->add_option("--format", format, "json|text");
  }
  poly_cmap->callback([&] {
    action = [&] {
      json doc = header("poly cmap");
      doc.update({{"n", n}, {"m", m}, {"k", kk}, {"j", j}});
      return print_polynomial("poly cmap", doc, c_map_monomial(n, m, kk, j), format);
    };
  });
  poly_tau->callback([&] {
    action = [&] {
      json doc = header("poly tau");
      doc.update({{"n", n}, {"m", m}, {"k", kk}, {"j", j}});
      return print_polynomial("poly tau", doc, tau_map_monomial(n, m, kk, j), format);
    };
  });
  auto* poly_appell = poly->add_subcommand("appell", "A_{k,s}^n = x_0^k P_s^n");
  poly_appell->add_option("--n", n)->required();
  poly_appell->add_option("--k", kk)->required();
  poly_appell->add_option("--s", s)->required();
  poly_appell->add_option("--format", format, "json|text");
  poly_appell->callback([&] {
    action = [&] {
      check_odd_dimension(n);
      json doc = header("poly appell");
      doc.update({{"n", n}, {"k", kk}, {"s", s}});
      return print_polynomial("poly appell", doc, appell_poly(kk, s, n), format);
    };
  });
  bool relation = false;
  auto* poly_verify = poly->add_subcommand("verify", "Polyanalytic identity suites");
  poly_verify->add_flag("--relation", relation, "only the relation between C and tau");
  poly_verify->add_option("--n", n)->required();
  poly_verify->add_option("--m", config.m);
  poly_verify->add_option("--degree", config.max_degree);
  poly_verify->add_option("--trials", config.trials);
  poly_verify->add_option("--seed", config.seed);
  poly_verify->callback([&] {
    action = [&] {
      config.n = n;
      return print_report(run_suite(relation ? "relation" : "polyanalytic", config), config, false);
    };
  });

  // verify
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", suite, "algebra|appell|fueter|elementary|rkhs|polyanalytic|all")->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--max-k", config.max_k);
  verify->add_option("--max-degree", config.max_degree);
  verify->add_option("--m", config.m);
  verify->add_option("--trials", config.trials);
  verify->add_option("--seed", config.seed);
  verify->add_option("--tol", config.tol);
  verify->add_flag("--timing", timing, "include wall time in the report");
  verify->callback([&] {
    action = [&] {
      static const std::vector<std::string> allowed{"algebra", "appell",       "fueter", "elementary",
                                                    "rkhs",    "polyanalytic", "all"};
      if (std::find(allowed.begin(), allowed.end(), suite) == allowed.end()) {
        throw UsageError("unknown suite '" + suite + "'");
      }
      config.n = n;
      return print_report(run_suite(suite, config), config, timing);
    };
  });

  // roundtrip
  std::string input;
  auto* rt = app.add_subcommand("roundtrip", "Parse a JSON document and re-serialize its payload");
  rt->add_option("--input", input, "file path, - for stdin")->required();
  rt->callback([&] {
    action = [&] {
      json doc;
      try {
        if (input == "-") {
          doc = json::parse(std::cin);
        } else {
          std::ifstream in(input);
          if (!in) throw UsageError("cannot open '" + input + "'");
          doc = json::parse(in);
        }
      } catch (const json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
      }
      emit(roundtrip(std::move(doc)));
      return kPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
