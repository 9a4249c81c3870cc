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

#include "cliffordlab/json_io.hpp"

#include <stdexcept>

namespace cliffordlab {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int read_dim(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer()) malformed("'n' must be an integer");
  const int dim = n.get<int>();
  check_dimension(dim);
  return dim;
}

Blade read_blade(const json& j) {
  const json& b = field(j, "blade");
  if (!b.is_array()) malformed("'blade' must be an array");
  std::vector<int> idx;
  for (const auto& v : b) {
    if (!v.is_number_integer()) malformed("blade indices must be integers");
    idx.push_back(v.get<int>());
  }
  return Blade::from_indices(idx);
}

std::string read_string(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  malformed(std::string("'") + key + "' must be a string");
}

template <class S>
json blade_terms(const Multivector<S>& a, auto&& write_value) {
  json terms = json::array();
  for (const auto& [b, v] : a.components()) {
    json t;
    t["blade"] = b.indices();
    write_value(t, v);
    terms.push_back(std::move(t));
  }
  return terms;
}

template <class Basis>
json series_json(const Series<Basis>& s) {
  json out;
  out["n"] = s.dim();
  out["basis"] = Basis::name;
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

template <class Basis>
Series<Basis> series_from(const json& j) {
  const int n = read_dim(j);
  const json& basis = field(j, "basis");
  if (!basis.is_string() || basis.get<std::string>() != Basis::name) {
    malformed(std::string("expected basis '") + Basis::name + "'");
  }
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) malformed("'coeffs' must be an array");
  std::vector<ExactMultivector> out;
  for (const auto& c : coeffs) {
    out.push_back(exact_multivector_from_json(c));
    if (out.back().dim() != n) malformed("coefficient dimension differs from 'n'");
  }
  return Series<Basis>(n, std::move(out));
}

}  // namespace

json to_json(const Multivector<Rational>& a) {
  json out;
  out["n"] = a.dim();
  out["terms"] = blade_terms(a, [](json& t, const Rational& v) {
    t["num"] = v.get_num().get_str();
    t["den"] = v.get_den().get_str();
  });
  return out;
}

json to_json(const Multivector<double>& a) {
  json out;
  out["n"] = a.dim();
  out["terms"] = blade_terms(a, [](json& t, double v) { t["value"] = v; });
  return out;
}

json to_json(const ExactPolynomial& p) {
  json out;
  out["n"] = p.dim();
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    std::vector<int> exps(m.exps.begin(), m.exps.begin() + p.dim() + 1);
    t["exps"] = exps;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

json to_json(const TaylorSeries& s) { return series_json(s); }
json to_json(const AppellSeries& s) { return series_json(s); }

Multivector<Rational> exact_multivector_from_json(const json& j) {
  const int n = read_dim(j);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("'terms' must be an array");
  Multivector<Rational> out(n);
  for (const auto& t : terms) {
    const Blade b = read_blade(t);
    if (b.bits >> n) malformed("blade index exceeds 'n'");
    out.add(b, make_rational(read_string(t, "num"), read_string(t, "den")));
  }
  return out;
}

Multivector<double> approx_multivector_from_json(const json& j) {
  const int n = read_dim(j);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("'terms' must be an array");
  Multivector<double> out(n);
  for (const auto& t : terms) {
    const Blade b = read_blade(t);
    if (b.bits >> n) malformed("blade index exceeds 'n'");
    const json& v = field(t, "value");
    if (!v.is_number()) malformed("'value' must be a number");
    out.add(b, v.get<double>());
  }
  return out;
}

ExactPolynomial polynomial_from_json(const json& j) {
  const int n = read_dim(j);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("'terms' must be an array");
  ExactPolynomial out(n);
  for (const auto& t : terms) {
    const json& exps = field(t, "exps");
    if (!exps.is_array() || static_cast<int>(exps.size()) != n + 1) malformed("'exps' must have n+1 entries");
    Monomial m;
    for (int i = 0; i <= n; ++i) {
      if (!exps[i].is_number_integer()) malformed("exponents must be integers");
      const int e = exps[i].get<int>();
      if (e < 0 || e > 255) malformed("exponent out of range");
      m.exps[i] = static_cast<std::uint8_t>(e);
    }
    const auto c = exact_multivector_from_json(field(t, "coeff"));
    if (c.dim() != n) malformed("coefficient dimension differs from 'n'");
    out.add_term(m, c);
  }
  return out;
}

TaylorSeries taylor_series_from_json(const json& j) { return series_from<TaylorBasis>(j); }
AppellSeries appell_series_from_json(const json& j) { return series_from<AppellBasis>(j); }

}  // namespace cliffordlab
