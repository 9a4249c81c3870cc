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

#pragma once

// JSON wire formats.
//   Multivector: {"n": int, "terms": [{"blade": [i...], "num": "p", "den": "q"}]}
//                (approximate kind: "value": float instead of num/den)
//   Polynomial:  {"n": int, "terms": [{"exps": [e_0..e_n], "coeff": <Multivector>}]}
//   Series:      {"n": int, "basis": "taylor"|"appell", "coeffs": [<Multivector>...]}
// Term order is the canonical storage order, so serialization is
// deterministic.

#include <json.hpp>

#include "cliffordlab/appell.hpp"

namespace cliffordlab {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cliffordlab/v1";

json to_json(const Multivector<Rational>& a);
json to_json(const Multivector<double>& a);
json to_json(const ExactPolynomial& p);
json to_json(const TaylorSeries& s);
json to_json(const AppellSeries& s);

/// Exact multivector; throws std::invalid_argument on malformed input.
Multivector<Rational> exact_multivector_from_json(const json& j);
Multivector<double> approx_multivector_from_json(const json& j);
ExactPolynomial polynomial_from_json(const json& j);
TaylorSeries taylor_series_from_json(const json& j);
AppellSeries appell_series_from_json(const json& j);

}  // namespace cliffordlab
