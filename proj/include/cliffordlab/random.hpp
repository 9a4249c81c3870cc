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

// Seeded generators for property checks. Small numerators and denominators
// keep exact arithmetic cheap.

#include <cstdint>
#include <random>
#include <vector>

#include "cliffordlab/appell.hpp"
#include "cliffordlab/rkhs.hpp"

namespace cliffordlab {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int max_num = 5, int max_den = 4);
/// Each blade is present with the given probability.
ExactMultivector random_multivector(Rng& rng, int n, double density = 0.5);
ExactMultivector random_paravector(Rng& rng, int n);
/// Coefficients up to `degree`; Clifford-valued unless scalar_only.
TaylorSeries random_taylor(Rng& rng, int n, int degree, bool scalar_only = false);
AppellSeries random_appell(Rng& rng, int n, int degree, bool scalar_only = false);
CoefficientFunction random_coefficients(Rng& rng, int n, int support, bool scalar_only = false);
ExactPolynomial random_polynomial(Rng& rng, int n, int degree, int terms, bool scalar_only = false);
std::vector<double> random_point(Rng& rng, int n, double radius);

}  // namespace cliffordlab
