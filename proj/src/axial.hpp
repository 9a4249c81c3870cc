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

// Axial forms A(x_0, r) + xv * B(x_0, r) with r = |xv|^2 and xv the vector
// part of the paravector variable. Powers of x and conj(x) and the
// Clifford-Appell polynomials live in this commutative ring, which keeps
// their construction cheap before expansion into monomials.

#include <map>
#include <span>
#include <utility>

#include "cliffordlab/polynomial.hpp"

namespace cliffordlab::detail {

struct AxialForm {
  using Part = std::map<std::pair<int, int>, Rational>;  // (x_0 power, r power)
  Part a;
  Part b;

  static AxialForm one();
  /// x_0 + sign * xv
  static AxialForm variable(int sign);

  AxialForm& operator+=(const AxialForm& o);
  AxialForm& operator*=(const Rational& s);
  friend AxialForm operator*(const AxialForm& p, const AxialForm& q);

  ExactPolynomial expand(int n) const;
  Multivector<Rational> evaluate(int n, std::span<const Rational> point) const;
};

/// x^k, conj(x)^k and P_k^n as axial forms; cached.
const AxialForm& axial_power(int k, int sign);
const AxialForm& axial_appell(int n, int k);

/// Expanded polynomials, cached per (n, k).
const ExactPolynomial& cached_power(int n, int k);
const ExactPolynomial& cached_appell(int n, int k);

}  // namespace cliffordlab::detail
