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

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>

namespace cliffordlab {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "p/q" or a (num, den) pair into a canonical rational.
Rational parse_rational(const std::string& text);
Rational make_rational(const std::string& num, const std::string& den);

Rational factorial(unsigned k);
Rational binomial(unsigned k, unsigned s);
Rational int_power(const Rational& base, unsigned e);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* kind = "exact";
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational from_int(long v) { return Rational(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* kind = "approx";
  static bool is_zero(double v) { return v == 0.0; }
  static double to_double(double v) { return v; }
  static double from_int(long v) { return static_cast<double>(v); }
};

template <class S>
concept CliffordScalar = requires(const S& a) {
  { ScalarTraits<S>::is_zero(a) } -> std::same_as<bool>;
  { ScalarTraits<S>::to_double(a) } -> std::same_as<double>;
};

inline Rational to_exact(long v) { return Rational(v); }

}  // namespace cliffordlab
