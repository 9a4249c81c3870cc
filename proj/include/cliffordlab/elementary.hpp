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

// Axially monogenic EXP, SIN, COS, SINH, COSH obtained by applying the
// Fueter-Sce map to the slice monogenic elementary functions, expanded in
// Clifford-Appell polynomials.

#include <span>
#include <string>

#include "cliffordlab/appell.hpp"

namespace cliffordlab {

enum class ElementaryKind { Exp, Sin, Cos, Sinh, Cosh };

std::string to_string(ElementaryKind kind);
ElementaryKind parse_elementary_kind(const std::string& name);

struct TruncatedMonogenic {
  ElementaryKind kind;
  int n;
  AppellSeries series;
};

/// Appell coefficient of P_k: gamma_n * sigma * pattern_k / k!, with
/// sigma = (-1)^{(n-1)/2} for SIN and COS and 1 otherwise.
Rational elementary_coefficient(ElementaryKind kind, int n, int k);

TruncatedMonogenic truncated_elementary(ElementaryKind kind, int n, int order);

/// gamma_n * sigma * f(x_0) for the classical function f.
double elementary_restriction(ElementaryKind kind, int n, double x0);

/// |gamma_n| e^{|x|}, |gamma_n| sinh(|x|) or |gamma_n| cosh(|x|).
double elementary_bound(ElementaryKind kind, int n, double abs_x);

struct ElementaryValue {
  Multivector<double> value;
  int order;          // truncation K actually used
  double tail_bound;  // certified bound on the omitted terms
};

/// Partial sum of the Appell expansion with K chosen (doubling from 8) so
/// that |gamma_n| e^{|x|} |x|^{K+1}/(K+1)! < tol.
ElementaryValue eval_elementary(ElementaryKind kind, int n, std::span<const double> point, double tol);

/// The function d-bar/2 maps `kind` to, and the sign in front of it.
std::pair<ElementaryKind, int> derivative_partner(ElementaryKind kind);

/// conj_derivative of the materialized order-K truncation equals exactly
/// 2 * sign * partner truncated at K-1.
bool derivative_identity_check(ElementaryKind kind, int n, int order);

/// COSH = (EXP(x) + EXP(-x))/2 and SINH = (EXP(x) - EXP(-x))/2, checked on
/// Appell coefficients and on the materialized polynomials.
bool parity_identity_check(int n, int order);

struct PythagoreanResult {
  AppellSeries trig;        // COS.COS + SIN.SIN
  AppellSeries hyperbolic;  // COSH.COSH - SINH.SINH
  Rational expected;        // gamma_n^2
  bool holds() const;
};

PythagoreanResult pythagorean_sums(int n, int order);
bool pythagorean_check(int n, int order);

}  // namespace cliffordlab
