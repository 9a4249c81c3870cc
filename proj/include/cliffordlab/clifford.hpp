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

// Real Clifford algebra R_n with generators e_1..e_n, e_i^2 = -1 and
// e_i e_j = -e_j e_i for i != j.

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffordlab/scalar.hpp"

namespace cliffordlab {

/// Largest supported algebra dimension (2^11 blades).
inline constexpr int kMaxDim = 11;

void check_dimension(int n);

/// A basis blade e_A stored as a bitmask; bit (i-1) set means e_i is a factor.
/// Factors are always in ascending order, so the mask is canonical.
struct Blade {
  std::uint32_t bits = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t b) : bits(b) {}

  static Blade from_indices(std::span<const int> indices);
  std::vector<int> indices() const;
  int grade() const { return std::popcount(bits); }

  friend constexpr auto operator<=>(Blade, Blade) = default;
};

/// Sign of e_A e_B = sign * e_{A xor B}: transpositions needed to sort the
/// concatenated factors, times -1 for every repeated generator.
constexpr int blade_product_sign(Blade a, Blade b) {
  std::uint32_t lhs = a.bits >> 1;
  int swaps = 0;
  while (lhs != 0) {
    swaps += std::popcount(lhs & b.bits);
    lhs >>= 1;
  }
  swaps += std::popcount(a.bits & b.bits);
  return (swaps & 1) ? -1 : 1;
}

/// Clifford conjugation sign (-1)^{r(r+1)/2} for a grade-r blade.
constexpr int conjugation_sign(int grade) {
  return ((grade * (grade + 1) / 2) & 1) ? -1 : 1;
}

template <CliffordScalar S>
class Multivector {
 public:
  using Scalar = S;
  using Storage = std::map<Blade, S>;

  explicit Multivector(int n) : n_(n) { check_dimension(n); }

  static Multivector scalar(int n, const S& value) {
    return blade(n, Blade{}, value);
  }
  static Multivector blade(int n, Blade b, const S& value = S(1)) {
    Multivector out(n);
    if (b.bits >> n) throw std::out_of_range("blade index exceeds algebra dimension");
    out.add(b, value);
    return out;
  }
  /// The generator e_i, 1 <= i <= n.
  static Multivector generator(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
    return blade(n, Blade{1u << (i - 1)});
  }

  int dim() const { return n_; }
  const Storage& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  std::size_t size() const { return comps_.size(); }

  S operator[](Blade b) const {
    auto it = comps_.find(b);
    return it == comps_.end() ? S(0) : it->second;
  }

  /// Adds value to the b component, dropping it if the sum cancels.
  void add(Blade b, const S& value) {
    if (ScalarTraits<S>::is_zero(value)) return;
    auto [it, inserted] = comps_.try_emplace(b, value);
    if (!inserted) {
      it->second += value;
      if (ScalarTraits<S>::is_zero(it->second)) comps_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, v] : o.comps_) add(b, v);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, v] : o.comps_) add(b, S(-v));
    return *this;
  }
  Multivector& operator*=(const S& s) {
    if (ScalarTraits<S>::is_zero(s)) {
      comps_.clear();
      return *this;
    }
    for (auto& [b, v] : comps_) v *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= S(-1); }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    return geometric_product(a, b);
  }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.comps_ == b.comps_;
  }

  void check_same(const Multivector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("multivector dimension mismatch");
  }

 private:
  int n_;
  Storage comps_;
};

template <CliffordScalar S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  a.check_same(b);
  Multivector<S> out(a.dim());
  for (const auto& [ba, va] : a.components()) {
    for (const auto& [bb, vb] : b.components()) {
      S prod = va * vb;
      if (blade_product_sign(ba, bb) < 0) prod = -prod;
      out.add(Blade{ba.bits ^ bb.bits}, prod);
    }
  }
  return out;
}

template <CliffordScalar S>
Multivector<S> clifford_conjugate(const Multivector<S>& a) {
  Multivector<S> out(a.dim());
  for (const auto& [b, v] : a.components()) {
    out.add(b, conjugation_sign(b.grade()) < 0 ? S(-v) : S(v));
  }
  return out;
}

template <CliffordScalar S>
S norm_sq(const Multivector<S>& a) {
  S acc(0);
  for (const auto& [b, v] : a.components()) acc += v * v;
  return acc;
}

template <CliffordScalar S>
double norm(const Multivector<S>& a) {
  return std::sqrt(ScalarTraits<S>::to_double(norm_sq(a)));
}

template <CliffordScalar S>
Multivector<S> grade_projection(const Multivector<S>& a, int k) {
  if (k < 0 || k > a.dim()) throw std::out_of_range("grade out of range");
  Multivector<S> out(a.dim());
  for (const auto& [b, v] : a.components()) {
    if (b.grade() == k) out.add(b, v);
  }
  return out;
}

template <CliffordScalar S>
S real_part(const Multivector<S>& a) {
  return a[Blade{}];
}

/// Two-sided inverse when a * conj(a) is a nonzero real scalar (scalars,
/// paravectors, versors). Throws std::domain_error otherwise.
template <CliffordScalar S>
Multivector<S> clifford_inverse(const Multivector<S>& a) {
  const Multivector<S> conj = clifford_conjugate(a);
  const Multivector<S> modulus = a * conj;
  if (modulus.is_zero() || modulus.size() != 1 || modulus.components().begin()->first != Blade{}) {
    throw std::domain_error("Clifford element is not invertible by conjugation");
  }
  const S m = modulus.components().begin()->second;
  return conj * S(S(1) / m);
}

inline Multivector<double> approximate(const Multivector<Rational>& a) {
  Multivector<double> out(a.dim());
  for (const auto& [b, v] : a.components()) out.add(b, v.get_d());
  return out;
}

/// Largest absolute component; the residual measure used by numeric checks.
inline double max_abs_component(const Multivector<double>& a) {
  double m = 0.0;
  for (const auto& [b, v] : a.components()) m = std::max(m, std::abs(v));
  return m;
}

/// x_0 + sum_i x_i e_i.
template <CliffordScalar S>
struct Paravector {
  S x0;
  std::vector<S> vec;

  int dim() const { return static_cast<int>(vec.size()); }

  Multivector<S> to_multivector() const {
    Multivector<S> out = Multivector<S>::scalar(dim(), x0);
    for (int i = 0; i < dim(); ++i) out.add(Blade{1u << i}, vec[i]);
    return out;
  }
  Paravector conj() const {
    Paravector out{x0, vec};
    for (auto& v : out.vec) v = -v;
    return out;
  }
  S norm_sq() const {
    S acc = x0 * x0;
    for (const auto& v : vec) acc += v * v;
    return acc;
  }
};

std::string to_string(const Multivector<Rational>& a);
std::string to_string(const Multivector<double>& a);

}  // namespace cliffordlab
