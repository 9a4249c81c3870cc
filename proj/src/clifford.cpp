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

#include "cliffordlab/clifford.hpp"

#include <cstdio>

namespace cliffordlab {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("algebra dimension must lie in [1, " + std::to_string(kMaxDim) +
                                "], got " + std::to_string(n));
  }
}

Blade Blade::from_indices(std::span<const int> indices) {
  std::uint32_t bits = 0;
  int previous = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDim) throw std::out_of_range("blade index out of range");
    if (i <= previous) throw std::invalid_argument("blade indices must be strictly ascending");
    bits |= 1u << (i - 1);
    previous = i;
  }
  return Blade{bits};
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (bits & (1u << i)) out.push_back(i + 1);
  return out;
}

namespace {

std::string blade_label(Blade b) {
  const auto idx = b.indices();
  bool compact = true;
  for (int i : idx) compact = compact && i < 10;
  std::string out = "e";
  if (!compact) out += "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (!compact && k > 0) out += ",";
    out += std::to_string(idx[k]);
  }
  if (!compact) out += ")";
  return out;
}

template <class S>
std::string render(const Multivector<S>& a, auto&& format_abs, auto&& is_negative, auto&& is_one) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, v] : a.components()) {
    const bool neg = is_negative(v);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (b.bits == 0) {
      out += format_abs(v);
    } else {
      if (!is_one(v)) out += format_abs(v) + " ";
      out += blade_label(b);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Multivector<Rational>& a) {
  return render(
      a, [](const Rational& v) { return Rational(abs(v)).get_str(); },
      [](const Rational& v) { return sgn(v) < 0; }, [](const Rational& v) { return abs(v) == 1; });
}

std::string to_string(const Multivector<double>& a) {
  return render(
      a,
      [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", std::abs(v));
        return std::string(buf);
      },
      [](double v) { return v < 0; }, [](double v) { return std::abs(v) == 1.0; });
}

}  // namespace cliffordlab
