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

#include "cliffordlab/scalar.hpp"

#include <stdexcept>

namespace cliffordlab {

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpz_class parse_integer(const std::string& s) {
  if (!is_integer_text(s)) throw std::invalid_argument("malformed integer: '" + s + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

// Accepts "p", "p/q" and finite decimals such as "-0.125".
Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    return make_rational(text.substr(0, slash), text.substr(slash + 1));
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty() || !is_integer_text(frac) || frac[0] == '-' || frac[0] == '+') {
      throw std::invalid_argument("malformed decimal: '" + text + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational frac_part(mpz_class(frac, 10), scale);
    frac_part.canonicalize();
    Rational out(parse_integer(whole));
    return negative ? Rational(out - frac_part) : Rational(out + frac_part);
  }
  return Rational(parse_integer(text));
}

Rational make_rational(const std::string& num, const std::string& den) {
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational out(parse_integer(num), d);
  out.canonicalize();
  return out;
}

Rational factorial(unsigned k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return Rational(out);
}

Rational binomial(unsigned k, unsigned s) {
  if (s > k) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), k, s);
  return Rational(out);
}

Rational int_power(const Rational& base, unsigned e) {
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

}  // namespace cliffordlab
