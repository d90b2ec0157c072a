// Copyright 2026 The qcv Authors
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

#include <map>
#include <string>
#include <utility>

#include "qcv/rational.hpp"

namespace qcv {

/// Sparse Laurent polynomial in one variable with rational coefficients.
/// No zero coefficient is ever stored, so structural equality is semantic
/// equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) {
    if (!qcv::is_zero(c)) coeff_[0] = c;
  }
  static LaurentPoly term(int exp, Rational c) {
    LaurentPoly p;
    if (!qcv::is_zero(c)) p.coeff_[exp] = std::move(c);
    return p;
  }
  static LaurentPoly q_power(int exp) { return term(exp, Rational(1)); }
  static LaurentPoly one() { return LaurentPoly(Rational(1)); }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const;
  bool is_term() const { return coeff_.size() == 1; }

  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  const std::map<int, Rational>& coeffs() const { return coeff_; }
  Rational coeff(int exp) const;
  Rational trailing_coeff() const;  // coefficient at min_exp
  Rational leading_coeff() const;   // coefficient at max_exp

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int k) const;  // multiply by q^k

  /// Exact evaluation at q = q0 (q0 != 0 when negative exponents occur).
  Rational eval(const Rational& q0) const;

  /// gcd of numerators over lcm of denominators; positive, 0 for the zero
  /// polynomial. Dividing by it yields coprime integer coefficients.
  Rational content() const;

  std::string str(const std::string& var = "q") const;

 private:
  std::map<int, Rational> coeff_;
  void add_term(int exp, const Rational& c);
};

/// Quotient and remainder of ordinary polynomials (min_exp >= 0 required).
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd of the polynomial parts (q-power factors stripped first).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qcv
