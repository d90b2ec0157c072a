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

#include <string>

#include "qcv/laurent.hpp"

namespace qcv {

/// Element of the field Q(q), stored as numerator / denominator with the
/// canonical normalization: the denominator is an ordinary polynomial with
/// nonzero constant term equal to 1, and shares no polynomial factor with the
/// numerator. Equality is therefore structural, which every higher layer
/// relies on for exact zero tests.
class RatFunc {
 public:
  RatFunc() = default;  // zero
  RatFunc(int c) : num_(LaurentPoly(Rational(c))), den_(LaurentPoly::one()) {}
  explicit RatFunc(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
  explicit RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}
  RatFunc(LaurentPoly num, LaurentPoly den);  // normalizes

  static RatFunc q_power(int k) { return RatFunc(LaurentPoly::q_power(k)); }
  /// q - q^{-1}
  static RatFunc q_comm();

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  /// True when the value is r*q^k (single-term numerator, denominator 1).
  bool is_unit_monomial() const { return !is_zero() && den_.is_one() && num_.is_term(); }
  int unit_exp() const { return num_.min_exp(); }
  Rational unit_coeff() const { return num_.trailing_coeff(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  RatFunc pow(int k) const;

  std::string str(const std::string& var = "q") const;

 private:
  LaurentPoly num_;                   // Laurent numerator
  LaurentPoly den_ = LaurentPoly::one();  // polynomial, trailing coeff 1
};

/// Exact evaluation at q = q0. Throws PoleAtEvaluationPoint when the
/// denominator vanishes at q0 (or q0 = 0 meets a negative power).
Rational eval_at(const RatFunc& a, const Rational& q0);

}  // namespace qcv
