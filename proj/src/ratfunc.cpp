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

#include "qcv/ratfunc.hpp"

#include <sstream>

namespace qcv {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  int a = num.min_exp();
  int b = den.min_exp();
  LaurentPoly n0 = num.shifted(-a);
  LaurentPoly d0 = den.shifted(-b);
  LaurentPoly g = poly_gcd(n0, d0);
  if (!g.is_one()) {
    n0 = poly_divmod(n0, g).first;
    d0 = poly_divmod(d0, g).first;
  }
  Rational t = d0.trailing_coeff();
  if (t != 1) {
    Rational inv = Rational(1) / t;
    n0 = n0.scaled(inv);
    d0 = d0.scaled(inv);
  }
  num_ = n0.shifted(a - b);
  den_ = d0;
}

RatFunc RatFunc::q_comm() {
  LaurentPoly p = LaurentPoly::q_power(1);
  p -= LaurentPoly::q_power(-1);
  return RatFunc(p);
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    RatFunc r;
    r.num_ = num_ + o.num_;
    return r;
  }
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    RatFunc r;
    r.num_ = num_ * o.num_;
    return r;
  }
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k == 0) return RatFunc(1);
  RatFunc base = k > 0 ? *this : inverse();
  int n = k > 0 ? k : -k;
  RatFunc acc(1);
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_zero()) return "0";
  // push negative powers of the variable into the displayed denominator
  int shift = num_.min_exp() < 0 ? -num_.min_exp() : 0;
  LaurentPoly n = num_.shifted(shift);
  LaurentPoly d = den_.shifted(shift);
  if (d.is_one()) return n.str(var);
  std::ostringstream os;
  os << "(" << n.str(var) << ")/(" << d.str(var) << ")";
  return os.str();
}

Rational eval_at(const RatFunc& a, const Rational& q0) {
  if (qcv::is_zero(q0)) throw PoleAtEvaluationPoint("evaluation at q = 0");
  Rational d = a.den().eval(q0);
  if (qcv::is_zero(d)) throw PoleAtEvaluationPoint("denominator vanishes at q0");
  return a.num().eval(q0) / d;
}

}  // namespace qcv
