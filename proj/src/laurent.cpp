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

#include "qcv/laurent.hpp"

#include <sstream>

namespace qcv {

bool LaurentPoly::is_one() const {
  return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
  if (coeff_.empty()) throw Error("min_exp of zero polynomial");
  return coeff_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (coeff_.empty()) throw Error("max_exp of zero polynomial");
  return coeff_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = coeff_.find(exp);
  return it == coeff_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::trailing_coeff() const { return coeff(min_exp()); }

Rational LaurentPoly::leading_coeff() const { return coeff(max_exp()); }

void LaurentPoly::add_term(int exp, const Rational& c) {
  if (qcv::is_zero(c)) return;
  auto [it, inserted] = coeff_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (qcv::is_zero(it->second)) coeff_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeff_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeff_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  if (coeff_.empty() || o.coeff_.empty()) return r;
  for (const auto& [e1, c1] : coeff_)
    for (const auto& [e2, c2] : o.coeff_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (qcv::is_zero(c)) return r;
  for (const auto& [e, v] : coeff_) r.coeff_[e] = v * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, v] : coeff_) r.coeff_[e + k] = v;
  return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  Rational acc(0);
  for (const auto& [e, c] : coeff_) {
    if (e < 0 && qcv::is_zero(q0))
      throw PoleAtEvaluationPoint("negative power of q evaluated at q = 0");
    Rational p(1);
    mpz_class num = q0.get_num(), den = q0.get_den();
    if (e >= 0) {
      mpz_class pn, pd;
      mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
      p = Rational(pn, pd);
    } else {
      mpz_class pn, pd;
      mpz_pow_ui(pn.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-e));
      mpz_pow_ui(pd.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-e));
      p = Rational(pn, pd);
    }
    p.canonicalize();
    acc += c * p;
  }
  return acc;
}

Rational LaurentPoly::content() const {
  if (coeff_.empty()) return Rational(0);
  mpz_class g(0), l(1);
  for (const auto& [e, c] : coeff_) {
    (void)e;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest power first, as one writes polynomials
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    Rational c = it->second;
    int e = it->first;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = abs(c);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if ((!a.is_zero() && a.min_exp() < 0) || b.min_exp() < 0)
    throw Error("poly_divmod requires ordinary polynomials");
  LaurentPoly q, r = a;
  int db = b.max_exp();
  Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.max_exp() >= db) {
    int e = r.max_exp() - db;
    Rational c = r.leading_coeff() / lb;
    LaurentPoly t = LaurentPoly::term(e, c);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto strip = [](const LaurentPoly& p) {
    return p.is_zero() ? p : p.shifted(-p.min_exp());
  };
  LaurentPoly x = strip(a), y = strip(b);
  while (!y.is_zero()) {
    LaurentPoly r = poly_divmod(x, y).second;
    x = y;
    y = strip(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(Rational(1) / x.leading_coeff());
}

}  // namespace qcv
