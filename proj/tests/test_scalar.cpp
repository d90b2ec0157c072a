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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcv/ratfunc.hpp"
#include "qcv/theorems.hpp"

using namespace qcv;

namespace {

RatFunc qp(int k) { return RatFunc::q_power(k); }

RatFunc random_ratfunc(Sampler& rng) {
  LaurentPoly num, den;
  int nt = 1 + rng.next(3);
  for (int i = 0; i < nt; ++i)
    num += LaurentPoly::term(rng.next(7) - 3, rat(rng.next(9) - 4));
  int dt = 1 + rng.next(2);
  for (int i = 0; i < dt; ++i)
    den += LaurentPoly::term(rng.next(4), rat(rng.next(7) - 3));
  if (den.is_zero()) den = LaurentPoly::one();
  return RatFunc(num, den);
}

}  // namespace

TEST_CASE("inverse pair q * q^-1") { CHECK(qp(1) * qp(-1) == RatFunc(1)); }

TEST_CASE("polynomial factorization (q^2-1)/(q-1)") {
  LaurentPoly num = LaurentPoly::q_power(2);
  num -= LaurentPoly::one();
  LaurentPoly den = LaurentPoly::q_power(1);
  den -= LaurentPoly::one();
  RatFunc expected(LaurentPoly::q_power(1) + LaurentPoly::one());
  CHECK(RatFunc(num, den) == expected);
}

TEST_CASE("sign and power rule (-q)^3") {
  RatFunc mq = -qp(1);
  CHECK(mq * mq * mq == -qp(3));
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(LaurentPoly::one(), LaurentPoly()), DivisionByZero);
}

TEST_CASE("normalization is canonical and idempotent") {
  // build (q^2 - q) / (q^3 - q^2) = 1/q in two different raw forms
  LaurentPoly n1 = LaurentPoly::q_power(2);
  n1 -= LaurentPoly::q_power(1);
  LaurentPoly d1 = LaurentPoly::q_power(3);
  d1 -= LaurentPoly::q_power(2);
  RatFunc a(n1, d1);
  CHECK(a == qp(-1));
  // renormalizing the stored pair changes nothing
  RatFunc b(a.num(), a.den());
  CHECK(b == a);
  // denominator invariant: polynomial with unit trailing coefficient
  CHECK(a.den().is_one());
  RatFunc c(LaurentPoly::one(), d1);
  CHECK(c.den().min_exp() == 0);
  CHECK(c.den().trailing_coeff() == 1);
}

TEST_CASE("rendering uses cleared denominators") {
  RatFunc v = qp(1) - qp(-1);
  CHECK(v.str() == "(q^2 - 1)/(q)");
  CHECK(RatFunc(1).str() == "1");
  CHECK((-RatFunc(1)).str() == "-1");
}

TEST_CASE("eval_at substitutes exactly") {
  CHECK(eval_at(qp(1) - qp(-1), rat(2)) == rat(3, 2));
  Sampler rng(7);
  for (int i = 0; i < 20; ++i) {
    Rational q0 = rat(1 + rng.next(5), 1 + rng.next(5));
    CHECK(eval_at(RatFunc(1), q0) == rat(1));
  }
}

TEST_CASE("eval_at reports poles") {
  LaurentPoly den = LaurentPoly::q_power(1);
  den -= LaurentPoly::one();
  RatFunc f(LaurentPoly::one(), den);  // 1/(q-1)
  CHECK_THROWS_AS(eval_at(f, rat(1)), PoleAtEvaluationPoint);
  CHECK_THROWS_AS(eval_at(qp(-1), rat(0)), PoleAtEvaluationPoint);
}

TEST_CASE("field axioms on randomized triples") {
  Sampler rng(42);
  for (int i = 0; i < 40; ++i) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == RatFunc());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RatFunc(1));
      CHECK(a / a == RatFunc(1));
    }
  }
}

TEST_CASE("eval_at is a ring homomorphism where defined") {
  Sampler rng(11);
  for (int i = 0; i < 30; ++i) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    Rational q0 = rat(2 + rng.next(4), 1 + rng.next(3));
    try {
      Rational ea = eval_at(a, q0), eb = eval_at(b, q0);
      CHECK(eval_at(a * b, q0) == ea * eb);
      CHECK(eval_at(a + b, q0) == ea + eb);
    } catch (const PoleAtEvaluationPoint&) {
      // the sampled point hit a pole; nothing to compare
    }
  }
}

TEST_CASE("unit monomial recognition") {
  CHECK(qp(3).is_unit_monomial());
  CHECK((qp(-2) * RatFunc(rat(5, 3))).is_unit_monomial());
  CHECK_FALSE((qp(1) + RatFunc(1)).is_unit_monomial());
  CHECK_FALSE(RatFunc().is_unit_monomial());
}
