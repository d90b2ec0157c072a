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

#include "qcv/localized.hpp"
#include "qcv/theorems.hpp"

using namespace qcv;

TEST_CASE("commutation discovery for the distinguished minors") {
  // column algebra: c(Y11) = q^{-1}, self-commutation trivial
  auto dy = dY_normal(2, 1);
  CHECK(dy->scalar(Gen{1, 1}) == RatFunc::q_power(-1));
  CHECK(dy->scalar(Gen{2, 1}) == RatFunc(1));
  // the determinant is central
  for (int t = 1; t <= 2; ++t)
    for (const auto& [g, c] : gl_det(t).scalars()) CHECK(c == RatFunc(1));
}

TEST_CASE("localized multiplication twists by the commutation scalar") {
  auto dy = dY_normal(2, 1);  // host Y[2,1]
  const AlgebraShape ys = y_shape(2, 1);
  LocalizedElement dinv(dy, Element::unit(ys), 1);
  LocalizedElement y11(dy, Element::generator(ys, 1, 1), 0);
  LocalizedElement prod = dinv * y11;
  CHECK(prod == LocalizedElement(dy, Element::generator(ys, 1, 1).scaled(RatFunc::q_power(1)), 1));
}

TEST_CASE("denominator cancellation via cross-multiplication") {
  auto dy = dY_normal(2, 1);
  const AlgebraShape ys = y_shape(2, 1);
  LocalizedElement d(dy, dy->element(), 1);   // d * d^{-1}
  CHECK(d == LocalizedElement(dy, Element::unit(ys), 0));
  LocalizedElement dd(dy, dy->element() * dy->element(), 1);
  CHECK(dd == LocalizedElement(dy, dy->element(), 0));
}

TEST_CASE("embedding at exponent zero is plain multiplication") {
  Sampler rng(3);
  auto dy = dY_normal(3, 2);
  const AlgebraShape ys = y_shape(3, 2);
  for (int k = 0; k < 6; ++k) {
    Element a = rng.next_element(ys, 2, 2), b = rng.next_element(ys, 2, 2);
    CHECK(LocalizedElement(dy, a, 0) * LocalizedElement(dy, b, 0) ==
          LocalizedElement(dy, a * b, 0));
  }
}

TEST_CASE("localized multiplication is associative") {
  Sampler rng(14);
  auto dz = dZ_normal(2, 3);
  const AlgebraShape zs = z_shape(2, 3);
  for (int k = 0; k < 6; ++k) {
    LocalizedElement u(dz, rng.next_element(zs, 2, 2), rng.next(3));
    LocalizedElement v(dz, rng.next_element(zs, 2, 2), rng.next(3));
    LocalizedElement w(dz, rng.next_element(zs, 2, 2), rng.next(3));
    CHECK((u * v) * w == u * (v * w));
  }
}

TEST_CASE("host mismatch is rejected") {
  auto dy = dY_normal(2, 1);
  auto dz = dZ_normal(1, 2);
  LocalizedElement a(dy, Element::unit(y_shape(2, 1)), 0);
  LocalizedElement b(dz, Element::unit(z_shape(1, 2)), 0);
  CHECK_THROWS_AS(a * b, HostMismatch);
}

TEST_CASE("inj maps on generators and on the inverted minors") {
  // T11 -> Z11
  LocalizedElement z = inj_gl_to_Z(GLElement::generator(1, 1, 1), 2);
  CHECK(z == LocalizedElement(dZ_normal(1, 2), Element::generator(z_shape(1, 2), 1, 1), 0));
  // at (n,t) = (3,2): T11 -> Y21
  LocalizedElement y = inj_gl_to_Y(GLElement::generator(2, 1, 1), 3);
  CHECK(y == LocalizedElement(dY_normal(3, 2), Element::generator(y_shape(3, 2), 2, 1), 0));
  // the determinant goes to the distinguished minor, inverses included
  for (int n = 2; n <= 3; ++n)
    for (int t = 1; t < n; ++t) {
      const AlgebraShape zs = z_shape(t, n);
      CHECK(inj_gl_to_Z(GLElement::det(t), n) ==
            LocalizedElement(dZ_normal(t, n), quantum_minor(zs, lower_left_minor(zs, t)), 0));
      CHECK(inj_gl_to_Z(GLElement::det_inverse(t), n) ==
            LocalizedElement(dZ_normal(t, n), Element::unit(zs), 1));
      const AlgebraShape ys = y_shape(n, t);
      CHECK(inj_gl_to_Y(GLElement::det(t), n) ==
            LocalizedElement(dY_normal(n, t), quantum_minor(ys, lower_left_minor(ys, t)), 0));
    }
}

TEST_CASE("embeddings into the localized image model are multiplicative") {
  Sampler rng(8);
  const int n = 2, t = 1;
  const AlgebraShape ys = y_shape(n, t);
  for (int k = 0; k < 5; ++k) {
    Element a = rng.next_element(ys, 2, 2), b = rng.next_element(ys, 2, 2);
    LocImage la = inj_Y_to_locimage(LocalizedElement(dY_normal(n, t), a, 0), n);
    LocImage lb = inj_Y_to_locimage(LocalizedElement(dY_normal(n, t), b, 0), n);
    LocImage lab = inj_Y_to_locimage(LocalizedElement(dY_normal(n, t), a * b, 0), n);
    CHECK((la * lb).value() == lab.value());
    CHECK((la * lb).witness() == lab.witness());
  }
}

TEST_CASE("inverse minor pair is a localized coinvariant") {
  for (int r = 1; r <= 2; ++r) {
    const int n = 2, t = 1;
    TensorElement v(vo_factors(n, t), {r, r});
    v.add_term({Monomial::one(), Monomial::one()}, RatFunc(1));
    CHECK(is_coinvariant(v));
  }
}

TEST_CASE("jstar of the unit is the unit pair") {
  const int n = 2, t = 1;
  MGlSum w = j_star(TensorElement::unit(vo_factors(n, t)));
  REQUIRE(w.size() == 1);
  CHECK(w[0].first.value() == TensorElement::unit(vo_factors(n, t)));
  CHECK(w[0].second == GLElement::unit(t));
}

TEST_CASE("istar on simple sums") {
  const int n = 2, t = 1;
  // 1 (x) 1 passes through
  LocImage one(LocalizedElement(dX_normal(n, t), Element::unit(x_shape(n, n)), 0), t);
  TensorElement v = i_star({{one, GLElement::unit(t)}}, n, t);
  CHECK(v == TensorElement::unit(vo_factors(n, t)));
  // x_{ij} (x) 1 maps to the image of the generator
  LocImage x12(LocalizedElement(dX_normal(n, t), Element::generator(x_shape(n, n), 1, 2), 0), t);
  CHECK(i_star({{x12, GLElement::unit(t)}}, n, t) == x12.value());
  // 1 (x) det lands in the right factor
  TensorElement vd = i_star({{one, GLElement::det(t)}}, n, t);
  TensorElement expected(vo_factors(n, t));
  const AlgebraShape zs = z_shape(t, n);
  const Element dz = quantum_minor(zs, lower_left_minor(zs, t));
  for (const auto& [m, c] : dz.terms()) expected.add_term({Monomial::one(), m}, c);
  CHECK(vd == expected);
}

TEST_CASE("jstar is a right inverse of istar on generators and fractions") {
  for (auto [n, t] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}}) {
    SuiteReport rep = verify_istar_jstar_identity(n, t, 4, SuiteOptions{});
    CHECK(rep.pass);
  }
}

TEST_CASE("xi coinvariants in the localized model") {
  SuiteReport rep = verify_xi_coinvariants(2, 1, 10, SuiteOptions{});
  CHECK(rep.pass);
}
