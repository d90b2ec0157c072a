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

#include "qcv/hopf.hpp"
#include "qcv/theorems.hpp"

using namespace qcv;

namespace {

TensorElement gl_pair(int t, const Element& a, const Element& b) {
  std::vector<FactorSpec> ff{gl_factor(t), gl_factor(t)};
  return TensorElement::pure(ff, {a, b});
}

}  // namespace

TEST_CASE("comultiplication of a generator at t=2") {
  GLElement h = GLElement::generator(2, 1, 1);
  const AlgebraShape ts = gl_shape(2);
  TensorElement expected = gl_pair(2, Element::generator(ts, 1, 1), Element::generator(ts, 1, 1)) +
                           gl_pair(2, Element::generator(ts, 1, 2), Element::generator(ts, 2, 1));
  CHECK(gl_comultiply(h) == expected);
}

TEST_CASE("the determinant is group-like") {
  for (int t = 1; t <= 3; ++t) {
    const Element det = gl_det(t).element();
    CHECK(gl_comultiply(GLElement::det(t)) == gl_pair(t, det, det));
  }
}

TEST_CASE("comultiplication of the unit") {
  CHECK(gl_comultiply(GLElement::unit(2)) ==
        gl_pair(2, Element::unit(gl_shape(2)), Element::unit(gl_shape(2))));
}

TEST_CASE("counit values") {
  CHECK(gl_counit(GLElement::generator(2, 1, 2)).is_zero());
  CHECK(gl_counit(GLElement::generator(2, 2, 2)) == RatFunc(1));
  CHECK(gl_counit(GLElement::det(3)) == RatFunc(1));
  CHECK(gl_counit(GLElement::det_inverse(3)) == RatFunc(1));
  CHECK(gl_counit(GLElement::unit(2)) == RatFunc(1));
}

TEST_CASE("antipode at t=1 inverts the generator") {
  GLElement s = antipode(GLElement::generator(1, 1, 1));
  CHECK(s == GLElement::det_inverse(1));
}

TEST_CASE("antipode of the determinant is its inverse") {
  for (int t = 1; t <= 3; ++t) {
    CHECK(antipode(GLElement::det(t)) == GLElement::det_inverse(t));
    CHECK(antipode(GLElement::det_inverse(t)) == GLElement::det(t));
  }
}

TEST_CASE("antipode of the off-diagonal generator at t=2") {
  GLElement expected(Element::generator(gl_shape(2), 1, 2).scaled(-RatFunc::q_power(-1)), 1);
  CHECK(antipode(GLElement::generator(2, 1, 2)) == expected);
}

TEST_CASE("inverse antipode examples") {
  CHECK(antipode_inverse(GLElement::generator(1, 1, 1)) == GLElement::det_inverse(1));
  CHECK(antipode_inverse(GLElement::det(2)) == GLElement::det_inverse(2));
  GLElement g = GLElement::generator(2, 1, 2);
  CHECK(antipode_inverse(antipode(g)) == g);
}

TEST_CASE("antipode inverse holds on all generators up to t=3") {
  for (int t = 1; t <= 3; ++t) CHECK_NOTHROW(check_antipode_inverse(t));
}

TEST_CASE("hopf axiom suite passes for t = 1, 2") {
  for (int t = 1; t <= 2; ++t) {
    SuiteReport rep = verify_hopf_axioms(t);
    CHECK(rep.pass);
  }
}

TEST_CASE("torus projection") {
  CHECK(torus_project(GLElement::generator(2, 1, 1)) == TorusPoly::term(1, RatFunc(1)));
  CHECK(torus_project(GLElement::generator(2, 1, 2)).is_zero());
  for (int t = 1; t <= 3; ++t) {
    CHECK(torus_project(GLElement::det(t)) == TorusPoly::term(t, RatFunc(1)));
    CHECK(torus_project(GLElement::det_inverse(t)) == TorusPoly::term(-t, RatFunc(1)));
  }
}

TEST_CASE("canonical form strips determinant factors") {
  for (int t = 1; t <= 2; ++t) {
    const Element det = gl_det(t).element();
    GLElement raw(det * det * Element::generator(gl_shape(t), 1, 1), 2);
    GLElement can = raw.canonical();
    CHECK(can.denom_exp() == 0);
    CHECK(can.num() == Element::generator(gl_shape(t), 1, 1));
    CHECK(raw == can);
  }
}

TEST_CASE("equality is decided by cross-multiplication") {
  const int t = 2;
  const Element det = gl_det(t).element();
  GLElement a(det, 1);  // det * det^{-1}
  CHECK(a == GLElement::unit(t));
  GLElement b(det * det, 1);
  CHECK(b == GLElement::det(t));
  CHECK(a != GLElement::det(t));
}

TEST_CASE("scalar detection") {
  CHECK(GLElement::unit(2).scaled(RatFunc::q_power(3)).is_scalar());
  CHECK(GLElement(gl_det(2).element(), 1).is_scalar());
  CHECK_FALSE(GLElement::generator(2, 1, 1).is_scalar());
  CHECK(GLElement::zero(2).is_scalar());
}
