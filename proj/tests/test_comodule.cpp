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

#include "qcv/comodule.hpp"
#include "qcv/localized.hpp"
#include "qcv/theorems.hpp"

using namespace qcv;

namespace {

// the (2,1,2) and (2,2,2) stages used throughout
const AlgebraShape X22 = x_shape(2, 2);

TensorElement pure_yz(int m, int t, int n, const Element& y, const Element& z) {
  std::vector<FactorSpec> vf{plain_factor(y_shape(m, t)), plain_factor(z_shape(t, n))};
  return TensorElement::pure(vf, {y, z});
}

}  // namespace

TEST_CASE("theta on generators") {
  TensorElement img = theta_star(Element::generator(X22, 1, 2), 2);
  TensorElement expected =
      pure_yz(2, 2, 2, Element::generator(y_shape(2, 2), 1, 1), Element::generator(z_shape(2, 2), 1, 2)) +
      pure_yz(2, 2, 2, Element::generator(y_shape(2, 2), 1, 2), Element::generator(z_shape(2, 2), 2, 2));
  CHECK(img == expected);
}

TEST_CASE("theta of the unit") {
  CHECK(theta_star(Element::unit(X22), 1) ==
        TensorElement::unit({plain_factor(y_shape(2, 1)), plain_factor(z_shape(1, 2))}));
}

TEST_CASE("theta sends the distinguished minor to the minor pair") {
  for (int n = 2; n <= 3; ++n) {
    for (int t = 1; t < n; ++t) {
      const AlgebraShape xs = x_shape(n, n);
      const AlgebraShape ys = y_shape(n, t);
      const AlgebraShape zs = z_shape(t, n);
      Element dX = quantum_minor(xs, lower_left_minor(xs, t));
      Element dY = quantum_minor(ys, lower_left_minor(ys, t));
      Element dZ = quantum_minor(zs, lower_left_minor(zs, t));
      CHECK(theta_star(dX, t) == pure_yz(n, t, n, dY, dZ));
    }
  }
}

TEST_CASE("rho and lambda send the distinguished minors to minor-determinant pairs") {
  const int n = 2, t = 1;
  const AlgebraShape ys = y_shape(n, t), zs = z_shape(t, n);
  Element dY = quantum_minor(ys, lower_left_minor(ys, t));
  Element dZ = quantum_minor(zs, lower_left_minor(zs, t));
  TensorElement rr = rho_star(dY);
  TensorElement expected_r(std::vector<FactorSpec>{plain_factor(ys), gl_factor(t)});
  for (const auto& [m, c] : gl_det(t).element().terms())
    for (const auto& [ym, yc] : dY.terms()) expected_r.add_term({ym, m}, c * yc);
  CHECK(rr == expected_r);
  TensorElement ll = lambda_star(dZ);
  TensorElement expected_l(std::vector<FactorSpec>{gl_factor(t), plain_factor(zs)});
  for (const auto& [m, c] : gl_det(t).element().terms())
    for (const auto& [zm, zc] : dZ.terms()) expected_l.add_term({m, zm}, c * zc);
  CHECK(ll == expected_l);
  CHECK(rho_star(Element::unit(ys)) ==
        TensorElement::unit({plain_factor(ys), gl_factor(t)}));
}

TEST_CASE("the theta image consists of coinvariants") {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      CHECK(is_coinvariant(theta_star(Element::generator(X22, i, j), 2)));
  CHECK(is_coinvariant(theta_star(Element::generator(X22, 1, 1) * Element::generator(X22, 2, 2), 1)));
  std::vector<FactorSpec> vf{plain_factor(y_shape(2, 2)), plain_factor(z_shape(2, 2))};
  CHECK(is_coinvariant(TensorElement(vf)));  // zero
}

TEST_CASE("gamma twists the left minor by the inverse determinant") {
  const int m = 2, t = 2, n = 2;
  const AlgebraShape ys = y_shape(m, t);
  Element dY = quantum_minor(ys, lower_left_minor(ys, t));
  TensorElement v = pure_yz(m, t, n, dY, Element::unit(z_shape(t, n)));
  TensorElement g = gamma_star(v);
  // expected: det^{-1} (x) dY (x) 1
  std::vector<FactorSpec> gf{gl_factor(t), plain_factor(ys), plain_factor(z_shape(t, n))};
  TensorElement expected(gf, {1, 0, 0});
  for (const auto& [ym, yc] : dY.terms())
    expected.add_term({Monomial::one(), ym, Monomial::one()}, yc);
  CHECK(g == expected);
  CHECK_FALSE(is_coinvariant(v));
  CHECK(is_semi_coinvariant(v, 1));
}

TEST_CASE("gamma twists the right minor by the determinant") {
  const int m = 2, t = 2, n = 2;
  const AlgebraShape zs = z_shape(t, n);
  Element dZ = quantum_minor(zs, lower_left_minor(zs, t));
  TensorElement v = pure_yz(m, t, n, Element::unit(y_shape(m, t)), dZ);
  CHECK(is_semi_coinvariant(v, -1));
  CHECK_FALSE(is_coinvariant(v));
}

TEST_CASE("semi-coinvariance at s=0 is coinvariance") {
  TensorElement img = theta_star(Element::generator(X22, 1, 1), 1);
  CHECK(is_semi_coinvariant(img, 0));
}

TEST_CASE("componentwise divisibility criterion") {
  const int t = 2;
  const AlgebraShape ys = y_shape(2, t), zs = z_shape(t, 2);
  Element dY = quantum_minor(ys, lower_left_minor(ys, t));
  // dY (x) 1 is homogeneous of bidegree (2,0): s = 1 works
  CHECK(is_sl_coinvariant(pure_yz(2, t, 2, dY, Element::unit(zs))));
  // a single generator has bidegree (1,0): 2 does not divide 1
  CHECK_FALSE(is_sl_coinvariant(
      pure_yz(2, t, 2, Element::generator(ys, 1, 1), Element::unit(zs))));
  // any plain coinvariant passes
  CHECK(is_sl_coinvariant(theta_star(Element::generator(X22, 2, 1), t)));
}

TEST_CASE("xi coaction and its coinvariants") {
  const int n = 2, t = 1;
  LocImage x(LocalizedElement(dX_normal(n, t), Element::generator(x_shape(n, n), 1, 2), 0), t);
  TensorElement xv = x.value();
  // x (x) 1 is a coinvariant
  TensorElement v1 = outer(xv, [&] {
    TensorElement g(std::vector<FactorSpec>{gl_factor(t)});
    g.add_term({Monomial::one()}, RatFunc(1));
    return g;
  }());
  CHECK(is_xi_coinvariant(v1));
  // x (x) det is not: the comultiplication of a group-like is not trivial
  TensorElement vdet = outer(xv, [&] {
    TensorElement g(std::vector<FactorSpec>{gl_factor(t)});
    for (const auto& [m, c] : gl_det(t).element().terms()) g.add_term({m}, c);
    return g;
  }());
  CHECK_FALSE(is_xi_coinvariant(vdet));
}

TEST_CASE("torus weights of generators") {
  const int m = 2, t = 2, n = 2;
  const AlgebraShape ys = y_shape(m, t), zs = z_shape(t, n);
  TensorElement y1 = pure_yz(m, t, n, Element::generator(ys, 1, 2), Element::unit(zs));
  CHECK(torus_weight_matches(y1, BiDegree{1, 0}));
  TensorElement z1 = pure_yz(m, t, n, Element::unit(ys), Element::generator(zs, 2, 1));
  CHECK(torus_weight_matches(z1, BiDegree{0, 1}));
  TensorElement one = pure_yz(m, t, n, Element::unit(ys), Element::unit(zs));
  CHECK(torus_weight_matches(one, BiDegree{0, 0}));
  CHECK_FALSE(torus_weight_matches(y1, BiDegree{0, 1}));
}

TEST_CASE("torus weight requires homogeneity") {
  const AlgebraShape ys = y_shape(2, 1), zs = z_shape(1, 2);
  std::vector<FactorSpec> vf{plain_factor(ys), plain_factor(zs)};
  TensorElement v(vf);
  v.add_term({Monomial::one(), Monomial::one()}, RatFunc(1));
  v.add_term({Monomial::of(Gen{1, 1}), Monomial::one()}, RatFunc(1));
  CHECK_THROWS_AS(torus_weight_matches(v, BiDegree{0, 0}), NotHomogeneous);
}

TEST_CASE("gamma is coassociative on sampled basis tensors") {
  const int m = 2, t = 2, n = 2;
  const AlgebraShape ys = y_shape(m, t), zs = z_shape(t, n);
  std::vector<FactorSpec> vf{plain_factor(ys), plain_factor(zs)};
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; i + j <= 2; ++j) {
      Frame fr = Frame::tensor_component(vf, {i, j});
      for (int k = 0; k < fr.size(); ++k) {
        TensorElement v(vf);
        v.add_term(fr.key(k), RatFunc(1));
        TensorElement g = gamma_star(v);
        TensorElement lhs = comultiply_factor(g, 0);
        std::vector<FactorSpec> f4{gl_factor(t), gl_factor(t), vf[0], vf[1]};
        TensorElement rhs(f4);
        for (const auto& [key, c] : g.terms()) {
          TensorElement sub(vf);
          sub.add_term({key[1], key[2]}, RatFunc(1));
          TensorElement pref(std::vector<FactorSpec>{gl_factor(t)},
                             std::vector<int>{g.denom_exp()[0]});
          pref.add_term({key[0]}, c);
          rhs += outer(pref, gamma_star(sub));
        }
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("products of coinvariants stay coinvariant") {
  Sampler rng(17);
  for (int k = 0; k < 6; ++k) {
    Element a = rng.next_element(X22, 2, 2);
    Element b = rng.next_element(X22, 2, 2);
    TensorElement u = theta_star(a, 1), w = theta_star(b, 1);
    CHECK(is_coinvariant(u * w));
  }
}

TEST_CASE("bidegree decomposition") {
  const AlgebraShape ys = y_shape(2, 1), zs = z_shape(1, 2);
  std::vector<FactorSpec> vf{plain_factor(ys), plain_factor(zs)};
  TensorElement v(vf);
  v.add_term({Monomial::of(Gen{1, 1}), Monomial::one()}, RatFunc(1));
  v.add_term({Monomial::one(), Monomial::of(Gen{1, 2})}, RatFunc(2));
  auto comps = bidegree_components(v);
  CHECK(comps.size() == 2);
  CHECK(comps.count({1, 0}) == 1);
  CHECK(comps.count({0, 1}) == 1);
}
