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

#include <algorithm>

#include "qcv/comodule.hpp"
#include "qcv/linalg.hpp"
#include "qcv/theorems.hpp"

using namespace qcv;

namespace {

const AlgebraShape M2 = shape_of(Label::X, 2, 2);

TensorElement tmono(const AlgebraShape& s, std::vector<Gen> g, RatFunc c = RatFunc(1)) {
  return as_tensor(Element::monomial(s, Monomial(std::move(g)), c));
}

TensorElement random_homogeneous(Sampler& rng, const AlgebraShape& s, int degree, int terms) {
  Element e(s);
  for (int i = 0; i < terms; ++i) e.add_term(rng.next_monomial(s, degree), rng.next_coeff());
  return as_tensor(e);
}

}  // namespace

TEST_CASE("span of distinct monomials has full dimension") {
  Frame fr = Frame::component(plain_factor(M2), 2);
  std::vector<TensorElement> v{tmono(M2, {{1, 1}, {2, 2}}), tmono(M2, {{1, 2}, {2, 1}})};
  CHECK(span(v, fr).dim() == 2);
}

TEST_CASE("span collapses scalar multiples") {
  Frame fr = Frame::component(plain_factor(M2), 1);
  TensorElement v = tmono(M2, {{1, 1}}) + tmono(M2, {{2, 2}});
  std::vector<TensorElement> vecs{v, v.scaled(RatFunc::q_power(1))};
  CHECK(span(vecs, fr).dim() == 1);
}

TEST_CASE("empty span") {
  Frame fr = Frame::component(plain_factor(M2), 1);
  CHECK(span({}, fr).dim() == 0);
}

TEST_CASE("kernel of the rank-1 comultiplication map at degree 2") {
  // images of the degree-2 basis under the two-factor splitting with inner
  // size 1; the kernel is the span of the quantum determinant
  Frame domain = Frame::component(plain_factor(M2), 2);
  std::vector<TensorElement> images;
  for (int i = 0; i < domain.size(); ++i) {
    Element e(M2);
    e.add_term(domain.key(i)[0], RatFunc(1));
    images.push_back(theta_star(e, 1));
  }
  KernelResult kr = kernel_of(images, domain);
  CHECK(kr.kernel.dim() == 1);
  CHECK(kr.rank == 9);
  Subspace det = span({as_tensor(quantum_minor(M2, MinorIndex({1, 2}, {1, 2})))}, domain);
  CHECK(equal(kr.kernel, det));
}

TEST_CASE("kernel of identity and zero maps") {
  Frame domain = Frame::component(plain_factor(M2), 1);
  std::vector<TensorElement> ident, zero;
  for (int i = 0; i < domain.size(); ++i) {
    TensorElement v(domain.factors(), domain.denom_exp());
    v.add_term(domain.key(i), RatFunc(1));
    ident.push_back(v);
    zero.push_back(TensorElement(domain.factors(), domain.denom_exp()));
  }
  CHECK(kernel_of(ident, domain).kernel.dim() == 0);
  CHECK(kernel_of(zero, domain).kernel.dim() == domain.size());
}

TEST_CASE("rank-nullity on random maps") {
  Sampler rng(99);
  Frame domain = Frame::component(plain_factor(M2), 2);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<TensorElement> images;
    for (int i = 0; i < domain.size(); ++i)
      images.push_back(random_homogeneous(rng, M2, 2, 2));
    KernelResult kr = kernel_of(images, domain);
    CHECK(kr.rank + kr.kernel.dim() == domain.size());
  }
}

TEST_CASE("containment and equality") {
  Frame fr = Frame::component(plain_factor(M2), 1);
  TensorElement v = tmono(M2, {{1, 1}}) + tmono(M2, {{1, 2}}, RatFunc::q_power(2));
  Subspace s = span({v}, fr);
  CHECK(contains(s, v.scaled(RatFunc::q_power(2))));
  CHECK_FALSE(contains(s, tmono(M2, {{1, 1}})));
  Subspace s2 = span({v.scaled(-RatFunc::q_power(5))}, fr);
  CHECK(equal(s, s2));
}

TEST_CASE("intersection semantics") {
  Frame fr = Frame::component(plain_factor(M2), 1);
  TensorElement a = tmono(M2, {{1, 1}});
  TensorElement b = tmono(M2, {{1, 2}});
  TensorElement c = tmono(M2, {{2, 1}});
  Subspace ab = span({a, b}, fr);
  Subspace bc = span({b, c}, fr);
  Subspace inter = intersect(ab, bc);
  CHECK(inter.dim() == 1);
  CHECK(contains(inter, b));
  CHECK(equal(intersect(ab, ab), ab));
  Subspace disjoint = intersect(span({a}, fr), span({c}, fr));
  CHECK(disjoint.dim() == 0);
}

TEST_CASE("result is independent of input order") {
  Sampler rng(123);
  Frame fr = Frame::component(plain_factor(M2), 2);
  std::vector<TensorElement> vecs;
  for (int i = 0; i < 6; ++i)
    vecs.push_back(random_homogeneous(rng, M2, 2, 3));
  Subspace s1 = span(vecs, fr);
  std::reverse(vecs.begin(), vecs.end());
  Subspace s2 = span(vecs, fr);
  CHECK(equal(s1, s2));
  CHECK(s1.rows() == s2.rows());
}

TEST_CASE("solve_combination recovers coefficients") {
  std::vector<TensorElement> vecs{tmono(M2, {{1, 1}}),
                                  tmono(M2, {{1, 1}}) + tmono(M2, {{1, 2}})};
  TensorElement target = tmono(M2, {{1, 1}}, RatFunc(3)) + tmono(M2, {{1, 2}}, RatFunc::q_power(1));
  auto sol = solve_combination(vecs, target);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == RatFunc(3) - RatFunc::q_power(1));
  CHECK((*sol)[1] == RatFunc::q_power(1));
  CHECK_FALSE(solve_combination({tmono(M2, {{1, 1}})}, tmono(M2, {{2, 2}})).has_value());
}

TEST_CASE("frame rejects outside vectors") {
  Frame fr = Frame::component(plain_factor(M2), 1);
  CHECK_THROWS_AS(fr.coords(tmono(M2, {{1, 1}, {2, 2}})), VectorOutsideFrame);
}

TEST_CASE("specialized dimensions agree with symbolic on a generic point") {
  Sampler rng(7);
  Frame fr = Frame::component(plain_factor(M2), 2);
  std::vector<TensorElement> vecs;
  for (int i = 0; i < 5; ++i)
    vecs.push_back(random_homogeneous(rng, M2, 2, 3));
  Subspace s = span(vecs, fr);
  CHECK(span_dim_at(vecs, fr, rat(3, 2)) == s.dim());
}
