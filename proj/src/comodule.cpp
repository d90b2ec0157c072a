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

#include "qcv/comodule.hpp"

#include <algorithm>
#include <functional>

namespace qcv {

AlgebraShape x_shape(int m, int n) { return shape_of(Label::X, m, n); }
AlgebraShape y_shape(int m, int t) { return shape_of(Label::Y, m, t); }
AlgebraShape z_shape(int t, int n) { return shape_of(Label::Z, t, n); }

namespace {

// Algebra-morphism application: each generator is replaced by its rule image
// and the images are multiplied out in the target tensor product.
TensorElement apply_morphism(const Element& x, const std::vector<FactorSpec>& factors,
                             const std::function<TensorElement(const Gen&)>& rule) {
  TensorElement out(factors);
  for (const auto& [mon, c] : x.terms()) {
    TensorElement acc = TensorElement::unit(factors);
    for (const Gen& g : mon.gens()) acc = acc * rule(g);
    out += acc.scaled(c);
  }
  return out;
}

}  // namespace

TensorElement theta_star(const Element& x, int t) {
  if (x.shape().label != Label::X) throw ShapeMismatch("theta acts on the X family");
  const int m = x.shape().rows, n = x.shape().cols;
  std::vector<FactorSpec> factors{plain_factor(y_shape(m, t)), plain_factor(z_shape(t, n))};
  return apply_morphism(x, factors, [&](const Gen& g) {
    TensorElement r(factors);
    for (int k = 1; k <= t; ++k)
      r.add_term({Monomial::of(Gen{g.row, k}), Monomial::of(Gen{k, g.col})}, RatFunc(1));
    return r;
  });
}

TensorElement rho_star(const Element& y) {
  const int t = y.shape().cols;
  std::vector<FactorSpec> factors{plain_factor(y.shape()), gl_factor(t)};
  return apply_morphism(y, factors, [&](const Gen& g) {
    TensorElement r(factors);
    for (int k = 1; k <= t; ++k)
      r.add_term({Monomial::of(Gen{g.row, k}), Monomial::of(Gen{k, g.col})}, RatFunc(1));
    return r;
  });
}

TensorElement lambda_star(const Element& z) {
  const int t = z.shape().rows;
  std::vector<FactorSpec> factors{gl_factor(t), plain_factor(z.shape())};
  return apply_morphism(z, factors, [&](const Gen& g) {
    TensorElement r(factors);
    for (int k = 1; k <= t; ++k)
      r.add_term({Monomial::of(Gen{g.row, k}), Monomial::of(Gen{k, g.col})}, RatFunc(1));
    return r;
  });
}

TensorElement gamma_star(const TensorElement& v) {
  if (v.factor_count() != 2) throw ShapeMismatch("gamma acts on two-factor tensors");
  const FactorSpec& fy = v.factors()[0];
  const FactorSpec& fz = v.factors()[1];
  const int t = fy.shape.cols;
  if (fz.shape.rows != t) throw ShapeMismatch("inner dimensions disagree");
  const int s = v.denom_exp()[0], r = v.denom_exp()[1];

  struct Pending {
    Monomial gl;
    Monomial a0;
    Monomial b0;
    RatFunc c;
    int exp;
  };
  std::vector<Pending> pending;
  int max_exp = 0;
  const AlgebraShape ts = gl_shape(t);
  for (const auto& [key, c] : v.terms()) {
    TensorElement rho = rho_star(Element::monomial(fy.shape, key[0]));
    TensorElement lam = lambda_star(Element::monomial(fz.shape, key[1]));
    for (const auto& [rk, rc] : rho.terms()) {
      // S applied to the right leg of rho, with the localized denominator:
      // S(a_1 det^{-s}) = det^{s} S(a_1)
      GLElement sa =
          detail::antipode_impl(GLElement(Element::monomial(ts, rk[1]), s), false);
      for (const auto& [lk, lc] : lam.terms()) {
        GLElement gl = sa * GLElement(Element::monomial(ts, lk[0]), r);
        RatFunc coef = c * rc * lc;
        max_exp = std::max(max_exp, gl.denom_exp());
        for (const auto& [gm, gc] : gl.num().terms())
          pending.push_back(Pending{gm, rk[0], lk[1], coef * gc, gl.denom_exp()});
      }
    }
  }
  std::vector<FactorSpec> factors{gl_factor(t), fy, fz};
  TensorElement out(factors, {max_exp, s, r});
  const Element& det = gl_det(t).element();
  for (const Pending& p : pending) {
    if (p.exp == max_exp) {
      out.add_term({p.gl, p.a0, p.b0}, p.c);
    } else {
      Element boosted = Element::monomial(ts, p.gl) * det.pow(max_exp - p.exp);
      for (const auto& [m, mc] : boosted.terms()) out.add_term({m, p.a0, p.b0}, p.c * mc);
    }
  }
  return out;
}

namespace {

TensorElement gl_power_tensor(int t, int s) {
  // det^{-s} as a one-factor tensor (s of either sign)
  TensorElement g(std::vector<FactorSpec>{gl_factor(t)}, std::vector<int>{s > 0 ? s : 0});
  if (s >= 0) {
    g.add_term({Monomial::one()}, RatFunc(1));
  } else {
    const Element num = gl_det(t).element().pow(-s);
    for (const auto& [m, c] : num.terms()) g.add_term({m}, c);
  }
  return g;
}

}  // namespace

bool is_coinvariant(const TensorElement& v) { return is_semi_coinvariant(v, 0); }

bool is_semi_coinvariant(const TensorElement& v, int s) {
  const int t = v.factors()[0].shape.cols;
  return gamma_star(v) == outer(gl_power_tensor(t, s), v);
}

bool is_sl_coinvariant(const TensorElement& v) {
  if (v.factor_count() != 2) throw ShapeMismatch("two-factor tensor expected");
  const int t = v.factors()[0].shape.cols;
  for (const auto& [bidef, comp] : bidegree_components(v)) {
    int diff = bidef.first - bidef.second;
    if (diff % t != 0) return false;
    if (!is_semi_coinvariant(comp, diff / t)) return false;
  }
  return true;
}

TensorElement xi_star(const TensorElement& v) {
  const size_t last = v.factor_count() - 1;
  if (v.factor_count() < 1 || !v.factors()[last].host)
    throw ShapeMismatch("last factor must be the localized Hopf algebra");
  TensorElement d = comultiply_factor(v, last);
  // (..., h1, h2) -> (h1, ..., h2)
  std::vector<size_t> perm;
  perm.push_back(last);
  for (size_t i = 0; i < last; ++i) perm.push_back(i);
  perm.push_back(last + 1);
  return permute_factors(d, perm);
}

bool is_xi_coinvariant(const TensorElement& v) {
  const size_t last = v.factor_count() - 1;
  const int t = v.factors()[last].shape.rows;
  return xi_star(v) == outer(gl_power_tensor(t, 0), v);
}

std::map<std::pair<int, int>, TensorElement> bidegree_components(const TensorElement& v) {
  std::map<std::pair<int, int>, TensorElement> out;
  for (const auto& [k, c] : v.terms()) {
    std::pair<int, int> d{k[0].degree(), k[1].degree()};
    auto it = out.find(d);
    if (it == out.end())
      it = out.emplace(d, TensorElement(v.factors(), v.denom_exp())).first;
    it->second.add_term(k, c);
  }
  return out;
}

bool torus_weight_matches(const TensorElement& v, const BiDegree& expected) {
  if (v.factor_count() != 2) throw ShapeMismatch("two-factor tensor expected");
  if (!v.is_homogeneous()) throw NotHomogeneous("torus weight of an inhomogeneous element");
  const int t = v.factors()[0].shape.cols;
  TensorElement g = gamma_star(v);
  const int e = g.denom_exp()[0];
  // collapse the Hopf factor through the torus projection
  std::map<std::tuple<int, Monomial, Monomial>, RatFunc> lhs, rhs;
  auto put = [](auto& m, std::tuple<int, Monomial, Monomial> k, const RatFunc& c) {
    auto [it, inserted] = m.emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  for (const auto& [k, c] : g.terms()) {
    bool diag = true;
    for (const Gen& gen : k[0].gens())
      if (gen.row != gen.col) {
        diag = false;
        break;
      }
    if (!diag) continue;
    put(lhs, {k[0].degree() - t * e, k[1], k[2]}, c);
  }
  const int w = expected.j - expected.i;
  for (const auto& [k, c] : v.terms()) put(rhs, {w, k[0], k[1]}, c);
  return lhs == rhs;
}

}  // namespace qcv
