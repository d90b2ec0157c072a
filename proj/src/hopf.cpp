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

#include "qcv/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qcv {

AlgebraShape gl_shape(int t) { return shape_of(Label::T, t, t); }

const NormalElement& gl_det(int t) {
  static std::mutex mu;
  static std::map<int, NormalElement> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, normal_lower_left(gl_shape(t), t)).first;
  return it->second;
}

FactorSpec gl_factor(int t) { return localized_factor(gl_det(t)); }

GLElement::GLElement(Element num, int denom_exp) : num_(std::move(num)), denom_exp_(denom_exp) {
  if (num_.shape().rows != num_.shape().cols || num_.shape().label != Label::T)
    throw ShapeMismatch("GL element numerator must be a square T-shape");
  if (denom_exp_ < 0) throw Error("negative denominator exponent");
  if (num_.is_zero()) denom_exp_ = 0;
}

GLElement GLElement::operator+(const GLElement& o) const {
  if (t() != o.t()) throw ShapeMismatch("GL element size mismatch");
  int e = std::max(denom_exp_, o.denom_exp_);
  const Element& d = gl_det(t()).element();
  Element a = denom_exp_ == e ? num_ : num_ * d.pow(e - denom_exp_);
  Element b = o.denom_exp_ == e ? o.num_ : o.num_ * d.pow(e - o.denom_exp_);
  return GLElement(a + b, e);
}

GLElement GLElement::operator*(const GLElement& o) const {
  if (t() != o.t()) throw ShapeMismatch("GL element size mismatch");
  return GLElement(num_ * o.num_, denom_exp_ + o.denom_exp_);
}

GLElement GLElement::times_det_power(int k) const {
  if (k == 0 || num_.is_zero()) return *this;
  if (k < 0) return GLElement(num_, denom_exp_ - k);
  if (denom_exp_ >= k) return GLElement(num_, denom_exp_ - k);
  const Element& d = gl_det(t()).element();
  return GLElement(num_ * d.pow(k - denom_exp_), 0);
}

bool GLElement::operator==(const GLElement& o) const {
  if (t() != o.t()) throw ShapeMismatch("GL element size mismatch");
  if (denom_exp_ == o.denom_exp_) return num_ == o.num_;
  const Element& d = gl_det(t()).element();
  return num_ * d.pow(o.denom_exp_) == o.num_ * d.pow(denom_exp_);
}

namespace {

// Exact division of x by det on one graded component; the engine decides it
// with a linear solve over the monomial basis of the lower degree.
std::optional<Element> divide_by_det(const Element& x, int t) {
  const AlgebraShape s = gl_shape(t);
  const Element& d = gl_det(t).element();
  if (x.is_zero()) return Element::zero(s);
  if (t == 1) {
    Element out(s);
    for (const auto& [m, c] : x.terms()) {
      if (m.degree() < 1) return std::nullopt;
      std::vector<Gen> g(m.gens().begin(), m.gens().end() - 1);
      out.add_term(Monomial(std::move(g)), c);
    }
    return out;
  }
  // a product det*y has at least two monomials for t >= 2
  if (x.term_count() == 1) return std::nullopt;
  Element out(s);
  for (const auto& [deg, comp] : x.degree_components()) {
    if (deg < t) return std::nullopt;
    std::vector<TensorElement> vectors;
    std::vector<Monomial> basis = graded_component_basis(s, deg - t);
    vectors.reserve(basis.size());
    for (const Monomial& m : basis) vectors.push_back(as_tensor(d * Element::monomial(s, m)));
    auto sol = solve_combination(vectors, as_tensor(comp));
    if (!sol) return std::nullopt;
    for (size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], (*sol)[i]);
  }
  return out;
}

}  // namespace

GLElement GLElement::canonical() const {
  GLElement h = *this;
  while (h.denom_exp_ > 0) {
    auto q = divide_by_det(h.num_, h.t());
    if (!q) break;
    h = GLElement(std::move(*q), h.denom_exp_ - 1);
  }
  return h;
}

bool GLElement::is_scalar() const {
  GLElement c = canonical();
  if (c.num_.is_zero()) return true;
  return c.denom_exp_ == 0 && c.num_.term_count() == 1 &&
         c.num_.terms().begin()->first.is_one();
}

RatFunc GLElement::scalar_value() const {
  GLElement c = canonical();
  if (c.num_.is_zero()) return RatFunc();
  if (!c.is_scalar()) throw Error("GL element is not scalar");
  return c.num_.terms().begin()->second;
}

std::string GLElement::str() const {
  std::string out = num_.str();
  if (denom_exp_ > 0) out += " * dT^-" + std::to_string(denom_exp_);
  return out;
}

TensorElement comultiply_matrix(const Element& x) {
  const AlgebraShape s = x.shape();
  if (s.rows != s.cols) throw ShapeMismatch("comultiplication needs a square shape");
  std::vector<FactorSpec> factors{plain_factor(s), plain_factor(s)};
  TensorElement out(factors);
  for (const auto& [mon, c] : x.terms()) {
    TensorElement acc = TensorElement::unit(factors);
    for (const Gen& g : mon.gens()) {
      TensorElement rule(factors);
      for (int k = 1; k <= s.rows; ++k)
        rule.add_term({Monomial::of(Gen{g.row, k}), Monomial::of(Gen{k, g.col})}, RatFunc(1));
      acc = acc * rule;
    }
    out += acc.scaled(c);
  }
  return out;
}

TensorElement gl_comultiply(const GLElement& h) {
  const int t = h.t();
  TensorElement plain = comultiply_matrix(h.num());
  std::vector<FactorSpec> factors{gl_factor(t), gl_factor(t)};
  TensorElement out(factors, {h.denom_exp(), h.denom_exp()});
  for (const auto& [k, c] : plain.terms()) out.add_term(k, c);
  return out;
}

RatFunc gl_counit(const GLElement& h) {
  RatFunc acc;
  for (const auto& [mon, c] : h.num().terms()) {
    bool diag = true;
    for (const Gen& g : mon.gens())
      if (g.row != g.col) {
        diag = false;
        break;
      }
    if (diag) acc += c;
  }
  return acc;
}

namespace detail {

namespace {

GLElement antipode_generator(int t, const Gen& g, bool inverse) {
  // delete row g.col and column g.row from the full index set
  std::vector<int> rows, cols;
  for (int i = 1; i <= t; ++i) {
    if (i != g.col) rows.push_back(i);
    if (i != g.row) cols.push_back(i);
  }
  Element minor = rows.empty() ? Element::unit(gl_shape(t))
                               : quantum_minor(gl_shape(t), MinorIndex(rows, cols));
  int e = g.row - g.col;
  RatFunc c = RatFunc::q_power(e);
  if (((e % 2) + 2) % 2 == 1) c = -c;
  if (inverse) c *= RatFunc::q_power(2 * (g.col - g.row));
  return GLElement(minor.scaled(c), 1);
}

}  // namespace

GLElement antipode_impl(const GLElement& h, bool inverse) {
  const int t = h.t();
  GLElement acc = GLElement::zero(t);
  for (const auto& [mon, c] : h.num().terms()) {
    GLElement prod = GLElement::unit(t);
    for (auto it = mon.gens().rbegin(); it != mon.gens().rend(); ++it)
      prod = prod * antipode_generator(t, *it, inverse);
    acc = acc + prod.scaled(c);
  }
  // S(det^{-s}) = det^{s} on either side of the anti-morphism
  return acc.times_det_power(h.denom_exp());
}

}  // namespace detail

GLElement antipode(const GLElement& h) { return detail::antipode_impl(h, false).canonical(); }

GLElement antipode_inverse(const GLElement& h) {
  return detail::antipode_impl(h, true).canonical();
}

void check_antipode_inverse(int t) {
  std::vector<GLElement> gens;
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) gens.push_back(GLElement::generator(t, i, j));
  gens.push_back(GLElement::det_inverse(t));
  for (const GLElement& g : gens) {
    if (antipode(antipode_inverse(g)) != g || antipode_inverse(antipode(g)) != g)
      throw Error("antipode inverse convention failed at t=" + std::to_string(t));
  }
}

TorusPoly TorusPoly::term(int exp, RatFunc c) {
  TorusPoly p;
  if (!c.is_zero()) p.c_[exp] = std::move(c);
  return p;
}

TorusPoly TorusPoly::operator+(const TorusPoly& o) const {
  TorusPoly r = *this;
  for (const auto& [e, c] : o.c_) {
    auto [it, inserted] = r.c_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  return r;
}

TorusPoly TorusPoly::operator*(const TorusPoly& o) const {
  TorusPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r = r + term(e1 + e2, c1 * c2);
  return r;
}

std::string TorusPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    os << scalar_prefix(c);
    if (e == 0)
      os << "1";
    else {
      os << "T";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

TorusPoly torus_project(const GLElement& h) {
  const int t = h.t();
  TorusPoly out;
  for (const auto& [mon, c] : h.num().terms()) {
    bool diag = true;
    for (const Gen& g : mon.gens())
      if (g.row != g.col) {
        diag = false;
        break;
      }
    if (diag) out = out + TorusPoly::term(mon.degree() - t * h.denom_exp(), c);
  }
  return out;
}

TensorElement comultiply_factor(const TensorElement& v, size_t idx) {
  if (idx >= v.factor_count()) throw Error("factor index out of range");
  const FactorSpec& f = v.factors()[idx];
  if (f.shape.rows != f.shape.cols) throw ShapeMismatch("comultiplied factor must be square");
  std::vector<FactorSpec> factors;
  std::vector<int> exps;
  for (size_t i = 0; i < v.factor_count(); ++i) {
    factors.push_back(v.factors()[i]);
    exps.push_back(v.denom_exp()[i]);
    if (i == idx) {  // the group-like denominator lands on both halves
      factors.push_back(v.factors()[i]);
      exps.push_back(v.denom_exp()[i]);
    }
  }
  TensorElement out(factors, exps);
  for (const auto& [k, c] : v.terms()) {
    TensorElement d = comultiply_matrix(Element::monomial(f.shape, k[idx]));
    for (const auto& [dk, dc] : d.terms()) {
      TensorKey key;
      key.reserve(k.size() + 1);
      key.insert(key.end(), k.begin(), k.begin() + static_cast<long>(idx));
      key.push_back(dk[0]);
      key.push_back(dk[1]);
      key.insert(key.end(), k.begin() + static_cast<long>(idx) + 1, k.end());
      out.add_term(key, c * dc);
    }
  }
  return out;
}

TensorElement counit_factor(const TensorElement& v, size_t idx) {
  if (idx >= v.factor_count()) throw Error("factor index out of range");
  std::vector<FactorSpec> factors;
  std::vector<int> exps;
  for (size_t i = 0; i < v.factor_count(); ++i) {
    if (i == idx) continue;
    factors.push_back(v.factors()[i]);
    exps.push_back(v.denom_exp()[i]);
  }
  TensorElement out(factors, exps);
  for (const auto& [k, c] : v.terms()) {
    bool diag = true;
    for (const Gen& g : k[idx].gens())
      if (g.row != g.col) {
        diag = false;
        break;
      }
    if (!diag) continue;
    TensorKey key;
    key.reserve(k.size() - 1);
    for (size_t i = 0; i < k.size(); ++i)
      if (i != idx) key.push_back(k[i]);
    out.add_term(key, c);
  }
  return out;
}

TensorElement multiply_factors(const TensorElement& v, size_t idx) {
  if (idx + 1 >= v.factor_count()) throw Error("factor index out of range");
  if (!(v.factors()[idx].compatible(v.factors()[idx + 1])))
    throw ShapeMismatch("folded factors must match");
  std::vector<FactorSpec> factors;
  std::vector<int> exps;
  for (size_t i = 0; i < v.factor_count(); ++i) {
    if (i == idx + 1) continue;
    factors.push_back(v.factors()[i]);
    exps.push_back(i == idx ? v.denom_exp()[idx] + v.denom_exp()[idx + 1] : v.denom_exp()[i]);
  }
  TensorElement out(factors, exps);
  const AlgebraShape s = v.factors()[idx].shape;
  for (const auto& [k, c] : v.terms()) {
    Element prod = Element::monomial(s, k[idx]) * Element::monomial(s, k[idx + 1]);
    for (const auto& [m, mc] : prod.terms()) {
      TensorKey key;
      key.reserve(k.size() - 1);
      for (size_t i = 0; i < k.size(); ++i) {
        if (i == idx + 1) continue;
        key.push_back(i == idx ? m : k[i]);
      }
      out.add_term(key, c * mc);
    }
  }
  return out;
}

TensorElement antipode_factor(const TensorElement& v, size_t idx, bool inverse) {
  if (idx >= v.factor_count()) throw Error("factor index out of range");
  const FactorSpec& f = v.factors()[idx];
  if (!f.host) throw HostMismatch("antipode needs the localized Hopf factor");
  const int t = f.shape.rows;
  // first pass: antipode of each key monomial, recording the exponent needed
  std::vector<std::tuple<TensorKey, RatFunc, GLElement>> parts;
  int max_exp = 0;
  for (const auto& [k, c] : v.terms()) {
    GLElement s =
        detail::antipode_impl(GLElement(Element::monomial(f.shape, k[idx]), v.denom_exp()[idx]),
                              inverse);
    max_exp = std::max(max_exp, s.denom_exp());
    parts.emplace_back(k, c, std::move(s));
  }
  std::vector<FactorSpec> factors = v.factors();
  std::vector<int> exps = v.denom_exp();
  exps[idx] = max_exp;
  TensorElement out(factors, exps);
  const Element& det = gl_det(t).element();
  for (auto& [k, c, s] : parts) {
    Element num = s.denom_exp() == max_exp ? s.num() : s.num() * det.pow(max_exp - s.denom_exp());
    for (const auto& [m, mc] : num.terms()) {
      TensorKey key = k;
      key[idx] = m;
      out.add_term(key, c * mc);
    }
  }
  return out;
}

}  // namespace qcv
