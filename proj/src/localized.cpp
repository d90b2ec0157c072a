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

#include "qcv/localized.hpp"

#include <mutex>

namespace qcv {

LocalizedElement::LocalizedElement(std::shared_ptr<const NormalElement> host, Element num,
                                   int denom_exp)
    : host_(std::move(host)), num_(std::move(num)), denom_exp_(denom_exp) {
  if (!host_) throw Error("localized element without host");
  if (num_.shape() != host_->shape()) throw HostMismatch("numerator outside host algebra");
  if (denom_exp_ < 0) throw Error("negative denominator exponent");
  if (num_.is_zero()) denom_exp_ = 0;
}

LocalizedElement::LocalizedElement(const NormalElement& host, Element num, int denom_exp)
    : LocalizedElement(std::make_shared<NormalElement>(host), std::move(num), denom_exp) {}

void LocalizedElement::check_host(const LocalizedElement& o) const {
  if (!(*host_ == *o.host_)) throw HostMismatch("localized elements over different hosts");
}

LocalizedElement LocalizedElement::operator+(const LocalizedElement& o) const {
  check_host(o);
  int e = std::max(denom_exp_, o.denom_exp_);
  const Element& d = host_->element();
  Element a = denom_exp_ == e ? num_ : num_ * d.pow(e - denom_exp_);
  Element b = o.denom_exp_ == e ? o.num_ : o.num_ * d.pow(e - o.denom_exp_);
  return LocalizedElement(host_, a + b, e);
}

LocalizedElement LocalizedElement::operator*(const LocalizedElement& o) const {
  check_host(o);
  // (a d^{-s}) (b d^{-r}) = a tau^{-s}(b) d^{-(s+r)}
  Element twisted(o.num_.shape());
  for (const auto& [m, c] : o.num_.terms())
    twisted.add_term(m, denom_exp_ == 0 ? c : c * host_->twist(m).pow(-denom_exp_));
  return LocalizedElement(host_, num_ * twisted, denom_exp_ + o.denom_exp_);
}

bool LocalizedElement::operator==(const LocalizedElement& o) const {
  check_host(o);
  if (denom_exp_ == o.denom_exp_) return num_ == o.num_;
  const Element& d = host_->element();
  return num_ * d.pow(o.denom_exp_) == o.num_ * d.pow(denom_exp_);
}

std::string LocalizedElement::str() const {
  std::string out = num_.str();
  if (denom_exp_ > 0) out += " * " + host_->name() + "^-" + std::to_string(denom_exp_);
  return out;
}

namespace {

std::shared_ptr<const NormalElement> cached_normal(const AlgebraShape& shape, int t) {
  static std::mutex mu;
  static std::map<std::tuple<Label, int, int, int>, std::shared_ptr<const NormalElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(shape.label, shape.rows, shape.cols, t);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<NormalElement>(normal_lower_left(shape, t))).first;
  return it->second;
}

}  // namespace

std::shared_ptr<const NormalElement> dX_normal(int n, int t) {
  return cached_normal(x_shape(n, n), t);
}
std::shared_ptr<const NormalElement> dY_normal(int m, int t) {
  return cached_normal(y_shape(m, t), t);
}
std::shared_ptr<const NormalElement> dZ_normal(int t, int n) {
  return cached_normal(z_shape(t, n), t);
}

FactorSpec yo_factor(int m, int t) { return FactorSpec{y_shape(m, t), dY_normal(m, t)}; }
FactorSpec zo_factor(int t, int n) { return FactorSpec{z_shape(t, n), dZ_normal(t, n)}; }
std::vector<FactorSpec> vo_factors(int n, int t) { return {yo_factor(n, t), zo_factor(t, n)}; }

namespace {

// Index-shifted monomial transport between families; the shift preserves the
// row-major order, so PBW normal forms map to PBW normal forms.
Element map_generators(const Element& src, const AlgebraShape& target, int row_shift) {
  Element out(target);
  for (const auto& [m, c] : src.terms()) {
    std::vector<Gen> gens;
    gens.reserve(m.gens().size());
    for (const Gen& g : m.gens()) gens.push_back(Gen{g.row + row_shift, g.col});
    out.add_term(Monomial(std::move(gens)), c);
  }
  return out;
}

}  // namespace

LocalizedElement inj_gl_to_Z(const GLElement& h, int n) {
  const int t = h.t();
  return LocalizedElement(dZ_normal(t, n), map_generators(h.num(), z_shape(t, n), 0),
                          h.denom_exp());
}

LocalizedElement inj_gl_to_Y(const GLElement& h, int n) {
  const int t = h.t();
  return LocalizedElement(dY_normal(n, t), map_generators(h.num(), y_shape(n, t), n - t),
                          h.denom_exp());
}

LocImage::LocImage(LocalizedElement witness, int t) : witness_(std::move(witness)), t_(t),
      value_(vo_factors(witness_.num().shape().rows, t)) {
  const AlgebraShape& xs = witness_.num().shape();
  if (xs.label != Label::X || xs.rows != xs.cols)
    throw ShapeMismatch("localized-image witness must live in the square X family");
  const int e = witness_.denom_exp();
  TensorElement th = theta_star(witness_.num(), t_);
  value_ = TensorElement(vo_factors(xs.rows, t_), {e, e});
  for (const auto& [k, c] : th.terms()) value_.add_term(k, c);
}

LocImage LocImage::operator*(const LocImage& o) const {
  if (n() != o.n() || t_ != o.t_) throw ShapeMismatch("localized-image shape mismatch");
  return LocImage(witness_ * o.witness_, t_);
}

LocImage LocImage::operator+(const LocImage& o) const {
  if (n() != o.n() || t_ != o.t_) throw ShapeMismatch("localized-image shape mismatch");
  return LocImage(witness_ + o.witness_, t_);
}

LocImage LocImage::scaled(const RatFunc& c) const { return LocImage(witness_.scaled(c), t_); }

LocImage inj_Y_to_locimage(const LocalizedElement& yloc, int n) {
  const AlgebraShape& ys = yloc.num().shape();
  if (ys.label != Label::Y || ys.rows != n) throw ShapeMismatch("expected a Y(n,t) element");
  const int t = ys.cols;
  Element wit = map_generators(yloc.num(), x_shape(n, n), 0);
  return LocImage(LocalizedElement(dX_normal(n, t), wit, yloc.denom_exp()), t);
}

LocImage inj_Z_to_locimage(const LocalizedElement& zloc) {
  const AlgebraShape& zs = zloc.num().shape();
  if (zs.label != Label::Z) throw ShapeMismatch("expected a Z(t,n) element");
  const int t = zs.rows, n = zs.cols;
  Element wit = map_generators(zloc.num(), x_shape(n, n), n - t);
  return LocImage(LocalizedElement(dX_normal(n, t), wit, zloc.denom_exp()), t);
}

LocImage inj_gl_to_locimage(const GLElement& h, int n) {
  return inj_Z_to_locimage(inj_gl_to_Z(h, n));
}

TensorElement i_star(const MGlSum& w, int n, int t) {
  TensorElement out(vo_factors(n, t));
  for (const auto& [L, h] : w) {
    if (L.n() != n || L.t() != t) throw ShapeMismatch("localized-image shape mismatch");
    LocalizedElement hz = inj_gl_to_Z(h, n);
    TensorElement hz_tensor(vo_factors(n, t), {0, hz.denom_exp()});
    for (const auto& [m, c] : hz.num().terms()) hz_tensor.add_term({Monomial::one(), m}, c);
    out += L.value() * hz_tensor;
  }
  return out;
}

MGlSum j_star(const TensorElement& v) {
  if (v.factor_count() != 2) throw ShapeMismatch("two-factor tensor expected");
  const AlgebraShape ys = v.factors()[0].shape;
  const AlgebraShape zs = v.factors()[1].shape;
  const int n = ys.rows, t = ys.cols;
  if (zs.rows != t || zs.cols != n || ys.label != Label::Y || zs.label != Label::Z)
    throw ShapeMismatch("expected a localized product-algebra element");
  const int s = v.denom_exp()[0], r = v.denom_exp()[1];
  const AlgebraShape ts = gl_shape(t);

  MGlSum out;
  for (const auto& [key, c] : v.terms()) {
    TensorElement rho = rho_star(Element::monomial(ys, key[0]));
    TensorElement lam = lambda_star(Element::monomial(zs, key[1]));
    for (const auto& [rk, rc] : rho.terms()) {
      const Monomial& a0 = rk[0];
      GLElement a1(Element::monomial(ts, rk[1]), s);
      GLElement sa1 = detail::antipode_impl(a1, false);
      for (const auto& [lk, lc] : lam.terms()) {
        const Monomial& b0 = lk[1];
        TensorElement delta = comultiply_matrix(Element::monomial(ts, lk[0]));
        LocImage right_part =
            inj_Z_to_locimage(LocalizedElement(dZ_normal(t, n), Element::monomial(zs, b0), r));
        LocImage a0_part =
            inj_Y_to_locimage(LocalizedElement(dY_normal(n, t), Element::monomial(ys, a0), s), n);
        for (const auto& [dk, dc] : delta.terms()) {
          GLElement bm2(Element::monomial(ts, dk[0]), r);
          GLElement bm1(Element::monomial(ts, dk[1]), r);
          GLElement sinv_bm1 = detail::antipode_impl(bm1, true);
          LocImage first = right_part * inj_gl_to_locimage(sinv_bm1, n) * a0_part;
          GLElement second = sa1 * bm2;
          out.emplace_back(first.scaled(c * rc * lc * dc), second);
        }
      }
    }
  }
  return out;
}

}  // namespace qcv
