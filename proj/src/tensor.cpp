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

#include "qcv/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace qcv {

FactorSpec plain_factor(const AlgebraShape& shape) { return FactorSpec{shape, nullptr}; }

FactorSpec localized_factor(const NormalElement& host) {
  return FactorSpec{host.shape(), std::make_shared<NormalElement>(host)};
}

TensorElement::TensorElement(std::vector<FactorSpec> factors)
    : factors_(std::move(factors)), denom_exp_(factors_.size(), 0) {}

TensorElement::TensorElement(std::vector<FactorSpec> factors, std::vector<int> denom_exp)
    : factors_(std::move(factors)), denom_exp_(std::move(denom_exp)) {
  if (denom_exp_.size() != factors_.size())
    throw Error("denominator exponent count mismatch");
  for (size_t f = 0; f < factors_.size(); ++f)
    if (denom_exp_[f] != 0 && !factors_[f].host)
      throw HostMismatch("denominator exponent on a factor without a host");
}

TensorElement TensorElement::unit(std::vector<FactorSpec> factors) {
  TensorElement t(std::move(factors));
  t.terms_[TensorKey(t.factors_.size(), Monomial::one())] = RatFunc(1);
  return t;
}

TensorElement TensorElement::pure(std::vector<FactorSpec> factors,
                                  const std::vector<Element>& parts) {
  if (parts.size() != factors.size()) throw Error("factor/part count mismatch");
  TensorElement out = unit(std::move(factors));
  for (size_t f = 0; f < parts.size(); ++f)
    out = out * embed_factor(out.factors_, f, parts[f]);
  return out;
}

void TensorElement::add_term(const TensorKey& key, const RatFunc& c) {
  if (c.is_zero()) return;
  if (key.size() != factors_.size()) throw Error("tensor key arity mismatch");
  for (size_t f = 0; f < key.size(); ++f)
    if (!key[f].fits(factors_[f].shape)) throw IndexOutOfShape("tensor key outside factor shape");
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::check_same_structure(const TensorElement& o, const char* op) const {
  if (factors_.size() != o.factors_.size())
    throw ShapeMismatch(std::string("tensor arity mismatch in ") + op);
  for (size_t f = 0; f < factors_.size(); ++f)
    if (!factors_[f].compatible(o.factors_[f]))
      throw ShapeMismatch(std::string("tensor factor mismatch in ") + op);
}

TensorElement TensorElement::operator-() const {
  TensorElement r(factors_, denom_exp_);
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  check_same_structure(o, "+");
  auto [a, b] = aligned(*this, o);
  for (const auto& [k, c] : b.terms_) a.add_term(k, c);
  return a;
}

TensorElement TensorElement::operator-(const TensorElement& o) const { return *this + (-o); }

TensorElement TensorElement::operator*(const TensorElement& o) const {
  check_same_structure(o, "*");
  const size_t nf = factors_.size();
  std::vector<int> exps(nf);
  for (size_t f = 0; f < nf; ++f) exps[f] = denom_exp_[f] + o.denom_exp_[f];
  TensorElement r(factors_, exps);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      // d_f^{-s} m  =  twist_f(m)^{-s} m d_f^{-s}
      RatFunc coef = ca * cb;
      for (size_t f = 0; f < nf; ++f) {
        if (denom_exp_[f] == 0 || kb[f].is_one()) continue;
        coef *= factors_[f].host->twist(kb[f]).pow(-denom_exp_[f]);
      }
      if (coef.is_zero()) continue;
      // factor-wise straightening, then the outer product of the expansions
      std::vector<Element> parts;
      parts.reserve(nf);
      for (size_t f = 0; f < nf; ++f) {
        Element pf = Element::monomial(factors_[f].shape, ka[f]) *
                     Element::monomial(factors_[f].shape, kb[f]);
        parts.push_back(std::move(pf));
      }
      TensorKey key(nf);
      auto emit = [&](auto&& self, size_t f, const RatFunc& acc) -> void {
        if (f == nf) {
          r.add_term(key, acc);
          return;
        }
        for (const auto& [m, c] : parts[f].terms()) {
          key[f] = m;
          self(self, f + 1, acc * c);
        }
      };
      emit(emit, 0, coef);
    }
  }
  return r;
}

TensorElement TensorElement::scaled(const RatFunc& c) const {
  TensorElement r(factors_, denom_exp_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

TensorElement TensorElement::with_denom_exp(const std::vector<int>& target) const {
  if (target.size() != factors_.size()) throw Error("exponent arity mismatch");
  std::vector<Element> boosts;
  boosts.reserve(factors_.size());
  for (size_t f = 0; f < factors_.size(); ++f) {
    int diff = target[f] - denom_exp_[f];
    if (diff < 0) throw Error("cannot lower a denominator exponent directly");
    if (diff > 0 && !factors_[f].host) throw HostMismatch("raising exponent without host");
    boosts.push_back(diff == 0 ? Element::unit(factors_[f].shape)
                               : factors_[f].host->element().pow(diff));
  }
  TensorElement r(factors_, target);
  for (const auto& [k, c] : terms_) {
    std::vector<Element> parts;
    parts.reserve(factors_.size());
    bool trivial = true;
    for (size_t f = 0; f < factors_.size(); ++f) {
      if (boosts[f].terms().size() == 1 && boosts[f].terms().begin()->first.is_one()) {
        parts.push_back(Element::monomial(factors_[f].shape, k[f]));
      } else {
        trivial = false;
        parts.push_back(Element::monomial(factors_[f].shape, k[f]) * boosts[f]);
      }
    }
    if (trivial) {
      r.add_term(k, c);
      continue;
    }
    TensorKey key(factors_.size());
    auto emit = [&](auto&& self, size_t f, const RatFunc& acc) -> void {
      if (f == factors_.size()) {
        r.add_term(key, acc);
        return;
      }
      for (const auto& [m, cc] : parts[f].terms()) {
        key[f] = m;
        self(self, f + 1, acc * cc);
      }
    };
    emit(emit, 0, c);
  }
  return r;
}

std::pair<TensorElement, TensorElement> aligned(const TensorElement& a, const TensorElement& b) {
  std::vector<int> target(a.denom_exp().size());
  for (size_t f = 0; f < target.size(); ++f)
    target[f] = std::max(a.denom_exp()[f], b.denom_exp()[f]);
  return {a.with_denom_exp(target), b.with_denom_exp(target)};
}

bool TensorElement::operator==(const TensorElement& o) const {
  check_same_structure(o, "==");
  if (denom_exp_ == o.denom_exp_) return terms_ == o.terms_;
  auto [a, b] = aligned(*this, o);
  return a.terms_ == b.terms_;
}

std::vector<int> TensorElement::key_degrees(const TensorKey& k) {
  std::vector<int> d(k.size());
  for (size_t f = 0; f < k.size(); ++f) d[f] = k[f].degree();
  return d;
}

bool TensorElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d0 = key_degrees(terms_.begin()->first);
  for (const auto& [k, c] : terms_)
    if (key_degrees(k) != d0) return false;
  return true;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << scalar_prefix(c);
    for (size_t f = 0; f < k.size(); ++f) {
      if (f) os << " (x) ";
      os << k[f].str(factors_[f].shape.label);
    }
    first = false;
  }
  for (size_t f = 0; f < denom_exp_.size(); ++f)
    if (denom_exp_[f] != 0)
      os << "  [" << factors_[f].host->name() << "^-" << denom_exp_[f] << " on factor " << f
         << "]";
  return os.str();
}

TensorElement as_tensor(const Element& x) {
  TensorElement t({plain_factor(x.shape())});
  for (const auto& [m, c] : x.terms()) t.add_term({m}, c);
  return t;
}

TensorElement embed_factor(std::vector<FactorSpec> factors, size_t idx, const Element& x) {
  TensorElement t(std::move(factors));
  if (idx >= t.factor_count()) throw Error("factor index out of range");
  if (x.shape() != t.factors()[idx].shape) throw ShapeMismatch("embed_factor shape mismatch");
  TensorKey key(t.factor_count(), Monomial::one());
  for (const auto& [m, c] : x.terms()) {
    key[idx] = m;
    t.add_term(key, c);
  }
  return t;
}

TensorElement permute_factors(const TensorElement& v, const std::vector<size_t>& perm) {
  if (perm.size() != v.factor_count()) throw Error("permutation arity mismatch");
  std::vector<FactorSpec> factors;
  std::vector<int> exps;
  factors.reserve(perm.size());
  for (size_t i : perm) {
    factors.push_back(v.factors().at(i));
    exps.push_back(v.denom_exp().at(i));
  }
  TensorElement r(std::move(factors), std::move(exps));
  for (const auto& [k, c] : v.terms()) {
    TensorKey key;
    key.reserve(perm.size());
    for (size_t i : perm) key.push_back(k[i]);
    r.add_term(key, c);
  }
  return r;
}

TensorElement outer(const TensorElement& u, const TensorElement& v) {
  std::vector<FactorSpec> factors = u.factors();
  factors.insert(factors.end(), v.factors().begin(), v.factors().end());
  std::vector<int> exps = u.denom_exp();
  exps.insert(exps.end(), v.denom_exp().begin(), v.denom_exp().end());
  TensorElement r(std::move(factors), std::move(exps));
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      TensorKey k = ku;
      k.insert(k.end(), kv.begin(), kv.end());
      r.add_term(k, cu * cv);
    }
  }
  return r;
}

}  // namespace qcv
