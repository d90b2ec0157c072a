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

#pragma once

#include "qcv/comodule.hpp"

namespace qcv {

/// Fraction a * d^{-s} over a single registered normal element d. The twist
/// rule d^{-s} b = tau^{-s}(b) d^{-s} (tau diagonal on generators) makes the
/// product (a d^{-s})(b d^{-r}) = a tau^{-s}(b) d^{-(s+r)} exact; equality is
/// decided by cross-multiplication.
class LocalizedElement {
 public:
  LocalizedElement(std::shared_ptr<const NormalElement> host, Element num, int denom_exp);
  LocalizedElement(const NormalElement& host, Element num, int denom_exp);

  static LocalizedElement embed(const NormalElement& host, const Element& a) {
    return LocalizedElement(host, a, 0);
  }

  const NormalElement& host() const { return *host_; }
  std::shared_ptr<const NormalElement> host_ptr() const { return host_; }
  const Element& num() const { return num_; }
  int denom_exp() const { return denom_exp_; }
  bool is_zero() const { return num_.is_zero(); }

  LocalizedElement operator-() const { return LocalizedElement(host_, -num_, denom_exp_); }
  LocalizedElement operator+(const LocalizedElement& o) const;
  LocalizedElement operator-(const LocalizedElement& o) const { return *this + (-o); }
  LocalizedElement operator*(const LocalizedElement& o) const;
  LocalizedElement scaled(const RatFunc& c) const {
    return LocalizedElement(host_, num_.scaled(c), denom_exp_);
  }
  bool operator==(const LocalizedElement& o) const;
  bool operator!=(const LocalizedElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::shared_ptr<const NormalElement> host_;
  Element num_;
  int denom_exp_;
  void check_host(const LocalizedElement& o) const;
};

// The distinguished normal elements, discovered once per (shape, t) and
// shared. The lower-left t x t minor of each family.
std::shared_ptr<const NormalElement> dX_normal(int n, int t);        // in X(n,n)
std::shared_ptr<const NormalElement> dY_normal(int m, int t);        // in Y(m,t)
std::shared_ptr<const NormalElement> dZ_normal(int t, int n);        // in Z(t,n)

/// Localized tensor factors of the localized two-sided product algebra.
FactorSpec yo_factor(int m, int t);
FactorSpec zo_factor(int t, int n);
std::vector<FactorSpec> vo_factors(int n, int t);

/// T[i,j] -> Z[i,j] (with det^{-1} -> dZ^{-1}): embedding into the localized
/// right matrix algebra.
LocalizedElement inj_gl_to_Z(const GLElement& h, int n);

/// T[i,j] -> Y[n-t+i,j] (with det^{-1} -> dY^{-1}): embedding into the
/// localized left matrix algebra.
LocalizedElement inj_gl_to_Y(const GLElement& h, int n);

/// Element of the localized image model: a certified member of the localized
/// image of theta, stored as its value in the localized product algebra
/// together with a preimage witness (an X-element over dX). Products multiply
/// both representations.
class LocImage {
 public:
  LocImage(LocalizedElement witness, int t);

  int n() const { return witness_.num().shape().rows; }
  int t() const { return t_; }
  const LocalizedElement& witness() const { return witness_; }
  const TensorElement& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  LocImage operator*(const LocImage& o) const;
  LocImage operator+(const LocImage& o) const;
  LocImage scaled(const RatFunc& c) const;

 private:
  LocalizedElement witness_;  // over dX in X(n,n)
  int t_;
  TensorElement value_;  // over (Y°, Z°), diagonal exponents
};

/// Y[i,j] -> x[i,j]; dY^{-1} -> dx^{-1}.
LocImage inj_Y_to_locimage(const LocalizedElement& yloc, int n);
/// Z[i,j] -> x[n-t+i,j]; dZ^{-1} -> dx^{-1}.
LocImage inj_Z_to_locimage(const LocalizedElement& zloc);
/// T[i,j] -> x[n-t+i,j]; det^{-1} -> dx^{-1} (either composite of the above).
LocImage inj_gl_to_locimage(const GLElement& h, int n);

/// Formal sum of (localized-image element) (x) (Hopf element) pairs.
using MGlSum = std::vector<std::pair<LocImage, GLElement>>;

/// i*: multiply the embedded Hopf part into the right factor of the value:
/// (L, h) -> value(L) * (1 (x) inj(h)).
TensorElement i_star(const MGlSum& w, int n, int t);

/// j*: termwise b_0 Sinv(b_{-1}) a_0 (x) S(a_1) b_{-2} with all first-factor
/// products taken in the localized image model. Right inverse of i*.
MGlSum j_star(const TensorElement& v);

}  // namespace qcv
