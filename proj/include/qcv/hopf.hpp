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

#include "qcv/linalg.hpp"
#include "qcv/tensor.hpp"

namespace qcv {

/// The square t x t algebra with generator family T.
AlgebraShape gl_shape(int t);

/// The quantum determinant of the t x t algebra, with commutation table
/// (all scalars 1: it is central). Cached per t.
const NormalElement& gl_det(int t);

/// Tensor factor for the t x t Hopf algebra localized at its determinant.
FactorSpec gl_factor(int t);

/// Element of the localized t x t Hopf algebra: numerator times det^{-s}.
/// Equality is decided by cross-multiplication (the determinant is central);
/// canonical() strips determinant factors from the numerator when exact
/// division (decided on graded components) permits.
class GLElement {
 public:
  explicit GLElement(int t) : num_(gl_shape(t)) {}
  GLElement(Element num, int denom_exp);

  static GLElement zero(int t) { return GLElement(t); }
  static GLElement unit(int t) { return GLElement(Element::unit(gl_shape(t)), 0); }
  static GLElement generator(int t, int i, int j) {
    return GLElement(Element::generator(gl_shape(t), i, j), 0);
  }
  static GLElement det(int t) { return GLElement(gl_det(t).element(), 0); }
  static GLElement det_inverse(int t) { return GLElement(Element::unit(gl_shape(t)), 1); }

  int t() const { return num_.shape().rows; }
  const Element& num() const { return num_; }
  int denom_exp() const { return denom_exp_; }
  bool is_zero() const { return num_.is_zero(); }

  GLElement operator-() const { return GLElement(-num_, denom_exp_); }
  GLElement operator+(const GLElement& o) const;
  GLElement operator-(const GLElement& o) const { return *this + (-o); }
  GLElement operator*(const GLElement& o) const;  // no canonicalization
  GLElement scaled(const RatFunc& c) const { return GLElement(num_.scaled(c), denom_exp_); }

  /// Multiplies by det^k (k of either sign; negative k raises denom_exp).
  GLElement times_det_power(int k) const;

  /// Cross-multiplied equality: a*det^r == b*det^s.
  bool operator==(const GLElement& o) const;
  bool operator!=(const GLElement& o) const { return !(*this == o); }

  bool is_scalar() const;          // c * 1 after canonicalization
  RatFunc scalar_value() const;    // requires is_scalar()

  /// Strips common determinant factors from the numerator where exact
  /// division (a linear solve on graded components) succeeds.
  GLElement canonical() const;

  std::string str() const;

 private:
  Element num_;
  int denom_exp_ = 0;
};

/// Delta as an algebra morphism on any square-shape element:
/// generator (i,j) -> sum_k (i,k) (x) (k,j). Plain (hostless) factors.
TensorElement comultiply_matrix(const Element& x);

/// Delta on the localized Hopf algebra; the determinant is group-like, so
/// det^{-s} contributes exponent s on both output factors.
TensorElement gl_comultiply(const GLElement& h);

/// Counit: generator (i,j) -> delta_ij, det^{-1} -> 1.
RatFunc gl_counit(const GLElement& h);

/// Antipode: anti-morphism from S(T[r,c]) = (-q)^{r-c} * A_{c,r} * det^{-1},
/// where A_{c,r} deletes row c and column r; S(det) = det^{-1}.
GLElement antipode(const GLElement& h);

/// Two-sided inverse of the antipode, from the squared-antipode grading
/// twist: Sinv(T[r,c]) = q^{2(c-r)} S(T[r,c]), extended anti-multiplicatively.
GLElement antipode_inverse(const GLElement& h);

/// Throws unless S(Sinv(g)) = g = Sinv(S(g)) on the full generator set and
/// det^{-1}. Theorem suites call this before relying on the inverse antipode.
void check_antipode_inverse(int t);

/// Laurent polynomial in the single group-like torus generator.
class TorusPoly {
 public:
  TorusPoly() = default;
  static TorusPoly term(int exp, RatFunc c);
  bool is_zero() const { return c_.empty(); }
  const std::map<int, RatFunc>& terms() const { return c_; }
  TorusPoly operator+(const TorusPoly& o) const;
  TorusPoly operator*(const TorusPoly& o) const;
  bool operator==(const TorusPoly& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  std::map<int, RatFunc> c_;
};

/// Torus projection: T[i,i] -> T, T[i,j] -> 0 for i != j, det -> T^t.
TorusPoly torus_project(const GLElement& h);

// Factor-level Hopf plumbing used by the coaction maps and the axiom checks.
// All of these act on one factor of a tensor and keep the others untouched.
TensorElement comultiply_factor(const TensorElement& v, size_t idx);
TensorElement counit_factor(const TensorElement& v, size_t idx);
TensorElement multiply_factors(const TensorElement& v, size_t idx);  // folds idx, idx+1
TensorElement antipode_factor(const TensorElement& v, size_t idx, bool inverse = false);

namespace detail {
/// Antipode without the canonical stripping pass (hot loops).
GLElement antipode_impl(const GLElement& h, bool inverse);
}  // namespace detail

}  // namespace qcv
