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

#include "qcv/hopf.hpp"

namespace qcv {

struct BiDegree {
  int i = 0;
  int j = 0;
  auto operator<=>(const BiDegree&) const = default;
};

AlgebraShape x_shape(int m, int n);
AlgebraShape y_shape(int m, int t);
AlgebraShape z_shape(int t, int n);

/// Comultiplication-style algebra morphism into the two-factor product:
/// X[i,j] -> sum_k Y[i,k] (x) Z[k,j]. This is the faithful model of the
/// induced map on the rank-truncated quotient as well (that map is injective),
/// so image computations stand in for quotient computations everywhere.
TensorElement theta_star(const Element& x, int t);

/// Right coaction on the left matrix factor: Y[i,j] -> sum_k Y[i,k] (x) T[k,j].
TensorElement rho_star(const Element& y);

/// Left coaction on the right matrix factor: Z[i,j] -> sum_k T[i,k] (x) Z[k,j].
TensorElement lambda_star(const Element& z);

/// The combined left comodule structure map on a two-factor tensor
/// (localized factors carry their denominators through the coactions):
/// gamma(a (x) b) = sum S(a_1) b_{-1} (x) a_0 (x) b_0. Linear, not an algebra
/// morphism.
TensorElement gamma_star(const TensorElement& v);

/// gamma(v) == 1 (x) v.
bool is_coinvariant(const TensorElement& v);

/// gamma(v) == det^{-s} (x) v (negative s puts det^{|s|} in the numerator).
bool is_semi_coinvariant(const TensorElement& v, int s);

/// Componentwise criterion: every nonzero bidegree component (i,j) must have
/// t | (i-j) and be semi-coinvariant with s = (i-j)/t.
bool is_sl_coinvariant(const TensorElement& v);

/// Trivial-coaction (x) regular coaction on a tensor whose last factor is the
/// localized Hopf algebra: ... (x) h  ->  h_1 (x) ... (x) h_2.
TensorElement xi_star(const TensorElement& v);
bool is_xi_coinvariant(const TensorElement& v);

/// (pi' (x) id) applied after gamma: true iff the image is T^{j-i} (x) v for
/// the expected bidegree. Throws NotHomogeneous when v is not homogeneous.
bool torus_weight_matches(const TensorElement& v, const BiDegree& expected);

std::map<std::pair<int, int>, TensorElement> bidegree_components(const TensorElement& v);

}  // namespace qcv
