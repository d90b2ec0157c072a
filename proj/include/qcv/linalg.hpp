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

#include <optional>
#include <vector>

#include "qcv/tensor.hpp"

namespace qcv {

/// Ordered monomial-tuple basis of one graded component of an algebra or a
/// tensor product (at fixed per-factor denominator exponents). All coordinate
/// computations in the engine happen relative to such frames, and the key
/// order is canonical, so results are reproducible across runs.
class Frame {
 public:
  static Frame component(const FactorSpec& factor, int degree);
  static Frame tensor_component(std::vector<FactorSpec> factors, const std::vector<int>& degrees,
                                std::vector<int> denom_exp = {});
  static Frame from_keys(std::vector<FactorSpec> factors, std::vector<int> denom_exp,
                         std::vector<TensorKey> keys);

  int size() const { return static_cast<int>(keys_.size()); }
  const std::vector<FactorSpec>& factors() const { return factors_; }
  const std::vector<int>& denom_exp() const { return denom_exp_; }
  const std::vector<TensorKey>& keys() const { return keys_; }
  const TensorKey& key(int i) const { return keys_[i]; }
  std::string key_string(int i) const;
  bool compatible(const Frame& o) const;

  /// Sparse coordinates; throws VectorOutsideFrame when the element does not
  /// live in this component, FrameMismatch on structural mismatch.
  std::vector<std::pair<int, RatFunc>> coords(const TensorElement& v) const;
  TensorElement element(const std::vector<std::pair<int, RatFunc>>& coords) const;

 private:
  std::vector<FactorSpec> factors_;
  std::vector<int> denom_exp_;
  std::vector<TensorKey> keys_;
  std::map<TensorKey, int> index_;
  void build_index();
};

using SparseVec = std::vector<std::pair<int, RatFunc>>;  // sorted by coordinate

/// Subspace of a frame component in canonical reduced row-echelon form:
/// pivot entries are 1, pivot columns are cleared elsewhere, rows ordered by
/// pivot column. Equal subspaces have structurally equal matrices.
class Subspace {
 public:
  explicit Subspace(Frame frame) : frame_(std::move(frame)) {}
  Subspace(Frame frame, std::vector<SparseVec> rref_rows, std::vector<int> pivots)
      : frame_(std::move(frame)), rows_(std::move(rref_rows)), pivots_(std::move(pivots)) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  const Frame& frame() const { return frame_; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  TensorElement basis_element(int i) const { return frame_.element(rows_[i]); }

 private:
  Frame frame_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
};

Subspace span(const std::vector<TensorElement>& vectors, const Frame& frame);
Subspace span_coords(std::vector<SparseVec> vectors, const Frame& frame);

struct KernelResult {
  Subspace kernel;  // in the domain frame
  int rank = 0;     // rank of the map; rank + kernel.dim() == domain size
};

/// Kernel of the linear map sending domain basis vector i to images[i]. The
/// codomain component is discovered from the images (their denominator
/// exponents are aligned first).
KernelResult kernel_of(const std::vector<TensorElement>& images, const Frame& domain);

bool contains(const Subspace& s, const TensorElement& v);
bool contains(const Subspace& s, const SparseVec& v);
Subspace intersect(const Subspace& a, const Subspace& b);
bool equal(const Subspace& a, const Subspace& b);

/// First basis vector of `a` not contained in `b`, if any (fail witnesses).
std::optional<TensorElement> difference_witness(const Subspace& a, const Subspace& b);

/// Coefficients x with target = sum_i x_i vectors[i], if solvable.
std::optional<std::vector<RatFunc>> solve_combination(const std::vector<TensorElement>& vectors,
                                                      const TensorElement& target);

/// Dimension of the span of the vectors after evaluating every coefficient at
/// q = q0 (advisory mode; exact over Q at the specialization point).
int span_dim_at(const std::vector<TensorElement>& vectors, const Frame& frame,
                const Rational& q0);
struct NumericKernel {
  int dim = 0;
  int rank = 0;
  std::vector<std::vector<std::pair<int, Rational>>> rows;  // canonical RREF
};
NumericKernel kernel_at(const std::vector<TensorElement>& images, const Frame& domain,
                        const Rational& q0);
/// RREF rows of a span at q = q0 (canonical; usable for equality checks).
std::vector<std::vector<std::pair<int, Rational>>> span_rref_at(
    const std::vector<TensorElement>& vectors, const Frame& frame, const Rational& q0);

}  // namespace qcv
