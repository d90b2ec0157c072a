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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcv/normal.hpp"

namespace qcv {

/// One tensor factor: an algebra, optionally localized at a registered normal
/// element whose nonnegative inverse powers the factor may carry.
struct FactorSpec {
  AlgebraShape shape;
  std::shared_ptr<const NormalElement> host;  // null for a plain factor

  bool compatible(const FactorSpec& o) const {
    if (shape != o.shape) return false;
    if (!host != !o.host) return false;
    return !host || *host == *o.host;
  }
};

FactorSpec plain_factor(const AlgebraShape& shape);
FactorSpec localized_factor(const NormalElement& host);

using TensorKey = std::vector<Monomial>;

/// Element of a plain tensor product of quantized matrix algebras, with one
/// shared inverse-host exponent per factor: the stored terms t together with
/// exponents (s_1..s_k) denote  sum_t c_t * (m_1 d_1^{-s_1}) x ... x
/// (m_k d_k^{-s_k}).  Multiplication is factor-wise; moving d_f^{-s} across a
/// monomial only costs the diagonal twist scalar of the host.
class TensorElement {
 public:
  explicit TensorElement(std::vector<FactorSpec> factors);
  TensorElement(std::vector<FactorSpec> factors, std::vector<int> denom_exp);

  static TensorElement unit(std::vector<FactorSpec> factors);
  /// Outer product of single-factor elements, coefficient 1 each.
  static TensorElement pure(std::vector<FactorSpec> factors, const std::vector<Element>& parts);

  size_t factor_count() const { return factors_.size(); }
  const std::vector<FactorSpec>& factors() const { return factors_; }
  const std::vector<int>& denom_exp() const { return denom_exp_; }
  const std::map<TensorKey, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TensorKey& key, const RatFunc& c);

  TensorElement operator-() const;
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const TensorElement& o) const;
  TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }
  bool operator==(const TensorElement& o) const;
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  TensorElement scaled(const RatFunc& c) const;

  /// Same element with every factor exponent raised to the given value
  /// (numerators absorb the difference as right factors of the host element).
  TensorElement with_denom_exp(const std::vector<int>& target) const;

  /// Per-factor total degrees of a term key.
  static std::vector<int> key_degrees(const TensorKey& k);

  /// The element lives in one graded component per factor?
  bool is_homogeneous() const;

  std::string str() const;

 private:
  std::vector<FactorSpec> factors_;
  std::vector<int> denom_exp_;
  std::map<TensorKey, RatFunc> terms_;
  void check_same_structure(const TensorElement& o, const char* op) const;
};

/// Common-exponent forms of the two elements (for comparison/subtraction).
std::pair<TensorElement, TensorElement> aligned(const TensorElement& a, const TensorElement& b);

/// x as a 1-factor tensor; and embedding of an Element into factor `idx` of a
/// unit tensor.
TensorElement as_tensor(const Element& x);
TensorElement embed_factor(std::vector<FactorSpec> factors, size_t idx, const Element& x);

/// Outer product u (x) v of two tensor elements (concatenates factors).
TensorElement outer(const TensorElement& u, const TensorElement& v);

/// Reorders factors: result factor i is source factor perm[i]. Plain tensor
/// products of algebras carry no braiding, so no coefficient changes.
TensorElement permute_factors(const TensorElement& v, const std::vector<size_t>& perm);

}  // namespace qcv
