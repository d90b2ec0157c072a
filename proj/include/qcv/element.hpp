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

#include <map>
#include <string>
#include <vector>

#include "qcv/monomial.hpp"
#include "qcv/ratfunc.hpp"

namespace qcv {

/// Element of a quantized matrix coordinate ring, expressed in the PBW basis.
/// Multiplication straightens the concatenated generator sequence with the
/// rewrite rules
///   X[a,b]X[a,d] -> q^{-1} X[a,d]X[a,b]                      (b > d)
///   X[a,b]X[c,b] -> q^{-1} X[c,b]X[a,b]                      (a > c)
///   X[a,b]X[c,d] -> X[c,d]X[a,b]                             (a > c, b < d)
///   X[a,b]X[c,d] -> X[c,d]X[a,b] - (q - q^{-1}) X[c,b]X[a,d] (a > c, b > d)
/// applied to adjacent out-of-order pairs. Both correction generators lie
/// strictly between the swapped pair in the row-major order, so the system
/// terminates; a step budget guards against bugs.
class Element {
 public:
  explicit Element(const AlgebraShape& shape) : shape_(shape) {}
  static Element zero(const AlgebraShape& s) { return Element(s); }
  static Element unit(const AlgebraShape& s) {
    Element e(s);
    e.terms_[Monomial::one()] = RatFunc(1);
    return e;
  }
  static Element generator(const AlgebraShape& s, int row, int col) {
    Gen g{row, col};
    check_gen(s, g);
    Element e(s);
    e.terms_[Monomial::of(g)] = RatFunc(1);
    return e;
  }
  static Element monomial(const AlgebraShape& s, Monomial m, RatFunc c = RatFunc(1)) {
    Element e(s);
    if (!m.fits(s)) throw IndexOutOfShape("monomial outside " + s.str());
    if (!c.is_zero()) e.terms_[std::move(m)] = std::move(c);
    return e;
  }

  const AlgebraShape& shape() const { return shape_; }
  const std::map<Monomial, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  RatFunc coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const RatFunc& c);

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // straightening product
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  bool operator==(const Element& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  Element scaled(const RatFunc& c) const;
  Element pow(int k) const;  // k >= 0

  /// True when every monomial has the same total degree.
  bool is_homogeneous() const;
  int degree() const;  // max total degree; -1 for zero
  std::map<int, Element> degree_components() const;

  std::string str() const;

 private:
  AlgebraShape shape_;
  std::map<Monomial, RatFunc> terms_;
};

/// Quantum minor index: strictly increasing row and column sets of equal size.
struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;

  MinorIndex(std::vector<int> r, std::vector<int> c);
  int size() const { return static_cast<int>(rows.size()); }
  bool operator==(const MinorIndex&) const = default;
};

/// Sum over permutations: sum_sigma (-q)^{l(sigma)} X[r_1,c_sigma(1)] ... .
Element quantum_minor(const AlgebraShape& shape, const MinorIndex& idx);

/// Same element by first-row Laplace expansion; independent of quantum_minor.
Element laplace_minor(const AlgebraShape& shape, const MinorIndex& idx);

/// All (row,col) index pairs for minors of every size in the shape.
std::vector<MinorIndex> all_minors(const AlgebraShape& shape);
std::vector<MinorIndex> minors_of_size(const AlgebraShape& shape, int l);

/// PBW monomials of the given total degree in graded-lex order.
std::vector<Monomial> graded_component_basis(const AlgebraShape& shape, int degree);

std::pair<std::vector<int>, std::vector<int>> multidegree(const Monomial& m,
                                                          const AlgebraShape& s);

/// Algebra retraction onto the upper-left (rows x cols) block: fixes the
/// generators inside the block, kills all others.
Element retract(const Element& x, int rows, int cols);

std::string scalar_prefix(const RatFunc& c);  // rendering helper

}  // namespace qcv
