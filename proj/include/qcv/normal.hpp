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

#include "qcv/element.hpp"

namespace qcv {

/// A normal element d of its host algebra together with the discovered
/// commutation scalars: d*g = c_g * g * d for every generator g. The engine
/// requires each c_g to be a unit of the form r*q^k, which makes the
/// commutation automorphism tau(g) = c_g*g diagonal and so computable
/// monomial-wise.
class NormalElement {
 public:
  /// Verifies normality by straightening d*g and g*d for every generator.
  /// Throws NotNormal when no diagonal scalar table exists.
  static NormalElement discover(const Element& d, std::string name);

  /// Rebuilds from stored parts (cache path); the table is taken as-is.
  static NormalElement restore(Element e, std::map<Gen, RatFunc> scalars, std::string name) {
    return NormalElement(std::move(e), std::move(scalars), std::move(name));
  }

  const AlgebraShape& shape() const { return element_.shape(); }
  const Element& element() const { return element_; }
  const std::string& name() const { return name_; }
  const std::map<Gen, RatFunc>& scalars() const { return scalars_; }
  RatFunc scalar(const Gen& g) const;

  /// Product of the commutation scalars over the generators of m: the factor
  /// picked up when d moves across m, d*m = twist(m)*m*d.
  RatFunc twist(const Monomial& m) const;

  bool operator==(const NormalElement& o) const {
    return element_ == o.element_ && scalars_ == o.scalars_;
  }

 private:
  NormalElement(Element e, std::map<Gen, RatFunc> s, std::string name)
      : element_(std::move(e)), scalars_(std::move(s)), name_(std::move(name)) {}
  Element element_;
  std::map<Gen, RatFunc> scalars_;
  std::string name_;
};

/// Lower-left t x t minor index of a shape: last t rows, first t columns.
/// All four distinguished minors (the X, Y, Z determinant-like elements and
/// the quantum determinant of the square algebra) are of this form in their
/// own shapes.
MinorIndex lower_left_minor(const AlgebraShape& shape, int t);

/// Convenience: the lower-left t x t minor as a discovered normal element.
NormalElement normal_lower_left(const AlgebraShape& shape, int t);

}  // namespace qcv
