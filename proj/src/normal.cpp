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

#include "qcv/normal.hpp"

namespace qcv {

NormalElement NormalElement::discover(const Element& d, std::string name) {
  if (d.is_zero()) throw NotNormal("zero element is not accepted as normal");
  const AlgebraShape& s = d.shape();
  std::map<Gen, RatFunc> table;
  for (int r = 1; r <= s.rows; ++r) {
    for (int c = 1; c <= s.cols; ++c) {
      Gen g{r, c};
      Element ge = Element::generator(s, r, c);
      Element dg = d * ge;
      Element gd = ge * d;
      if (gd.is_zero()) throw NotNormal("g*d vanished for " + name);
      const auto& [m0, c0] = *gd.terms().begin();
      RatFunc ratio = dg.coeff(m0) / c0;
      if (dg != gd.scaled(ratio))
        throw NotNormal("no commutation scalar for generator (" + std::to_string(r) + "," +
                        std::to_string(c) + ") of " + name);
      if (!ratio.is_unit_monomial())
        throw NotNormal("commutation scalar of " + name + " is not of the form r*q^k");
      table.emplace(g, std::move(ratio));
    }
  }
  return NormalElement(d, std::move(table), std::move(name));
}

RatFunc NormalElement::scalar(const Gen& g) const {
  auto it = scalars_.find(g);
  if (it == scalars_.end()) throw IndexOutOfShape("generator outside host of normal element");
  return it->second;
}

RatFunc NormalElement::twist(const Monomial& m) const {
  RatFunc acc(1);
  for (const Gen& g : m.gens()) acc *= scalar(g);
  return acc;
}

MinorIndex lower_left_minor(const AlgebraShape& shape, int t) {
  if (t < 1 || t > shape.rows || t > shape.cols)
    throw IndexOutOfShape("no t x t minor in " + shape.str());
  std::vector<int> rows, cols;
  for (int i = shape.rows - t + 1; i <= shape.rows; ++i) rows.push_back(i);
  for (int j = 1; j <= t; ++j) cols.push_back(j);
  return MinorIndex(std::move(rows), std::move(cols));
}

NormalElement normal_lower_left(const AlgebraShape& shape, int t) {
  Element d = quantum_minor(shape, lower_left_minor(shape, t));
  std::string name = std::string("d") + label_char(shape.label) + "_" + std::to_string(t);
  return NormalElement::discover(d, std::move(name));
}

}  // namespace qcv
