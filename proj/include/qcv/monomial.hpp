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

#include <string>
#include <vector>

#include "qcv/shape.hpp"

namespace qcv {

/// PBW basis monomial: a non-decreasing sequence of generator positions.
/// Monomials are totally ordered by (degree, lexicographic), which fixes all
/// basis enumerations and matrix column orders in the engine.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Gen> sorted_gens) : gens_(std::move(sorted_gens)) {
    for (size_t i = 1; i < gens_.size(); ++i)
      if (gens_[i] < gens_[i - 1]) throw Error("monomial generators out of order");
  }
  static Monomial one() { return Monomial(); }
  static Monomial of(const Gen& g) { return Monomial(std::vector<Gen>{g}); }

  int degree() const { return static_cast<int>(gens_.size()); }
  bool is_one() const { return gens_.empty(); }
  const std::vector<Gen>& gens() const { return gens_; }

  bool operator==(const Monomial& o) const { return gens_ == o.gens_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const {
    if (gens_.size() != o.gens_.size()) return gens_.size() < o.gens_.size();
    return gens_ < o.gens_;
  }
  bool operator>(const Monomial& o) const { return o < *this; }

  /// Exponent counts per row and per column index.
  std::pair<std::vector<int>, std::vector<int>> multidegree(const AlgebraShape& s) const {
    std::vector<int> r(s.rows, 0), c(s.cols, 0);
    for (const Gen& g : gens_) {
      check_gen(s, g);
      ++r[g.row - 1];
      ++c[g.col - 1];
    }
    return {r, c};
  }

  bool fits(const AlgebraShape& s) const {
    for (const Gen& g : gens_)
      if (g.row < 1 || g.row > s.rows || g.col < 1 || g.col > s.cols) return false;
    return true;
  }

  std::string str(Label label) const {
    if (gens_.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < gens_.size()) {
      size_t j = i;
      while (j < gens_.size() && gens_[j] == gens_[i]) ++j;
      if (!out.empty()) out += "*";
      out += label_char(label);
      out += "[" + std::to_string(gens_[i].row) + "," + std::to_string(gens_[i].col) + "]";
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

 private:
  std::vector<Gen> gens_;
};

}  // namespace qcv
