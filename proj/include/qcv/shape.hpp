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

#include <compare>
#include <string>

#include "qcv/common.hpp"

namespace qcv {

/// Generator family tag. The four quantized matrix coordinate rings in play
/// carry distinct letters so that elements of different algebras never mix.
enum class Label : unsigned char { X, Y, Z, T };

inline char label_char(Label l) {
  switch (l) {
    case Label::X: return 'X';
    case Label::Y: return 'Y';
    case Label::Z: return 'Z';
    case Label::T: return 'T';
  }
  return '?';
}

struct AlgebraShape {
  int rows = 0;
  int cols = 0;
  Label label = Label::X;

  auto operator<=>(const AlgebraShape&) const = default;

  int generator_count() const { return rows * cols; }
  std::string str() const {
    return std::string(1, label_char(label)) + "(" + std::to_string(rows) + "x" +
           std::to_string(cols) + ")";
  }
};

inline AlgebraShape shape_of(Label l, int rows, int cols) {
  if (rows < 1 || cols < 1) throw ShapeMismatch("shape dimensions must be positive");
  return AlgebraShape{rows, cols, l};
}

/// One generator position, 1-based. Ordered row-major lexicographically;
/// this is the PBW order of the whole engine.
struct Gen {
  int row = 1;
  int col = 1;

  auto operator<=>(const Gen&) const = default;
};

inline void check_gen(const AlgebraShape& s, const Gen& g) {
  if (g.row < 1 || g.row > s.rows || g.col < 1 || g.col > s.cols)
    throw IndexOutOfShape("generator (" + std::to_string(g.row) + "," + std::to_string(g.col) +
                          ") outside " + s.str());
}

}  // namespace qcv
