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

#include "qcv/normal.hpp"

namespace qcv {

/// On-disk result cache keyed by (shape, degree, engine version). Corrupt or
/// unreadable entries are ignored with a warning on stderr and recomputed;
/// hits and misses produce identical data.
std::vector<Monomial> cached_component_basis(const std::string& cache_dir, const AlgebraShape& s,
                                             int degree);

/// Lower-left t x t minor with its commutation table, cached on disk.
NormalElement cached_lower_left_normal(const std::string& cache_dir, const AlgebraShape& s,
                                       int t);

}  // namespace qcv
