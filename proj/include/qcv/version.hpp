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

namespace qcv {

inline constexpr const char* kEngineVersion = "0.1.0";

/// Stable hash of the rewrite rules and structure-map conventions the engine
/// is built on; reports carry it so results are traceable to conventions.
std::string relation_fingerprint();

}  // namespace qcv
