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

#include <json.hpp>

#include "qcv/localized.hpp"
#include "qcv/theorems.hpp"

namespace qcv {

using Json = nlohmann::ordered_json;

// Stable serialization of the core values (also used by the CLI cache).
Json shape_to_json(const AlgebraShape& s);
AlgebraShape shape_from_json(const Json& j);
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);
Json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);
Json element_to_json(const Element& e);
Element element_from_json(const Json& j);
Json tensor_to_json(const TensorElement& v);
Json localized_to_json(const LocalizedElement& v);
Json gl_to_json(const GLElement& v);
Json normal_to_json(const NormalElement& n);
NormalElement normal_from_json(const Json& j);

/// Dimension and pivot monomials of a subspace, for report attachments.
Json subspace_to_json(const Subspace& s);

Json suite_to_json(const SuiteReport& rep, bool include_timing = true);

/// Human-readable fixed-width table of one suite.
std::string suite_table(const SuiteReport& rep);

}  // namespace qcv
