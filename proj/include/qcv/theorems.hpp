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

#include <cstdint>

#include "qcv/localized.hpp"

namespace qcv {

/// Symbolic mode decides everything exactly over Q(q). Numeric mode runs the
/// linear algebra at a fixed rational q0; its verdicts are advisory only
/// (specialization can lose rank) and are flagged as such in reports.
enum class QMode { Symbolic, Numeric };

struct SuiteOptions {
  QMode mode = QMode::Symbolic;
  Rational q0 = Rational(0);
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string cache_dir;  // empty disables the cache
};

struct ComponentRecord {
  std::string index;
  std::vector<std::pair<std::string, long>> dims;
  bool pass = true;
  std::string witness;  // set on failure
  bool advisory = false;
};

struct SuiteReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ComponentRecord> components;
  std::vector<std::string> notes;
  bool pass = true;
  double elapsed_ms = 0.0;

  void add(ComponentRecord rec);
};

struct BiRange {
  int i0 = 0, i1 = 0;
  int j0 = 0, j1 = 0;
  int max_total = -1;  // when >= 0, keep only components with i + j <= max_total
};

/// Kernel of the multiplication comorphism equals the determinantal ideal,
/// degree by degree: ker(theta) = I_{t+1} on each total-degree component.
SuiteReport verify_sft(int m, int n, int t, int max_degree, const SuiteOptions& opts = {});

/// Coinvariants of the combined coaction equal the theta-image on diagonal
/// bidegree components and vanish off the diagonal.
SuiteReport verify_fft(int m, int t, int n, const BiRange& range, const SuiteOptions& opts = {});

/// Semi-coinvariant components equal the product of the minor subalgebras
/// with the theta-image; components with t not dividing i-j vanish.
SuiteReport verify_sl_fft(int m, int t, int n, const BiRange& range,
                          const SuiteOptions& opts = {});

/// Preimage of the principal ideal generated by the distinguished minor pair:
/// theta-image cap <dY (x) dZ> = theta(<dX>) componentwise (square case).
SuiteReport verify_preimage_dx(int n, int t, int max_degree, const SuiteOptions& opts = {});

/// Preimage of <dY^s (x) 1> and <1 (x) dZ^s>: the s-fold lower-left /
/// upper-row minor ideals, componentwise (square case).
SuiteReport verify_preimage_P(int n, int t, int s, int max_degree,
                              const SuiteOptions& opts = {});

/// Umbrella suite: Hopf axioms, minor identities, coaction properties,
/// localization identities, all at the given shape and degree bound.
SuiteReport verify_structure(int m, int t, int n, int degree_bound,
                             const SuiteOptions& opts = {});

// Focused suites (also used as acceptance criteria):
SuiteReport verify_hopf_axioms(int t, const SuiteOptions& opts = {});
SuiteReport verify_minor_comultiplication(int l, const SuiteOptions& opts = {});
SuiteReport verify_minor_laplace_agreement(int max_rows, int max_cols,
                                           const SuiteOptions& opts = {});
SuiteReport verify_normality(int max_mn, int max_t, const SuiteOptions& opts = {});
SuiteReport verify_istar_jstar_identity(int n, int t, int samples, const SuiteOptions& opts = {});
SuiteReport verify_coinvariant_closure(int m, int t, int n, int max_diag,
                                       const SuiteOptions& opts = {});
SuiteReport verify_xi_coinvariants(int n, int t, int samples, const SuiteOptions& opts = {});
SuiteReport verify_torus_weights(const std::vector<std::tuple<int, int, int>>& shapes,
                                 int samples, const SuiteOptions& opts = {});

/// Deterministic random element with small coefficients (seeded).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next_u64();
  int next(int bound);  // uniform-ish in [0, bound)
  RatFunc next_coeff();
  Monomial next_monomial(const AlgebraShape& s, int degree);
  Element next_element(const AlgebraShape& s, int max_degree, int max_terms);

 private:
  std::uint64_t state_;
};

}  // namespace qcv
