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

// End-to-end acceptance suite. Every check is exact symbolic equality; each
// criterion also carries a wall-clock budget and prints one verdict line.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qcv/report.hpp"
#include "qcv/theorems.hpp"

using namespace qcv;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void run_criterion(int id, const std::string& label, double limit_seconds,
                   const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_seconds <= 0 || secs <= limit_seconds;
  bool pass = out.pass && in_time;
  if (!pass) ++g_failures;
  std::printf("criterion %2d: %s  (%.1fs", id, pass ? "PASS" : "FAIL", secs);
  if (limit_seconds > 0) std::printf(" / limit %.0fs", limit_seconds);
  std::printf(")  %s\n", label.c_str());
  if (!out.detail.empty()) std::printf("              %s\n", out.detail.c_str());
  if (out.pass && !in_time) std::printf("              exceeded the time budget\n");
  std::fflush(stdout);
}

long dim_of(const SuiteReport& rep, const std::string& index, const std::string& key) {
  for (const auto& c : rep.components)
    if (c.index == index)
      for (const auto& [k, v] : c.dims)
        if (k == key) return v;
  return -1;
}

std::string first_failure(const SuiteReport& rep) {
  for (const auto& c : rep.components)
    if (!c.pass) return rep.name + "/" + c.index + (c.witness.empty() ? "" : ": " + c.witness);
  return rep.name + ": unexpected failure";
}

Outcome from_suites(const std::vector<SuiteReport>& reps) {
  for (const auto& r : reps)
    if (!r.pass) return {false, first_failure(r)};
  return {true, ""};
}

void strip_timing(Json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";
  SuiteOptions opts;
  opts.seed = 2026;
  opts.jobs = 4;

  run_criterion(1, "Hopf axiom suite for t = 1, 2, 3", 120, [&] {
    std::vector<SuiteReport> reps;
    for (int t = 1; t <= 3; ++t) reps.push_back(verify_hopf_axioms(t, opts));
    return from_suites(reps);
  });

  run_criterion(2, "minor comultiplication identity on the 3x3 algebra", 60, [&] {
    return from_suites({verify_minor_comultiplication(3, opts)});
  });

  run_criterion(3, "permutation-sum and Laplace minors agree up to 3x3", 30, [&] {
    return from_suites({verify_minor_laplace_agreement(3, 3, opts)});
  });

  run_criterion(4, "kernel of the splitting map equals the determinantal ideal", 600, [&] {
    SuiteReport a = verify_sft(2, 2, 1, 4, opts);
    SuiteReport b = verify_sft(3, 3, 1, 3, opts);
    SuiteReport c = verify_sft(3, 3, 2, 3, opts);
    Outcome out = from_suites({a, b, c});
    if (out.pass && (dim_of(a, "d=2", "kernel") != 1 || dim_of(a, "d=2", "ideal") != 1))
      return Outcome{false, "expected dimension 1 at (2,2,1), degree 2"};
    return out;
  });

  run_criterion(5, "coinvariants equal the image of the splitting map", 600, [&] {
    SuiteReport a = verify_fft(2, 1, 2, BiRange{0, 3, 0, 3}, opts);
    SuiteReport b = verify_fft(2, 1, 3, BiRange{0, 2, 0, 2}, opts);
    SuiteReport c = verify_fft(3, 2, 2, BiRange{0, 2, 0, 2}, opts);
    Outcome out = from_suites({a, b, c});
    if (out.pass && (dim_of(a, "i=1,j=1", "coinvariants") != 4 ||
                     dim_of(a, "i=1,j=1", "image") != 4))
      return Outcome{false, "expected dimension 4 at (2,1,2), component (1,1)"};
    return out;
  });

  run_criterion(6, "semi-coinvariants equal the minor-algebra products", 600, [&] {
    BiRange r222{0, 4, 0, 4, 4};
    BiRange r212{0, 3, 0, 3, 3};
    SuiteReport a = verify_sl_fft(2, 2, 2, r222, opts);
    SuiteReport b = verify_sl_fft(2, 1, 2, r212, opts);
    Outcome out = from_suites({a, b});
    if (out.pass && dim_of(a, "i=2,j=0", "semi_coinvariants") != 1)
      return Outcome{false, "expected dimension 1 at (2,2,2), component (2,0)"};
    return out;
  });

  run_criterion(7, "preimage of the minor-pair ideal at (2,1), degrees <= 4", 300, [&] {
    return from_suites({verify_preimage_dx(2, 1, 4, opts)});
  });

  run_criterion(8, "preimage of the one-sided minor ideals, s = 1, 2", 300, [&] {
    std::vector<SuiteReport> reps;
    for (int s = 1; s <= 2; ++s) reps.push_back(verify_preimage_P(2, 1, s, 4, opts));
    return from_suites(reps);
  });

  run_criterion(9, "localized section identity on generators, fractions, samples", 300, [&] {
    SuiteReport a = verify_istar_jstar_identity(2, 1, 20, opts);
    SuiteReport b = verify_istar_jstar_identity(3, 2, 20, opts);
    return from_suites({a, b});
  });

  run_criterion(10, "coinvariant products close; trivial-part criterion for the split coaction",
                300, [&] {
    SuiteReport a = verify_coinvariant_closure(2, 1, 2, 2, opts);
    SuiteReport b = verify_coinvariant_closure(3, 2, 2, 1, opts);
    SuiteReport c = verify_xi_coinvariants(2, 1, 50, opts);
    return from_suites({a, b, c});
  });

  run_criterion(11, "commutation tables for the distinguished minors re-verified", 60, [&] {
    return from_suites({verify_normality(3, 2, opts)});
  });

  run_criterion(12, "torus weights on 100 seeded basis tensors", 60, [&] {
    SuiteReport rep =
        verify_torus_weights({{2, 1, 2}, {2, 1, 3}, {3, 2, 2}}, 34, opts);
    long total = 0;
    for (const auto& c : rep.components)
      for (const auto& [k, v] : c.dims)
        if (k == "samples") total += v;
    Outcome out = from_suites({rep});
    if (out.pass && total < 100)
      return Outcome{false, "fewer than 100 samples were checked"};
    return out;
  });

  run_criterion(13, "byte-identical reports for identical config and seed", 0, [&] {
    if (cli_path.empty()) return Outcome{false, "CLI path not supplied to the acceptance binary"};
    std::string out1 = "/tmp/qcv_accept_report1.json";
    std::string out2 = "/tmp/qcv_accept_report2.json";
    std::string base = "\"" + cli_path +
                       "\" --m 2 --t 1 --n 2 --max-degree 2 --suite all --seed 7 --jobs 3 --out ";
    if (std::system((base + out1 + " > /dev/null").c_str()) != 0)
      return Outcome{false, "first CLI run failed"};
    if (std::system((base + out2 + " > /dev/null").c_str()) != 0)
      return Outcome{false, "second CLI run failed"};
    std::ifstream f1(out1), f2(out2);
    if (!f1 || !f2) return Outcome{false, "missing report files"};
    Json j1, j2;
    f1 >> j1;
    f2 >> j2;
    strip_timing(j1);
    strip_timing(j2);
    if (j1.dump() != j2.dump()) return Outcome{false, "reports differ beyond timing fields"};
    return Outcome{true, ""};
  });

  std::printf("%s\n", g_failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                      : "ACCEPTANCE: FAILURES PRESENT");
  return g_failures == 0 ? 0 : 1;
}
