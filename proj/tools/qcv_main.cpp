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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "qcv/report.hpp"
#include "qcv/theorems.hpp"
#include "qcv/version.hpp"

namespace {

using qcv::Json;

struct CliConfig {
  int m = 2, t = 1, n = 2;
  int max_degree = 2;
  std::string bidegree_range;
  std::vector<std::string> suites{"all"};
  std::string q = "symbolic";
  std::uint64_t seed = 0;
  std::string out;
  std::string cache_dir;
  bool force_classical_q = false;
  int jobs = 0;
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

bool parse_bidegree(const std::string& s, qcv::BiRange& r) {
  // i0:i1,j0:j1
  auto comma = s.find(',');
  if (comma == std::string::npos) return false;
  auto parse_pair = [](const std::string& p, int& lo, int& hi) {
    auto colon = p.find(':');
    if (colon == std::string::npos) return false;
    try {
      lo = std::stoi(p.substr(0, colon));
      hi = std::stoi(p.substr(colon + 1));
    } catch (...) {
      return false;
    }
    return lo >= 0 && hi >= lo;
  };
  return parse_pair(s.substr(0, comma), r.i0, r.i1) &&
         parse_pair(s.substr(comma + 1), r.j0, r.j1);
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Exact verification suites for quantized matrix coordinate rings: rank "
               "truncation kernels, coinvariants of the standard coactions, and the "
               "supporting Hopf/localization identities."};
  app.add_option("--m", cfg.m, "rows of the left matrix factor")->capture_default_str();
  app.add_option("--t", cfg.t, "inner (Hopf) size")->capture_default_str();
  app.add_option("--n", cfg.n, "columns of the right matrix factor")->capture_default_str();
  app.add_option("--max-degree", cfg.max_degree, "degree bound for graded suites")
      ->capture_default_str();
  app.add_option("--bidegree-range", cfg.bidegree_range,
                 "bidegree window i0:i1,j0:j1 (default 0:max-degree twice)");
  app.add_option("--suite", cfg.suites,
                 "suites to run: sft fft slfft preimage structure all")
      ->capture_default_str();
  app.add_option("--q", cfg.q, "coefficient mode: 'symbolic' or a rational p/r")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--out", cfg.out, "write the JSON report to this path");
  app.add_option("--cache", cfg.cache_dir, "cache directory for bases and tables");
  app.add_flag("--force-classical-q", cfg.force_classical_q,
               "allow the degenerate specializations q = 1 and q = -1");
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cfg.m < 1 || cfg.t < 1 || cfg.n < 1) return usage_error("m, t, n must be positive");
  if (cfg.max_degree < 0) return usage_error("max-degree must be nonnegative");

  qcv::SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.cache_dir = cfg.cache_dir;
  opts.jobs = cfg.jobs > 0 ? cfg.jobs
                           : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (cfg.q == "symbolic") {
    opts.mode = qcv::QMode::Symbolic;
  } else {
    opts.mode = qcv::QMode::Numeric;
    try {
      opts.q0 = qcv::rat_from_string(cfg.q);
    } catch (const std::exception&) {
      return usage_error("--q expects 'symbolic' or a rational like 3/2");
    }
    if (qcv::is_zero(opts.q0)) return usage_error("q must be nonzero");
    if ((opts.q0 == 1 || opts.q0 == -1) && !cfg.force_classical_q)
      return usage_error(
          "q = 1 and q = -1 degenerate the deformation; pass --force-classical-q to proceed");
  }

  qcv::BiRange range{0, cfg.max_degree, 0, cfg.max_degree};
  if (!cfg.bidegree_range.empty() && !parse_bidegree(cfg.bidegree_range, range))
    return usage_error("--bidegree-range expects i0:i1,j0:j1 with 0 <= lo <= hi");

  bool want_all = false;
  bool want_sft = false, want_fft = false, want_slfft = false, want_preimage = false,
       want_structure = false;
  for (const std::string& s : cfg.suites) {
    if (s == "all")
      want_all = true;
    else if (s == "sft")
      want_sft = true;
    else if (s == "fft")
      want_fft = true;
    else if (s == "slfft")
      want_slfft = true;
    else if (s == "preimage")
      want_preimage = true;
    else if (s == "structure")
      want_structure = true;
    else
      return usage_error("unknown suite '" + s + "'");
  }
  if (want_all) want_sft = want_fft = want_slfft = want_structure = true;
  const bool preimage_shape_ok = cfg.m == cfg.n && cfg.n > cfg.t;
  if (want_preimage && !preimage_shape_ok)
    return usage_error("preimage suites need the square case m = n > t");

  std::vector<qcv::SuiteReport> suites;
  std::vector<std::string> notes;
  try {
    if (want_sft) suites.push_back(qcv::verify_sft(cfg.m, cfg.n, cfg.t, cfg.max_degree, opts));
    if (want_fft) suites.push_back(qcv::verify_fft(cfg.m, cfg.t, cfg.n, range, opts));
    if (want_slfft) suites.push_back(qcv::verify_sl_fft(cfg.m, cfg.t, cfg.n, range, opts));
    if (want_preimage || (want_all && preimage_shape_ok)) {
      suites.push_back(qcv::verify_preimage_dx(cfg.n, cfg.t, cfg.max_degree, opts));
      for (int s = 1; s <= 2; ++s)
        suites.push_back(qcv::verify_preimage_P(cfg.n, cfg.t, s, cfg.max_degree, opts));
    } else if (want_all && !preimage_shape_ok) {
      notes.push_back("preimage suites skipped: they need the square case m = n > t");
    }
    if (want_structure)
      suites.push_back(
          qcv::verify_structure(cfg.m, cfg.t, cfg.n, std::min(cfg.max_degree, 2), opts));
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 1;
  }

  bool all_pass = true;
  for (const qcv::SuiteReport& rep : suites) {
    std::cout << qcv::suite_table(rep);
    all_pass = all_pass && rep.pass;
  }
  for (const std::string& n : notes) std::cout << "note: " << n << "\n";
  std::cout << (all_pass ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";

  Json config{{"m", cfg.m},
              {"t", cfg.t},
              {"n", cfg.n},
              {"max_degree", cfg.max_degree},
              {"bidegree_range",
               std::to_string(range.i0) + ":" + std::to_string(range.i1) + "," +
                   std::to_string(range.j0) + ":" + std::to_string(range.j1)},
              {"q", cfg.q},
              {"seed", cfg.seed},
              {"engine_version", qcv::kEngineVersion}};
  if (!cfg.cache_dir.empty()) config["cache"] = cfg.cache_dir;
  Json jsuites = Json::array();
  for (const qcv::SuiteReport& rep : suites) jsuites.push_back(qcv::suite_to_json(rep));
  Json report{{"config", config},
              {"suites", jsuites},
              {"pass", all_pass},
              {"fingerprint", qcv::relation_fingerprint()}};
  if (!notes.empty()) report["notes"] = notes;

  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) return usage_error("cannot open output path " + cfg.out);
    out << report.dump(2) << "\n";
  }

  return all_pass ? 0 : 1;
}
