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

#include "qcv/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qcv/report.hpp"
#include "qcv/version.hpp"

namespace qcv {

namespace {

namespace fs = std::filesystem;

fs::path cache_file(const std::string& dir, const AlgebraShape& s, const std::string& kind) {
  std::string name = std::string("v") + kEngineVersion + "_" + std::string(1, label_char(s.label)) +
                     std::to_string(s.rows) + "x" + std::to_string(s.cols) + "_" + kind + ".json";
  return fs::path(dir) / name;
}

std::optional<Json> load_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    Json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring corrupt cache file " << p << " (" << e.what() << ")\n";
    return std::nullopt;
  }
}

void store_json(const fs::path& p, const Json& j) {
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  std::ofstream out(p);
  if (out) out << j.dump() << "\n";
}

}  // namespace

std::vector<Monomial> cached_component_basis(const std::string& cache_dir, const AlgebraShape& s,
                                             int degree) {
  if (cache_dir.empty()) return graded_component_basis(s, degree);
  fs::path p = cache_file(cache_dir, s, "basis_d" + std::to_string(degree));
  if (auto j = load_json(p)) {
    try {
      std::vector<Monomial> out;
      for (const auto& m : *j) out.push_back(monomial_from_json(m));
      return out;
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring corrupt cache entry " << p << " (" << e.what() << ")\n";
    }
  }
  std::vector<Monomial> out = graded_component_basis(s, degree);
  Json j = Json::array();
  for (const Monomial& m : out) j.push_back(monomial_to_json(m));
  store_json(p, j);
  return out;
}

NormalElement cached_lower_left_normal(const std::string& cache_dir, const AlgebraShape& s,
                                       int t) {
  if (cache_dir.empty()) return normal_lower_left(s, t);
  fs::path p = cache_file(cache_dir, s, "llnormal_t" + std::to_string(t));
  if (auto j = load_json(p)) {
    try {
      return normal_from_json(*j);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring corrupt cache entry " << p << " (" << e.what() << ")\n";
    }
  }
  NormalElement n = normal_lower_left(s, t);
  store_json(p, normal_to_json(n));
  return n;
}

}  // namespace qcv
