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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcv/report.hpp"
#include "qcv/theorems.hpp"

using namespace qcv;

namespace {

long dim_of(const ComponentRecord& rec, const std::string& key) {
  for (const auto& [k, v] : rec.dims)
    if (k == key) return v;
  return -1;
}

const ComponentRecord& find_component(const SuiteReport& rep, const std::string& index) {
  for (const auto& c : rep.components)
    if (c.index == index) return c;
  throw std::runtime_error("component not found: " + index);
}

}  // namespace

TEST_CASE("rank-truncation kernel suite at (2,2,1)") {
  SuiteReport rep = verify_sft(2, 2, 1, 3);
  CHECK(rep.pass);
  CHECK(dim_of(find_component(rep, "d=2"), "kernel") == 1);
  CHECK(dim_of(find_component(rep, "d=2"), "ideal") == 1);
  CHECK(dim_of(find_component(rep, "d=0"), "kernel") == 0);
  CHECK(dim_of(find_component(rep, "d=1"), "kernel") == 0);
}

TEST_CASE("rank-truncation kernel vanishes when t is not a real truncation") {
  SuiteReport rep = verify_sft(2, 2, 2, 3);
  CHECK(rep.pass);
  for (const auto& c : rep.components) {
    CHECK(dim_of(c, "kernel") == 0);
    CHECK(dim_of(c, "ideal") == 0);
  }
}

TEST_CASE("coinvariant suite at (2,1,2)") {
  SuiteReport rep = verify_fft(2, 1, 2, BiRange{0, 2, 0, 2});
  CHECK(rep.pass);
  CHECK(dim_of(find_component(rep, "i=1,j=1"), "coinvariants") == 4);
  CHECK(dim_of(find_component(rep, "i=1,j=1"), "image") == 4);
  CHECK(dim_of(find_component(rep, "i=0,j=0"), "coinvariants") == 1);
  CHECK(dim_of(find_component(rep, "i=1,j=2"), "coinvariants") == 0);
  CHECK(dim_of(find_component(rep, "i=2,j=2"), "coinvariants") == 9);
}

TEST_CASE("special-coinvariant suite at (2,2,2), low components") {
  SuiteReport rep = verify_sl_fft(2, 2, 2, BiRange{0, 2, 0, 2});
  CHECK(rep.pass);
  CHECK(dim_of(find_component(rep, "i=2,j=0"), "semi_coinvariants") == 1);
  CHECK(dim_of(find_component(rep, "i=0,j=2"), "semi_coinvariants") == 1);
  CHECK(dim_of(find_component(rep, "i=1,j=0"), "semi_twist_floor") == 0);
  CHECK(dim_of(find_component(rep, "i=1,j=0"), "semi_twist_ceil") == 0);
}

TEST_CASE("preimage of the minor-pair ideal at (2,1), low degrees") {
  SuiteReport rep = verify_preimage_dx(2, 1, 2);
  CHECK(rep.pass);
  const auto& d1 = find_component(rep, "d=1");
  CHECK(dim_of(d1, "intersection") == 1);  // span of the image of the minor
  CHECK(dim_of(d1, "theta_dx") == 1);
  const auto& d0 = find_component(rep, "d=0");
  CHECK(dim_of(d0, "intersection") == 0);
}

TEST_CASE("preimage of the one-sided minor ideals at (2,1), s = 1") {
  SuiteReport rep = verify_preimage_P(2, 1, 1, 2);
  CHECK(rep.pass);
  const auto& d1p1 = find_component(rep, "d=1,P1");
  // the degree-1 slice of the lower-row ideal has the two bottom generators
  CHECK(dim_of(d1p1, "intersection") == 2);
  CHECK(dim_of(d1p1, "theta_P") == 2);
}

TEST_CASE("structure umbrella at (2,1,2)") {
  SuiteReport rep = verify_structure(2, 1, 2, 2);
  CHECK(rep.pass);
}

TEST_CASE("structure umbrella at the rectangular stage (3,2,3)") {
  SuiteReport rep = verify_structure(3, 2, 3, 2);
  CHECK(rep.pass);
}

TEST_CASE("full-rank stage: coinvariants exhaust the diagonal components") {
  // with t = m the splitting map is injective, so the image has the full
  // dimension of the source component
  SuiteReport rep = verify_fft(2, 2, 3, BiRange{0, 2, 0, 2});
  CHECK(rep.pass);
  CHECK(dim_of(find_component(rep, "i=2,j=2"), "coinvariants") == 21);
  CHECK(dim_of(find_component(rep, "i=2,j=2"), "image") == 21);
}

TEST_CASE("numeric advisory mode agrees on a generic specialization") {
  SuiteOptions num;
  num.mode = QMode::Numeric;
  num.q0 = rat(5, 3);
  SuiteReport sym = verify_sft(2, 2, 1, 3);
  SuiteReport adv = verify_sft(2, 2, 1, 3, num);
  CHECK(adv.pass);
  REQUIRE(sym.components.size() == adv.components.size());
  for (size_t i = 0; i < sym.components.size(); ++i) {
    CHECK(adv.components[i].advisory);
    CHECK(dim_of(sym.components[i], "kernel") == dim_of(adv.components[i], "kernel"));
  }
}

TEST_CASE("suite reports serialize deterministically") {
  SuiteReport a = verify_fft(2, 1, 2, BiRange{0, 1, 0, 1});
  SuiteReport b = verify_fft(2, 1, 2, BiRange{0, 1, 0, 1});
  CHECK(suite_to_json(a, false).dump() == suite_to_json(b, false).dump());
}

TEST_CASE("parallel and serial runs agree") {
  SuiteOptions serial, parallel;
  serial.jobs = 1;
  parallel.jobs = 4;
  SuiteReport a = verify_fft(2, 1, 2, BiRange{0, 2, 0, 2}, serial);
  SuiteReport b = verify_fft(2, 1, 2, BiRange{0, 2, 0, 2}, parallel);
  CHECK(suite_to_json(a, false).dump() == suite_to_json(b, false).dump());
}

TEST_CASE("cache round-trip produces identical verdicts") {
  std::string dir = "/tmp/qcv_test_cache";
  SuiteOptions cached;
  cached.cache_dir = dir;
  SuiteReport cold = verify_sft(2, 2, 1, 2, cached);  // populates
  SuiteReport warm = verify_sft(2, 2, 1, 2, cached);  // reads back
  SuiteReport plain = verify_sft(2, 2, 1, 2);
  CHECK(suite_to_json(cold, false).dump() == suite_to_json(warm, false).dump());
  CHECK(suite_to_json(cold, false).dump() == suite_to_json(plain, false).dump());
}

TEST_CASE("diagonal components of the two coinvariant suites agree") {
  for (auto [m, t, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 2, 2}}) {
    SuiteReport fft = verify_fft(m, t, n, BiRange{0, 2, 0, 2});
    SuiteReport sl = verify_sl_fft(m, t, n, BiRange{0, 2, 0, 2});
    CHECK(fft.pass);
    CHECK(sl.pass);
    for (int d = 0; d <= 2; ++d) {
      std::string idx = "i=" + std::to_string(d) + ",j=" + std::to_string(d);
      CHECK(dim_of(find_component(fft, idx), "coinvariants") ==
            dim_of(find_component(sl, idx), "semi_coinvariants"));
    }
  }
}

TEST_CASE("subspace serialization lists pivot monomials") {
  Frame fr = Frame::component(plain_factor(x_shape(2, 2)), 1);
  TensorElement v = as_tensor(Element::generator(x_shape(2, 2), 1, 2));
  Subspace s = span({v}, fr);
  Json j = subspace_to_json(s);
  CHECK(j["dim"] == 1);
  CHECK(j["pivots"][0] == "X[1,2]");
}

TEST_CASE("element serialization round-trips") {
  Sampler rng(77);
  const AlgebraShape s = x_shape(2, 3);
  for (int k = 0; k < 10; ++k) {
    Element e = rng.next_element(s, 3, 3);
    CHECK(element_from_json(element_to_json(e)) == e);
  }
  NormalElement ne = normal_lower_left(y_shape(3, 2), 2);
  NormalElement back = normal_from_json(normal_to_json(ne));
  CHECK(back == ne);
  // coefficients with honest denominators survive the round trip
  LaurentPoly qm1 = LaurentPoly::q_power(1);
  qm1 -= LaurentPoly::one();
  RatFunc f(LaurentPoly::term(-2, rat(3, 7)), qm1);
  CHECK(ratfunc_from_json(ratfunc_to_json(f)) == f);
  Element e(s);
  e.add_term(Monomial({{1, 1}}), f);
  CHECK(element_from_json(element_to_json(e)) == e);
}
