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

#include "qcv/report.hpp"

#include <iomanip>
#include <sstream>

#include "qcv/version.hpp"

namespace qcv {

std::string relation_fingerprint() {
  static const char* kRules =
      "pbw:row-major-lex;"
      "same-row/col:swap*q^-1;"
      "antidiag:swap;"
      "diag:swap-(q-q^-1)*inner;"
      "minor:sum(-q)^inv;"
      "laplace:first-row(-q)^(k-1);"
      "delta:matrix-comult;"
      "eps:kronecker;"
      "antipode:(-q)^(r-c)*complement(c,r)*det^-1;"
      "antipode-inv:q^(2(c-r))*antipode;"
      "torus:diag->T;"
      "coaction:right/left-matrix;";
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << fnv1a(kRules);
  return os.str();
}

Json shape_to_json(const AlgebraShape& s) {
  return Json{{"label", std::string(1, label_char(s.label))}, {"rows", s.rows}, {"cols", s.cols}};
}

AlgebraShape shape_from_json(const Json& j) {
  std::string l = j.at("label").get<std::string>();
  Label label;
  switch (l.empty() ? '?' : l[0]) {
    case 'X': label = Label::X; break;
    case 'Y': label = Label::Y; break;
    case 'Z': label = Label::Z; break;
    case 'T': label = Label::T; break;
    default: throw Error("unknown label in shape json");
  }
  return shape_of(label, j.at("rows").get<int>(), j.at("cols").get<int>());
}

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.coeffs()) out.push_back(Json::array({e, to_string(c)}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& term : j)
    p += LaurentPoly::term(term.at(0).get<int>(), rat_from_string(term.at(1).get<std::string>()));
  return p;
}

Json ratfunc_to_json(const RatFunc& f) {
  return Json{{"num", laurent_to_json(f.num())}, {"den", laurent_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
  return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json monomial_to_json(const Monomial& m) {
  Json out = Json::array();
  for (const Gen& g : m.gens()) out.push_back(Json::array({g.row, g.col}));
  return out;
}

Monomial monomial_from_json(const Json& j) {
  std::vector<Gen> gens;
  for (const auto& g : j) gens.push_back(Gen{g.at(0).get<int>(), g.at(1).get<int>()});
  return Monomial(std::move(gens));
}

Json element_to_json(const Element& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back(Json::array({monomial_to_json(m), ratfunc_to_json(c)}));
  return Json{{"shape", shape_to_json(e.shape())}, {"terms", terms}};
}

Element element_from_json(const Json& j) {
  Element e(shape_from_json(j.at("shape")));
  for (const auto& term : j.at("terms"))
    e.add_term(monomial_from_json(term.at(0)), ratfunc_from_json(term.at(1)));
  return e;
}

Json tensor_to_json(const TensorElement& v) {
  Json factors = Json::array();
  for (size_t f = 0; f < v.factor_count(); ++f) {
    Json fac{{"shape", shape_to_json(v.factors()[f].shape)},
             {"denom_exp", v.denom_exp()[f]}};
    if (v.factors()[f].host) fac["host"] = v.factors()[f].host->name();
    factors.push_back(fac);
  }
  Json terms = Json::array();
  for (const auto& [k, c] : v.terms()) {
    Json tuple = Json::array();
    for (const Monomial& m : k) tuple.push_back(monomial_to_json(m));
    terms.push_back(Json::array({tuple, ratfunc_to_json(c)}));
  }
  return Json{{"factors", factors}, {"terms", terms}};
}

Json localized_to_json(const LocalizedElement& v) {
  return Json{{"host", v.host().name()},
              {"numerator", element_to_json(v.num())},
              {"denom_exp", v.denom_exp()}};
}

Json gl_to_json(const GLElement& v) {
  return Json{{"numerator", element_to_json(v.num())}, {"denom_exp", v.denom_exp()}};
}

Json normal_to_json(const NormalElement& n) {
  Json scalars = Json::array();
  for (const auto& [g, c] : n.scalars())
    scalars.push_back(Json::array({g.row, g.col, ratfunc_to_json(c)}));
  return Json{{"name", n.name()}, {"element", element_to_json(n.element())},
              {"scalars", scalars}};
}

NormalElement normal_from_json(const Json& j) {
  Element e = element_from_json(j.at("element"));
  std::map<Gen, RatFunc> scalars;
  for (const auto& s : j.at("scalars"))
    scalars.emplace(Gen{s.at(0).get<int>(), s.at(1).get<int>()}, ratfunc_from_json(s.at(2)));
  return NormalElement::restore(std::move(e), std::move(scalars),
                                j.at("name").get<std::string>());
}

Json subspace_to_json(const Subspace& s) {
  Json pivots = Json::array();
  for (int p : s.pivots()) pivots.push_back(s.frame().key_string(p));
  return Json{{"dim", s.dim()}, {"pivots", pivots}};
}

Json suite_to_json(const SuiteReport& rep, bool include_timing) {
  Json components = Json::array();
  for (const ComponentRecord& c : rep.components) {
    Json dims = Json::object();
    for (const auto& [k, v] : c.dims) dims[k] = v;
    Json jc{{"index", c.index}, {"dims", dims}, {"verdict", c.pass ? "pass" : "fail"}};
    if (c.advisory) jc["advisory"] = true;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    components.push_back(jc);
  }
  Json params = Json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  Json out{{"name", rep.name}, {"params", params}, {"components", components},
           {"pass", rep.pass}};
  if (!rep.notes.empty()) out["notes"] = rep.notes;
  if (include_timing) out["elapsed_ms"] = rep.elapsed_ms;
  return out;
}

std::string suite_table(const SuiteReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.name << ": " << (rep.pass ? "PASS" : "FAIL") << "  ("
     << std::fixed << std::setprecision(1) << rep.elapsed_ms << " ms)\n";
  for (const ComponentRecord& c : rep.components) {
    os << "  " << std::left << std::setw(28) << c.index << " ";
    std::ostringstream dims;
    for (size_t i = 0; i < c.dims.size(); ++i) {
      if (i) dims << ", ";
      dims << c.dims[i].first << "=" << c.dims[i].second;
    }
    os << std::setw(44) << dims.str() << " " << (c.pass ? "pass" : "FAIL");
    if (c.advisory) os << " (advisory)";
    os << "\n";
    if (!c.witness.empty()) os << "      witness: " << c.witness << "\n";
  }
  for (const std::string& n : rep.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace qcv
