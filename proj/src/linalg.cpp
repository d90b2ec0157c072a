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

#include "qcv/linalg.hpp"

#include <algorithm>
#include <set>

namespace qcv {

void Frame::build_index() {
  index_.clear();
  for (size_t i = 0; i < keys_.size(); ++i) {
    auto [it, inserted] = index_.emplace(keys_[i], static_cast<int>(i));
    if (!inserted) throw Error("duplicate key in frame");
  }
}

Frame Frame::component(const FactorSpec& factor, int degree) {
  Frame f;
  f.factors_ = {factor};
  f.denom_exp_ = {0};
  for (Monomial& m : graded_component_basis(factor.shape, degree))
    f.keys_.push_back(TensorKey{std::move(m)});
  f.build_index();
  return f;
}

Frame Frame::tensor_component(std::vector<FactorSpec> factors, const std::vector<int>& degrees,
                              std::vector<int> denom_exp) {
  if (degrees.size() != factors.size()) throw Error("degree count mismatch");
  Frame f;
  f.factors_ = std::move(factors);
  f.denom_exp_ = denom_exp.empty() ? std::vector<int>(f.factors_.size(), 0) : std::move(denom_exp);
  if (f.denom_exp_.size() != f.factors_.size()) throw Error("exponent count mismatch");
  std::vector<std::vector<Monomial>> bases;
  for (size_t i = 0; i < f.factors_.size(); ++i)
    bases.push_back(graded_component_basis(f.factors_[i].shape, degrees[i]));
  TensorKey key(f.factors_.size());
  auto emit = [&](auto&& self, size_t i) -> void {
    if (i == f.factors_.size()) {
      f.keys_.push_back(key);
      return;
    }
    for (const Monomial& m : bases[i]) {
      key[i] = m;
      self(self, i + 1);
    }
  };
  emit(emit, 0);
  f.build_index();
  return f;
}

Frame Frame::from_keys(std::vector<FactorSpec> factors, std::vector<int> denom_exp,
                       std::vector<TensorKey> keys) {
  Frame f;
  f.factors_ = std::move(factors);
  f.denom_exp_ = std::move(denom_exp);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  f.keys_ = std::move(keys);
  f.build_index();
  return f;
}

std::string Frame::key_string(int i) const {
  const TensorKey& k = keys_[i];
  std::string out;
  for (size_t f = 0; f < k.size(); ++f) {
    if (f) out += " (x) ";
    out += k[f].str(factors_[f].shape.label);
  }
  return out;
}

bool Frame::compatible(const Frame& o) const {
  if (factors_.size() != o.factors_.size() || denom_exp_ != o.denom_exp_) return false;
  for (size_t i = 0; i < factors_.size(); ++i)
    if (!factors_[i].compatible(o.factors_[i])) return false;
  return keys_ == o.keys_;
}

SparseVec Frame::coords(const TensorElement& v) const {
  if (v.factor_count() != factors_.size()) throw FrameMismatch("tensor arity vs frame");
  for (size_t i = 0; i < factors_.size(); ++i)
    if (!v.factors()[i].compatible(factors_[i])) throw FrameMismatch("tensor factor vs frame");
  TensorElement w = v.denom_exp() == denom_exp_ ? v : v.with_denom_exp(denom_exp_);
  SparseVec out;
  out.reserve(w.terms().size());
  for (const auto& [k, c] : w.terms()) {
    auto it = index_.find(k);
    if (it == index_.end()) throw VectorOutsideFrame("monomial outside frame component");
    out.emplace_back(it->second, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

TensorElement Frame::element(const SparseVec& coords) const {
  TensorElement t(factors_, denom_exp_);
  for (const auto& [i, c] : coords) t.add_term(keys_.at(i), c);
  return t;
}

namespace {

// ---- symbolic elimination over Laurent-polynomial rows ----

using LRow = std::vector<std::pair<int, LaurentPoly>>;

const LaurentPoly* row_entry(const LRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == col) return &it->second;
  return nullptr;
}

// r := a*r + b*p, sorted-merge, zeros dropped.
LRow combine(const LRow& r, const LaurentPoly& a, const LRow& p, const LaurentPoly& b) {
  LRow out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      LaurentPoly v = r[i].second * a;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      LaurentPoly v = p[j].second * b;
      if (!v.is_zero()) out.emplace_back(p[j].first, std::move(v));
      ++j;
    } else {
      LaurentPoly v = r[i].second * a + p[j].second * b;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Strips the common q-power, rational content and polynomial factor of a row.
void reduce_content(LRow& r) {
  if (r.empty()) return;
  int qshift = r[0].second.min_exp();
  for (const auto& [c, p] : r) qshift = std::min(qshift, p.min_exp());
  mpz_class g(0), l(1);
  for (const auto& [c, p] : r)
    for (const auto& [e, v] : p.coeffs()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
  Rational content(g, l);
  content.canonicalize();
  LaurentPoly pg;
  bool nontrivial = true;
  for (const auto& [c, p] : r) {
    pg = poly_gcd(pg, p);
    if (!pg.is_zero() && pg.max_exp() == 0) {
      nontrivial = false;
      break;
    }
  }
  Rational inv = 1 / content;
  for (auto& [c, p] : r) {
    p = p.shifted(-qshift).scaled(inv);
    if (nontrivial) p = poly_divmod(p.shifted(-p.min_exp()), pg).first.shifted(p.min_exp());
  }
}

LRow lrow_from_coords(const SparseVec& v) {
  // clear denominators across the row
  LaurentPoly common = LaurentPoly::one();
  for (const auto& [c, f] : v) {
    if (f.den().is_one()) continue;
    LaurentPoly g = poly_gcd(common, f.den());
    common = common * poly_divmod(f.den(), g).first;
  }
  LRow out;
  out.reserve(v.size());
  for (const auto& [c, f] : v) {
    LaurentPoly scaled = f.num() * poly_divmod(common, f.den()).first;
    if (!scaled.is_zero()) out.emplace_back(c, std::move(scaled));
  }
  reduce_content(out);
  return out;
}

long row_weight(const LRow& r) {
  long w = 0;
  for (const auto& [c, p] : r) w += static_cast<long>(p.coeffs().size());
  return w;
}

struct EchelonSplit {
  std::vector<LRow> pivot_rows;  // echelon, strictly increasing leading cols < limit
  std::vector<LRow> tail_rows;   // rows whose leading col is >= limit
};

// Row echelon with pivots restricted to columns < limit. Deterministic.
EchelonSplit echelon(std::vector<LRow> rows, int limit) {
  EchelonSplit out;
  std::vector<LRow> active;
  for (LRow& r : rows) {
    if (r.empty()) continue;
    if (r.front().first >= limit)
      out.tail_rows.push_back(std::move(r));
    else
      active.push_back(std::move(r));
  }
  while (!active.empty()) {
    int col = active.front().front().first;
    for (const LRow& r : active) col = std::min(col, r.front().first);
    size_t best = active.size();
    for (size_t i = 0; i < active.size(); ++i) {
      if (active[i].front().first != col) continue;
      if (best == active.size() || active[i].size() < active[best].size() ||
          (active[i].size() == active[best].size() &&
           row_weight(active[i]) < row_weight(active[best])))
        best = i;
    }
    LRow pivot = std::move(active[best]);
    active.erase(active.begin() + static_cast<long>(best));
    const LaurentPoly lead = pivot.front().second;
    std::vector<LRow> next;
    next.reserve(active.size());
    for (LRow& r : active) {
      if (r.front().first == col) {
        LaurentPoly c = -r.front().second;
        LRow nr = combine(r, lead, pivot, c);
        if (nr.empty()) continue;
        reduce_content(nr);
        if (nr.front().first >= limit)
          out.tail_rows.push_back(std::move(nr));
        else
          next.push_back(std::move(nr));
      } else {
        next.push_back(std::move(r));
      }
    }
    active = std::move(next);
    out.pivot_rows.push_back(std::move(pivot));
  }
  return out;
}

// Back-substitution + pivot normalization: canonical RREF as RatFunc rows.
std::pair<std::vector<SparseVec>, std::vector<int>> to_rref(std::vector<LRow> rows, int limit) {
  // rows: echelon with increasing leading cols (< limit)
  for (size_t j = rows.size(); j-- > 0;) {
    int pcol = rows[j].front().first;
    const LaurentPoly lead = rows[j].front().second;
    for (size_t i = 0; i < j; ++i) {
      const LaurentPoly* e = row_entry(rows[i], pcol);
      if (!e) continue;
      LaurentPoly c = -*e;
      rows[i] = combine(rows[i], lead, rows[j], c);
      reduce_content(rows[i]);
    }
  }
  std::vector<SparseVec> out;
  std::vector<int> pivots;
  out.reserve(rows.size());
  for (LRow& r : rows) {
    pivots.push_back(r.front().first);
    const LaurentPoly lead = r.front().second;
    SparseVec sv;
    sv.reserve(r.size());
    for (auto& [c, p] : r) sv.emplace_back(c, RatFunc(std::move(p), lead));
    out.push_back(std::move(sv));
  }
  (void)limit;
  return {std::move(out), std::move(pivots)};
}

SparseVec reduce_against(const std::vector<SparseVec>& rref, const std::vector<int>& pivots,
                         SparseVec v) {
  for (size_t j = 0; j < rref.size(); ++j) {
    auto it = std::lower_bound(v.begin(), v.end(), pivots[j],
                               [](const auto& e, int c) { return e.first < c; });
    if (it == v.end() || it->first != pivots[j]) continue;
    RatFunc c = it->second;
    // v := v - c * rref[j]
    SparseVec out;
    out.reserve(v.size() + rref[j].size());
    size_t a = 0, b = 0;
    while (a < v.size() || b < rref[j].size()) {
      if (b == rref[j].size() || (a < v.size() && v[a].first < rref[j][b].first)) {
        out.push_back(v[a++]);
      } else if (a == v.size() || rref[j][b].first < v[a].first) {
        RatFunc nv = -(c * rref[j][b].second);
        if (!nv.is_zero()) out.emplace_back(rref[j][b].first, std::move(nv));
        ++b;
      } else {
        RatFunc nv = v[a].second - c * rref[j][b].second;
        if (!nv.is_zero()) out.emplace_back(v[a].first, std::move(nv));
        ++a;
        ++b;
      }
    }
    v = std::move(out);
  }
  return v;
}

}  // namespace

Subspace span_coords(std::vector<SparseVec> vectors, const Frame& frame) {
  std::vector<LRow> rows;
  rows.reserve(vectors.size());
  for (const SparseVec& v : vectors)
    if (!v.empty()) rows.push_back(lrow_from_coords(v));
  EchelonSplit e = echelon(std::move(rows), frame.size());
  auto [rref, pivots] = to_rref(std::move(e.pivot_rows), frame.size());
  return Subspace(frame, std::move(rref), std::move(pivots));
}

Subspace span(const std::vector<TensorElement>& vectors, const Frame& frame) {
  std::vector<SparseVec> coords;
  coords.reserve(vectors.size());
  for (const TensorElement& v : vectors) coords.push_back(frame.coords(v));
  return span_coords(std::move(coords), frame);
}

KernelResult kernel_of(const std::vector<TensorElement>& images, const Frame& domain) {
  if (static_cast<int>(images.size()) != domain.size())
    throw FrameMismatch("one image per domain basis vector required");
  // align denominator exponents across the images and discover the codomain
  std::vector<TensorElement> imgs = images;
  size_t nf = 0;
  for (const TensorElement& v : imgs) nf = std::max(nf, v.factor_count());
  std::vector<int> target;
  const TensorElement* sample = nullptr;
  for (const TensorElement& v : imgs) {
    if (v.is_zero() && v.factor_count() == 0) continue;
    if (!sample) {
      sample = &v;
      target = v.denom_exp();
    } else {
      if (v.factor_count() != sample->factor_count())
        throw FrameMismatch("inconsistent image arities");
      for (size_t f = 0; f < target.size(); ++f)
        target[f] = std::max(target[f], v.denom_exp()[f]);
    }
  }
  std::vector<TensorKey> all_keys;
  if (sample) {
    for (TensorElement& v : imgs) {
      v = v.with_denom_exp(target);
      for (const auto& [k, c] : v.terms()) all_keys.push_back(k);
    }
  }
  Frame codomain = sample ? Frame::from_keys(sample->factors(), target, std::move(all_keys))
                          : Frame::from_keys({}, {}, {});
  const int ncod = codomain.size();
  const int ndom = domain.size();
  std::vector<LRow> rows;
  rows.reserve(imgs.size());
  for (int i = 0; i < ndom; ++i) {
    SparseVec sv = sample ? codomain.coords(imgs[i]) : SparseVec{};
    sv.emplace_back(ncod + i, RatFunc(1));
    rows.push_back(lrow_from_coords(sv));
  }
  EchelonSplit e = echelon(std::move(rows), ncod);
  const int rank = static_cast<int>(e.pivot_rows.size());
  // tail rows live entirely in the augmented block: they are the kernel
  std::vector<SparseVec> kernel_coords;
  kernel_coords.reserve(e.tail_rows.size());
  for (LRow& r : e.tail_rows) {
    SparseVec sv;
    sv.reserve(r.size());
    for (auto& [c, p] : r) sv.emplace_back(c - ncod, RatFunc(std::move(p)));
    kernel_coords.push_back(std::move(sv));
  }
  Subspace kernel = span_coords(std::move(kernel_coords), domain);
  if (kernel.dim() + rank != ndom)
    throw Error("rank-nullity violated; elimination bug");
  return KernelResult{std::move(kernel), rank};
}

bool contains(const Subspace& s, const SparseVec& v) {
  return reduce_against(s.rows(), s.pivots(), v).empty();
}

bool contains(const Subspace& s, const TensorElement& v) {
  return contains(s, s.frame().coords(v));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (!a.frame().compatible(b.frame())) throw FrameMismatch("intersect frames differ");
  const int n = a.frame().size();
  std::vector<LRow> rows;
  rows.reserve(a.rows().size() + b.rows().size());
  for (const SparseVec& r : a.rows()) {
    SparseVec doubled = r;
    for (const auto& [c, v] : r) doubled.emplace_back(c + n, v);
    rows.push_back(lrow_from_coords(doubled));
  }
  for (const SparseVec& r : b.rows()) rows.push_back(lrow_from_coords(r));
  EchelonSplit e = echelon(std::move(rows), n);
  std::vector<SparseVec> inter;
  inter.reserve(e.tail_rows.size());
  for (LRow& r : e.tail_rows) {
    SparseVec sv;
    sv.reserve(r.size());
    for (auto& [c, p] : r) sv.emplace_back(c - n, RatFunc(std::move(p)));
    inter.push_back(std::move(sv));
  }
  return span_coords(std::move(inter), a.frame());
}

bool equal(const Subspace& a, const Subspace& b) {
  if (!a.frame().compatible(b.frame())) throw FrameMismatch("equal frames differ");
  return a.pivots() == b.pivots() && a.rows() == b.rows();
}

std::optional<TensorElement> difference_witness(const Subspace& a, const Subspace& b) {
  for (int i = 0; i < a.dim(); ++i)
    if (!contains(b, a.rows()[i])) return a.basis_element(i);
  return std::nullopt;
}

std::optional<std::vector<RatFunc>> solve_combination(const std::vector<TensorElement>& vectors,
                                                      const TensorElement& target) {
  if (vectors.empty()) {
    if (target.is_zero()) return std::vector<RatFunc>{};
    return std::nullopt;
  }
  std::vector<TensorKey> keys;
  for (const TensorElement& v : vectors)
    for (const auto& [k, c] : v.terms()) keys.push_back(k);
  for (const auto& [k, c] : target.terms()) keys.push_back(k);
  Frame frame =
      Frame::from_keys(vectors.front().factors(), vectors.front().denom_exp(), std::move(keys));
  const int n = frame.size();
  const int m = static_cast<int>(vectors.size());
  std::vector<LRow> rows;
  rows.reserve(vectors.size());
  for (int i = 0; i < m; ++i) {
    SparseVec sv = frame.coords(vectors[i]);
    sv.emplace_back(n + i, RatFunc(1));
    rows.push_back(lrow_from_coords(sv));
  }
  EchelonSplit e = echelon(std::move(rows), n);
  auto [rref, pivots] = to_rref(std::move(e.pivot_rows), n + m);
  SparseVec residue = reduce_against(rref, pivots, frame.coords(target));
  std::vector<RatFunc> x(m);
  for (const auto& [c, v] : residue) {
    if (c < n) return std::nullopt;  // target not in the span
    x[c - n] = -v;
  }
  return x;
}

// ---- advisory specialization at q = q0 ----

namespace {

using NRow = std::vector<std::pair<int, Rational>>;

NRow nrow_from_coords(const SparseVec& v, const Rational& q0) {
  NRow out;
  out.reserve(v.size());
  for (const auto& [c, f] : v) {
    Rational r = eval_at(f, q0);
    if (!qcv::is_zero(r)) out.emplace_back(c, r);
  }
  return out;
}

// Gauss-Jordan over Q; returns canonical RREF rows with pivots < limit and
// the tail rows (leading >= limit).
std::pair<std::vector<NRow>, std::vector<NRow>> numeric_rref(std::vector<NRow> rows, int limit) {
  std::vector<NRow> pivot_rows, tail;
  std::vector<NRow> active;
  for (NRow& r : rows) {
    if (r.empty()) continue;
    (r.front().first >= limit ? tail : active).push_back(std::move(r));
  }
  auto subtract = [](const NRow& r, const Rational& c, const NRow& p) {
    // r - c*p
    NRow out;
    out.reserve(r.size() + p.size());
    size_t a = 0, b = 0;
    while (a < r.size() || b < p.size()) {
      if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
        out.push_back(r[a++]);
      } else if (a == r.size() || p[b].first < r[a].first) {
        Rational v = -c * p[b].second;
        if (!qcv::is_zero(v)) out.emplace_back(p[b].first, v);
        ++b;
      } else {
        Rational v = r[a].second - c * p[b].second;
        if (!qcv::is_zero(v)) out.emplace_back(r[a].first, v);
        ++a;
        ++b;
      }
    }
    return out;
  };
  while (!active.empty()) {
    int col = active.front().front().first;
    for (const NRow& r : active) col = std::min(col, r.front().first);
    size_t best = active.size();
    for (size_t i = 0; i < active.size(); ++i)
      if (active[i].front().first == col && (best == active.size() || active[i].size() < active[best].size()))
        best = i;
    NRow pivot = std::move(active[best]);
    active.erase(active.begin() + static_cast<long>(best));
    Rational inv = 1 / pivot.front().second;
    for (auto& [c, v] : pivot) v *= inv;
    std::vector<NRow> next;
    for (NRow& r : active) {
      NRow nr = r.front().first == col ? subtract(r, r.front().second, pivot) : std::move(r);
      if (nr.empty()) continue;
      (nr.front().first >= limit ? tail : next).push_back(std::move(nr));
    }
    active = std::move(next);
    pivot_rows.push_back(std::move(pivot));
  }
  // back-substitute
  for (size_t j = pivot_rows.size(); j-- > 0;) {
    int pcol = pivot_rows[j].front().first;
    for (size_t i = 0; i < j; ++i) {
      auto it = std::lower_bound(pivot_rows[i].begin(), pivot_rows[i].end(), pcol,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it != pivot_rows[i].end() && it->first == pcol)
        pivot_rows[i] = subtract(pivot_rows[i], it->second, pivot_rows[j]);
    }
  }
  return {std::move(pivot_rows), std::move(tail)};
}

}  // namespace

int span_dim_at(const std::vector<TensorElement>& vectors, const Frame& frame,
                const Rational& q0) {
  std::vector<NRow> rows;
  rows.reserve(vectors.size());
  for (const TensorElement& v : vectors) rows.push_back(nrow_from_coords(frame.coords(v), q0));
  return static_cast<int>(numeric_rref(std::move(rows), frame.size()).first.size());
}

std::vector<std::vector<std::pair<int, Rational>>> span_rref_at(
    const std::vector<TensorElement>& vectors, const Frame& frame, const Rational& q0) {
  std::vector<NRow> rows;
  rows.reserve(vectors.size());
  for (const TensorElement& v : vectors) rows.push_back(nrow_from_coords(frame.coords(v), q0));
  return numeric_rref(std::move(rows), frame.size()).first;
}

NumericKernel kernel_at(const std::vector<TensorElement>& images, const Frame& domain,
                        const Rational& q0) {
  if (static_cast<int>(images.size()) != domain.size())
    throw FrameMismatch("one image per domain basis vector required");
  std::vector<TensorElement> imgs = images;
  std::vector<int> target;
  const TensorElement* sample = nullptr;
  for (const TensorElement& v : imgs) {
    if (!sample) {
      sample = &v;
      target = v.denom_exp();
    } else {
      for (size_t f = 0; f < target.size(); ++f)
        target[f] = std::max(target[f], v.denom_exp()[f]);
    }
  }
  std::vector<TensorKey> keys;
  for (TensorElement& v : imgs) {
    v = v.with_denom_exp(target);
    for (const auto& [k, c] : v.terms()) keys.push_back(k);
  }
  Frame codomain = Frame::from_keys(sample->factors(), target, std::move(keys));
  const int ncod = codomain.size();
  std::vector<NRow> rows;
  for (int i = 0; i < domain.size(); ++i) {
    NRow r = nrow_from_coords(codomain.coords(imgs[i]), q0);
    r.emplace_back(ncod + i, Rational(1));
    rows.push_back(std::move(r));
  }
  auto [pivots, tail] = numeric_rref(std::move(rows), ncod);
  NumericKernel out;
  out.rank = static_cast<int>(pivots.size());
  std::vector<NRow> kernel_rows;
  for (NRow& r : tail) {
    NRow sv;
    sv.reserve(r.size());
    for (auto& [c, v] : r) sv.emplace_back(c - ncod, v);
    kernel_rows.push_back(std::move(sv));
  }
  auto [krref, ktail] = numeric_rref(std::move(kernel_rows), domain.size());
  out.dim = static_cast<int>(krref.size());
  out.rows = std::move(krref);
  return out;
}

}  // namespace qcv
