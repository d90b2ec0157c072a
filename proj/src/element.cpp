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

#include "qcv/element.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcv {

namespace {

constexpr long kRewriteBudget = 100'000'000;

// Straightens coef * (sequence of generators) into `out`.
void straighten_into(std::vector<Gen> seq, RatFunc coef, std::map<Monomial, RatFunc>& out,
                     long& budget) {
  static const RatFunc kQInv = RatFunc::q_power(-1);
  static const RatFunc kMinusQComm = -RatFunc::q_comm();

  std::vector<std::pair<std::vector<Gen>, RatFunc>> work;
  work.emplace_back(std::move(seq), std::move(coef));
  while (!work.empty()) {
    auto [s, c] = std::move(work.back());
    work.pop_back();
    size_t i = 0;
    while (i + 1 < s.size()) {
      const Gen hi = s[i], lo = s[i + 1];
      if (!(lo < hi)) {
        ++i;
        continue;
      }
      if (--budget < 0)
        throw RewriteBudgetExceeded("straightening step budget exhausted");
      if (hi.row == lo.row || hi.col == lo.col) {
        c *= kQInv;
      } else if (hi.col > lo.col) {
        // diagonal pair: swap plus correction term
        auto s2 = s;
        s2[i] = Gen{lo.row, hi.col};
        s2[i + 1] = Gen{hi.row, lo.col};
        work.emplace_back(std::move(s2), c * kMinusQComm);
      }
      std::swap(s[i], s[i + 1]);
      if (i > 0) --i;
    }
    auto [it, inserted] = out.emplace(Monomial(std::move(s)), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
}

int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

void enumerate_monomials(const AlgebraShape& s, int degree, std::vector<Gen>& prefix,
                         const Gen& min_gen, std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(Monomial(prefix));
    return;
  }
  for (int r = min_gen.row; r <= s.rows; ++r) {
    int c0 = (r == min_gen.row) ? min_gen.col : 1;
    for (int c = c0; c <= s.cols; ++c) {
      prefix.push_back(Gen{r, c});
      enumerate_monomials(s, degree - 1, prefix, Gen{r, c}, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

RatFunc Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

void Element::add_term(const Monomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  if (!m.fits(shape_)) throw IndexOutOfShape("monomial outside " + shape_.str());
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r(shape_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  if (shape_ != o.shape_) throw ShapeMismatch(shape_.str() + " + " + o.shape_.str());
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (shape_ != o.shape_) throw ShapeMismatch(shape_.str() + " - " + o.shape_.str());
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator*(const Element& o) const {
  if (shape_ != o.shape_) throw ShapeMismatch(shape_.str() + " * " + o.shape_.str());
  Element r(shape_);
  long budget = kRewriteBudget;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      std::vector<Gen> seq;
      seq.reserve(ma.gens().size() + mb.gens().size());
      seq.insert(seq.end(), ma.gens().begin(), ma.gens().end());
      seq.insert(seq.end(), mb.gens().begin(), mb.gens().end());
      straighten_into(std::move(seq), ca * cb, r.terms_, budget);
    }
  }
  return r;
}

Element Element::scaled(const RatFunc& c) const {
  Element r(shape_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Element Element::pow(int k) const {
  if (k < 0) throw Error("negative power of algebra element");
  Element acc = unit(shape_);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

int Element::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::map<int, Element> Element::degree_components() const {
  std::map<int, Element> out;
  for (const auto& [m, c] : terms_) {
    auto it = out.find(m.degree());
    if (it == out.end()) it = out.emplace(m.degree(), Element(shape_)).first;
    it->second.add_term(m, c);
  }
  return out;
}

std::string scalar_prefix(const RatFunc& c) {
  if (c.is_one()) return "";
  if (c == RatFunc(-1)) return "-";
  std::string s = c.str();
  if (s.find(' ') != std::string::npos && s.front() != '(') s = "(" + s + ")";
  return s + "*";
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    std::string pre = scalar_prefix(c);
    if (m.is_one() && (pre.empty() || pre == "-"))
      os << pre << "1";
    else
      os << pre << m.str(shape_.label);
    first = false;
  }
  return os.str();
}

MinorIndex::MinorIndex(std::vector<int> r, std::vector<int> c)
    : rows(std::move(r)), cols(std::move(c)) {
  if (rows.empty() || rows.size() != cols.size())
    throw Error("minor index sets must be nonempty and of equal size");
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i] <= rows[i - 1]) throw Error("minor row set must be strictly increasing");
  for (size_t i = 1; i < cols.size(); ++i)
    if (cols[i] <= cols[i - 1]) throw Error("minor column set must be strictly increasing");
}

static void check_minor(const AlgebraShape& shape, const MinorIndex& idx) {
  if (idx.rows.front() < 1 || idx.rows.back() > shape.rows || idx.cols.front() < 1 ||
      idx.cols.back() > shape.cols)
    throw IndexOutOfShape("minor index outside " + shape.str());
}

Element quantum_minor(const AlgebraShape& shape, const MinorIndex& idx) {
  check_minor(shape, idx);
  const int l = idx.size();
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  Element r(shape);
  do {
    std::vector<Gen> seq(l);
    for (int i = 0; i < l; ++i) seq[i] = Gen{idx.rows[i], idx.cols[perm[i]]};
    // rows strictly increase, so the sequence is already in PBW order
    int inv = inversions(perm);
    RatFunc c = RatFunc::q_power(inv);
    if (inv % 2 == 1) c = -c;
    r.add_term(Monomial(std::move(seq)), c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

Element laplace_minor(const AlgebraShape& shape, const MinorIndex& idx) {
  check_minor(shape, idx);
  const int l = idx.size();
  if (l == 1) return Element::generator(shape, idx.rows[0], idx.cols[0]);
  Element r(shape);
  std::vector<int> sub_rows(idx.rows.begin() + 1, idx.rows.end());
  for (int k = 0; k < l; ++k) {
    std::vector<int> sub_cols;
    sub_cols.reserve(l - 1);
    for (int i = 0; i < l; ++i)
      if (i != k) sub_cols.push_back(idx.cols[i]);
    Element head = Element::generator(shape, idx.rows[0], idx.cols[k]);
    Element tail = laplace_minor(shape, MinorIndex(sub_rows, sub_cols));
    RatFunc c = RatFunc::q_power(k);
    if (k % 2 == 1) c = -c;
    r += (head * tail).scaled(c);
  }
  return r;
}

std::vector<MinorIndex> minors_of_size(const AlgebraShape& shape, int l) {
  auto subsets = [](int n, int l) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == l) {
        out.push_back(cur);
        return;
      }
      for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
    return out;
  };
  std::vector<MinorIndex> out;
  for (const auto& r : subsets(shape.rows, l))
    for (const auto& c : subsets(shape.cols, l)) out.emplace_back(r, c);
  return out;
}

std::vector<MinorIndex> all_minors(const AlgebraShape& shape) {
  std::vector<MinorIndex> out;
  for (int l = 1; l <= std::min(shape.rows, shape.cols); ++l)
    for (auto& m : minors_of_size(shape, l)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> graded_component_basis(const AlgebraShape& shape, int degree) {
  if (degree < 0) throw Error("negative degree");
  std::vector<Monomial> out;
  std::vector<Gen> prefix;
  enumerate_monomials(shape, degree, prefix, Gen{1, 1}, out);
  return out;
}

std::pair<std::vector<int>, std::vector<int>> multidegree(const Monomial& m,
                                                          const AlgebraShape& s) {
  return m.multidegree(s);
}

Element retract(const Element& x, int rows, int cols) {
  if (rows > x.shape().rows || cols > x.shape().cols)
    throw ShapeMismatch("retraction target exceeds source shape");
  AlgebraShape target{rows, cols, x.shape().label};
  Element r(target);
  for (const auto& [m, c] : x.terms())
    if (m.fits(target)) r.add_term(m, c);
  return r;
}

}  // namespace qcv
