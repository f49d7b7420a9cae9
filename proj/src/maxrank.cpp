// Copyright 2026 The pauliflow Authors
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

#include "pauliflow/maxrank.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "pauliflow/error.hpp"

namespace pauliflow {

namespace {

// Sorts and cancels equal monomials pairwise.
std::vector<MultiAffineExpr::Monomial> normalise(std::vector<MultiAffineExpr::Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<MultiAffineExpr::Monomial> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back() == t) {
      out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

void check_cap(std::size_t n) {
  if (n > kMaxTerms) throw NotMultiAffine("expression exceeds " + std::to_string(kMaxTerms) + " terms");
}

}  // namespace

MultiAffineExpr MultiAffineExpr::constant(bool value) {
  MultiAffineExpr e;
  if (value) e.terms_.emplace_back();
  return e;
}

MultiAffineExpr MultiAffineExpr::variable(VarId v) {
  MultiAffineExpr e;
  e.terms_.push_back({v});
  return e;
}

MultiAffineExpr MultiAffineExpr::from_terms(std::vector<Monomial> terms) {
  check_cap(terms.size());
  for (auto& t : terms) {
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
      throw NotMultiAffine("monomial repeats variable " + std::to_string(*std::adjacent_find(t.begin(), t.end())));
    }
  }
  MultiAffineExpr e;
  e.terms_ = normalise(std::move(terms));
  return e;
}

bool MultiAffineExpr::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].empty()); }

std::set<VarId> MultiAffineExpr::variables() const {
  std::set<VarId> out;
  for (const auto& t : terms_) out.insert(t.begin(), t.end());
  return out;
}

bool MultiAffineExpr::evaluate_bits(const std::function<bool(VarId)>& bit) const {
  bool acc = false;
  for (const auto& t : terms_) {
    acc ^= std::all_of(t.begin(), t.end(), bit);
  }
  return acc;
}

std::string MultiAffineExpr::to_string(const std::function<std::string(VarId)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.empty()) {
      out += "1";
      continue;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != 0) out += "*";
      out += name(t[i]);
    }
  }
  return out;
}

MultiAffineExpr& MultiAffineExpr::operator+=(const MultiAffineExpr& o) {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

MultiAffineExpr operator*(const MultiAffineExpr& a, const MultiAffineExpr& b) {
  const auto va = a.variables();
  const auto vb = b.variables();
  std::vector<VarId> shared;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
  if (!shared.empty()) {
    throw NotMultiAffine("product of expressions sharing variable " + std::to_string(shared.front()));
  }
  check_cap(a.terms_.size() * b.terms_.size());
  std::vector<MultiAffineExpr::Monomial> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      MultiAffineExpr::Monomial m;
      m.reserve(s.size() + t.size());
      std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(m));
      terms.push_back(std::move(m));
    }
  }
  MultiAffineExpr out;
  out.terms_ = normalise(std::move(terms));
  return out;
}

VarMatrix::VarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

void VarMatrix::set(std::size_t r, std::size_t c, MultiAffineExpr e) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("entry index out of range");
  entries_[r * cols_ + c] = std::move(e);
}

void VarMatrix::declare(VarId v, Axis axis, std::size_t index) {
  if (index >= (axis == Axis::Row ? rows_ : cols_)) throw DimensionMismatch("confinement index out of range");
  var_index_[v] = {axis, index};
}

std::string VarMatrix::var_name(VarId v) const {
  auto it = var_names_.find(v);
  return it == var_names_.end() ? "v" + std::to_string(v) : it->second;
}

void VarMatrix::set_labels(std::vector<std::string> rows, std::vector<std::string> cols) {
  if ((!rows.empty() && rows.size() != rows_) || (!cols.empty() && cols.size() != cols_)) {
    throw DimensionMismatch("labels do not match the matrix dimension");
  }
  row_labels_ = std::move(rows);
  col_labels_ = std::move(cols);
}

std::set<VarId> VarMatrix::variables() const {
  std::set<VarId> out;
  for (const auto& e : entries_) {
    for (const auto& t : e.terms()) out.insert(t.begin(), t.end());
  }
  return out;
}

std::vector<ConfinementViolation> validate_confinement(const VarMatrix& m) {
  std::vector<ConfinementViolation> out;
  // First occurrence of each undeclared variable, and whether its later
  // occurrences still fit a common row or a common column.
  struct Seen {
    std::size_t row;
    std::size_t col;
    bool same_row = true;
    bool same_col = true;
  };
  std::map<VarId, Seen> undeclared;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (VarId v : m.at(r, c).variables()) {
        if (auto it = m.var_index().find(v); it != m.var_index().end()) {
          const auto& p = it->second;
          if ((p.axis == Axis::Row ? r : c) != p.index) out.push_back({v, r, c});
          continue;
        }
        auto [it, fresh] = undeclared.try_emplace(v, Seen{r, c});
        if (fresh) continue;
        Seen& s = it->second;
        s.same_row = s.same_row && s.row == r;
        s.same_col = s.same_col && s.col == c;
        if (!s.same_row && !s.same_col) out.push_back({v, r, c});
      }
    }
  }
  return out;
}

void Valuation::set(VarId v, FieldElement value) {
  if (!ctx_.contains(value)) throw FieldError("value for variable " + std::to_string(v) + " is outside the field");
  values_[v] = value;
}

std::optional<FieldElement> Valuation::get(VarId v) const {
  auto it = values_.find(v);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Valuation Valuation::random(const FieldContext& ctx, const std::set<VarId>& vars, Rng& rng) {
  Valuation s(ctx);
  for (VarId v : vars) s.values_[v] = ctx.random(rng);
  return s;
}

FieldElement evaluate(const MultiAffineExpr& e, const Valuation& sigma) {
  const FieldContext& ctx = sigma.ctx();
  FieldElement acc;
  for (const auto& t : e.terms()) {
    FieldElement prod = FieldElement::one();
    for (VarId v : t) {
      const auto x = sigma.get(v);
      if (!x) throw Error("no value for variable " + std::to_string(v));
      prod = ctx.mul(prod, *x);
    }
    acc = acc ^ prod;
  }
  return acc;
}

FieldMatrix evaluate(const VarMatrix& m, const Valuation& sigma) {
  FieldMatrix out(sigma.ctx(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = out.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = evaluate(m.at(r, c), sigma);
  }
  return out;
}

unsigned required_degree(std::size_t t, double p) {
  if (!(p > 0.0 && p <= 0.5)) throw Error("error probability must lie in (0, 1/2]");
  unsigned k = 1;
  while (std::ldexp(p, static_cast<int>(k)) < static_cast<double>(t)) {
    ++k;
    if (k > kMaxFieldDegree) {
      throw LimitExceeded("field degree above " + std::to_string(kMaxFieldDegree) + " needed for " +
                          std::to_string(t) + " variables at this error probability");
    }
  }
  return k;
}

RankSample sample_rank(const VarMatrix& m, double p, Rng& rng) {
  const auto vars = m.variables();
  const unsigned k = required_degree(vars.size(), p);
  const FieldContext ctx(k);
  const Valuation sigma = Valuation::random(ctx, vars, rng);
  return {field_rank(evaluate(m, sigma)), k};
}

bool rank_at_least(const VarMatrix& m, long long r, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 0.5)) throw Error("error probability must lie in (0, 1/2]");
  if (r <= 0) return true;
  if (static_cast<unsigned long long>(r) > std::min(m.rows(), m.cols())) return false;
  return sample_rank(m, p, rng).rank >= static_cast<std::size_t>(r);
}

}  // namespace pauliflow
