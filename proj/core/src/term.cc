// Copyright 2026 The pclab Authors
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

#include "pclab/term.h"

#include <algorithm>
#include <string>
#include <vector>

#include "pclab/errors.h"

namespace pclab {

std::string BasisName(Basis basis) {
  return basis == Basis::kBoolean ? "boolean" : "fourier";
}

Basis ParseBasis(std::string_view name) {
  if (name == "boolean") return Basis::kBoolean;
  if (name == "fourier") return Basis::kFourier;
  throw Error(ErrorCode::kParse, "unknown basis '" + std::string(name) + "'");
}

Term::Term(std::vector<VarId> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "term with repeated variable");
  }
}

bool Term::Contains(VarId v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::string Term::ToString() const {
  if (vars_.empty()) return "1";
  std::string out;
  for (const VarId& v : vars_) {
    if (!out.empty()) out += ' ';
    out += v.ToString();
  }
  return out;
}

size_t Term::Hash() const {
  size_t h = 0xCBF29CE484222325ULL;
  for (const VarId& v : vars_) {
    h ^= v.Hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering CompareGrlex(const Term& a, const Term& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& x = a.vars();
  const auto& y = b.vars();
  for (size_t k = x.size(); k-- > 0;) {
    if (auto c = x[k] <=> y[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

TermProduct MulTermByVar(const Term& t, VarId v, Basis basis) {
  const auto& vars = t.vars();
  auto it = std::lower_bound(vars.begin(), vars.end(), v);
  std::vector<VarId> out;
  if (it != vars.end() && *it == v) {
    if (basis == Basis::kBoolean) return {t, 1};
    out.reserve(vars.size() - 1);
    out.insert(out.end(), vars.begin(), it);
    out.insert(out.end(), it + 1, vars.end());
  } else {
    out.reserve(vars.size() + 1);
    out.insert(out.end(), vars.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, vars.end());
  }
  return {Term::FromSorted(std::move(out)), 1};
}

Term MulTerms(const Term& a, const Term& b, Basis basis) {
  std::vector<VarId> out;
  out.reserve(a.vars().size() + b.vars().size());
  if (basis == Basis::kBoolean) {
    std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(),
                   b.vars().end(), std::back_inserter(out));
  } else {
    std::set_symmetric_difference(a.vars().begin(), a.vars().end(),
                                  b.vars().begin(), b.vars().end(),
                                  std::back_inserter(out));
  }
  return Term::FromSorted(std::move(out));
}

}  // namespace pclab
