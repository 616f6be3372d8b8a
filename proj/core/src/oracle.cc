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

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pclab/errors.h"
#include "pclab/formulas.h"

namespace pclab {
namespace {

void RequireScale(size_t vars) {
  if (vars > static_cast<size_t>(PointEvaluator::kMaxVariables)) {
    throw Error(ErrorCode::kScaleLimit,
                "exhaustive enumeration limited to " +
                    std::to_string(PointEvaluator::kMaxVariables) +
                    " variables, instance has " + std::to_string(vars));
  }
}

}  // namespace

PointEvaluator::PointEvaluator(std::span<const Polynomial> polys,
                               std::vector<VarId> universe)
    : universe_(std::move(universe)) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()),
                  universe_.end());
  RequireScale(universe_.size());
  std::unordered_map<VarId, int, VarIdHash> position;
  for (size_t k = 0; k < universe_.size(); ++k) {
    position.emplace(universe_[k], static_cast<int>(k));
  }
  if (!polys.empty()) {
    basis_ = polys.front().basis();
    field_ = polys.front().field();
  }
  for (const Polynomial& p : polys) {
    if (p.basis() != basis_ || !(p.field() == field_)) {
      throw Error(ErrorCode::kStructural, "mixed basis or field in family");
    }
    std::vector<Entry> entries;
    for (const Monomial& m : p.monomials()) {
      Entry e{0, 0, m.coef};
      for (const VarId& v : m.term.vars()) {
        auto it = position.find(v.Base());
        if (it == position.end()) {
          throw Error(ErrorCode::kInvalidArgument,
                      "variable outside universe: " + v.ToString());
        }
        (v.negated() ? e.twin_mask : e.mask) |= uint32_t{1} << it->second;
      }
      entries.push_back(e);
    }
    polys_.push_back(std::move(entries));
  }
}

FieldElement PointEvaluator::Eval(size_t index, uint64_t point) const {
  const uint32_t a = static_cast<uint32_t>(point);
  FieldElement total = field_.Zero();
  for (const Entry& e : polys_[index]) {
    if (basis_ == Basis::kBoolean) {
      if ((a & e.mask) == e.mask && (a & e.twin_mask) == 0) {
        total = field_.Add(total, e.coef);
      }
    } else {
      // TRUE encodes as -1; a twin of a FALSE variable is -1 as well.
      const int parity =
          (std::popcount(a & e.mask) + std::popcount(~a & e.twin_mask)) & 1;
      total = parity ? field_.Sub(total, e.coef) : field_.Add(total, e.coef);
    }
  }
  return total;
}

bool PointEvaluator::AllVanish(uint64_t point) const {
  for (size_t k = 0; k < polys_.size(); ++k) {
    if (!Eval(k, point).IsZero()) return false;
  }
  return true;
}

Assignment PointEvaluator::ToAssignment(uint64_t point) const {
  Assignment a;
  for (size_t k = 0; k < universe_.size(); ++k) {
    a.Set(universe_[k], (point >> k) & 1);
  }
  return a;
}

SatResult CheckSatisfiable(const Cnf& cnf) {
  std::vector<VarId> universe = cnf.universe;
  for (const Clause& c : cnf.clauses) {
    for (const Literal& lit : c.literals()) universe.push_back(lit.var);
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  RequireScale(universe.size());
  std::unordered_map<VarId, int, VarIdHash> position;
  for (size_t k = 0; k < universe.size(); ++k) {
    position.emplace(universe[k], static_cast<int>(k));
  }
  struct Masks {
    uint32_t pos = 0;
    uint32_t neg = 0;
  };
  std::vector<Masks> masks;
  masks.reserve(cnf.clauses.size());
  for (const Clause& c : cnf.clauses) {
    Masks m;
    for (const Literal& lit : c.literals()) {
      (lit.positive ? m.pos : m.neg) |= uint32_t{1} << position[lit.var];
    }
    masks.push_back(m);
  }
  SatResult result;
  const uint64_t points = uint64_t{1} << universe.size();
  for (uint64_t p = 0; p < points; ++p) {
    ++result.points_checked;
    const uint32_t a = static_cast<uint32_t>(p);
    bool ok = true;
    for (const Masks& m : masks) {
      if (((a & m.pos) | (~a & m.neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      result.satisfiable = true;
      for (size_t k = 0; k < universe.size(); ++k) {
        result.witness.Set(universe[k], (p >> k) & 1);
      }
      return result;
    }
  }
  return result;
}

SatResult CheckSatisfiable(const AxiomSystem& system) {
  std::set<VarId> vars(system.universe.begin(), system.universe.end());
  for (const Polynomial& p : system.axioms) {
    for (const VarId& v : p.Variables()) vars.insert(v.Base());
  }
  PointEvaluator eval(system.axioms, {vars.begin(), vars.end()});
  SatResult result;
  const uint64_t points = uint64_t{1} << eval.num_variables();
  for (uint64_t p = 0; p < points; ++p) {
    ++result.points_checked;
    if (eval.AllVanish(p)) {
      result.satisfiable = true;
      result.witness = eval.ToAssignment(p);
      return result;
    }
  }
  return result;
}

bool SemanticImplies(std::span<const Polynomial> premises, const Polynomial& g) {
  std::set<VarId> vars;
  for (const Polynomial& p : premises) {
    for (const VarId& v : p.Variables()) vars.insert(v.Base());
  }
  for (const VarId& v : g.Variables()) vars.insert(v.Base());
  std::vector<Polynomial> family(premises.begin(), premises.end());
  family.push_back(g);
  PointEvaluator eval(family, {vars.begin(), vars.end()});
  const size_t goal = family.size() - 1;
  const uint64_t points = uint64_t{1} << eval.num_variables();
  for (uint64_t p = 0; p < points; ++p) {
    bool premises_hold = true;
    for (size_t k = 0; k < goal && premises_hold; ++k) {
      premises_hold = eval.Eval(k, p).IsZero();
    }
    if (premises_hold && !eval.Eval(goal, p).IsZero()) return false;
  }
  return true;
}

}  // namespace pclab
