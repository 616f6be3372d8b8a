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

#include "pclab/formulas.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pclab/errors.h"

namespace pclab {
namespace {

void RequireVertices(int n, int min, const char* what) {
  if (n < min) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " needs n >= " + std::to_string(min) +
                    ", got " + std::to_string(n));
  }
}

void AddOrderingAxioms(Cnf& cnf, int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        cnf.Add(Clause({{VarId::Edge(i, j), false},
                        {VarId::Edge(j, k), false},
                        {VarId::Edge(i, k), true}}),
                ClauseGroup::Ordering());
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      cnf.Add(Clause({{VarId::Edge(i, j), false}, {VarId::Edge(j, i), false}}),
              ClauseGroup::Ordering());
    }
  }
}

}  // namespace

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end(),
            [](const Literal& a, const Literal& b) {
              if (a.var != b.var) return a.var < b.var;
              return a.positive < b.positive;
            });
  literals_.erase(std::unique(literals_.begin(), literals_.end()),
                  literals_.end());
  for (size_t k = 1; k < literals_.size(); ++k) {
    if (literals_[k].var == literals_[k - 1].var) {
      throw Error(ErrorCode::kInvalidArgument,
                  "clause contains both polarities of " +
                      literals_[k].var.ToString());
    }
  }
  for (const Literal& lit : literals_) {
    if (lit.var.negated()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "clause literals must use base variables");
    }
  }
}

int Clause::NegativeCount() const {
  int count = 0;
  for (const Literal& lit : literals_) count += lit.positive ? 0 : 1;
  return count;
}

bool Clause::Contains(const Literal& lit) const {
  return std::find(literals_.begin(), literals_.end(), lit) != literals_.end();
}

Clause Clause::Without(const Literal& lit) const {
  Clause out;
  out.literals_.reserve(literals_.size());
  for (const Literal& l : literals_) {
    if (!(l == lit)) out.literals_.push_back(l);
  }
  return out;
}

std::string Clause::ToString() const {
  if (literals_.empty()) return "[]";
  std::string out;
  for (const Literal& lit : literals_) {
    if (!out.empty()) out += " | ";
    out += lit.ToString();
  }
  return out;
}

size_t Clause::Hash() const {
  size_t h = 0x84222325CBF29CE4ULL;
  for (const Literal& lit : literals_) {
    h ^= lit.var.Hash() + (lit.positive ? 0x51ULL : 0xA7ULL) +
         0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string ClauseGroup::ToString() const {
  switch (kind) {
    case GroupKind::kVertex:
      return "BV(" + std::to_string(vertex) + ")";
    case GroupKind::kOrdering:
      return "T";
    case GroupKind::kNone:
      break;
  }
  return "none";
}

ClauseGroup ClauseGroup::Parse(std::string_view text) {
  if (text == "T") return Ordering();
  if (text == "none") return {};
  if (text.size() > 4 && text.substr(0, 3) == "BV(" && text.back() == ')') {
    try {
      return Vertex(std::stoi(std::string(text.substr(3, text.size() - 4))));
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::kParse, "bad group label '" + std::string(text) + "'");
}

void Cnf::Add(Clause clause, ClauseGroup group) {
  clauses.push_back(std::move(clause));
  groups.push_back(group);
}

void Cnf::RecomputeUniverse() {
  std::set<VarId> vars;
  for (const Clause& c : clauses) {
    for (const Literal& lit : c.literals()) vars.insert(lit.var);
  }
  universe.assign(vars.begin(), vars.end());
}

int Cnf::MaxWidth() const {
  int w = 0;
  for (const Clause& c : clauses) w = std::max(w, c.width());
  return w;
}

ClauseIndex::ClauseIndex(const Cnf& cnf) {
  index_.reserve(cnf.clauses.size());
  for (size_t k = 0; k < cnf.clauses.size(); ++k) {
    index_.emplace(cnf.clauses[k], static_cast<int>(k));
  }
}

int ClauseIndex::Find(const Clause& clause) const {
  auto it = index_.find(clause);
  return it == index_.end() ? -1 : it->second;
}

Cnf GenerateLop(int n) {
  RequireVertices(n, 2, "LOP");
  Cnf cnf;
  cnf.n = n;
  for (int j = 1; j <= n; ++j) {
    std::vector<Literal> lits;
    for (int i = 1; i <= n; ++i) {
      if (i != j) lits.push_back({VarId::Edge(i, j), true});
    }
    cnf.Add(Clause(std::move(lits)), ClauseGroup::Vertex(j));
  }
  AddOrderingAxioms(cnf, n);
  cnf.RecomputeUniverse();
  return cnf;
}

std::vector<Literal> PointerMismatch(int j, int code, int width) {
  std::vector<Literal> lits;
  for (int a = 1; a <= width; ++a) {
    const bool bit = (code >> (a - 1)) & 1;
    lits.push_back({VarId::Pointer(j, a), !bit});
  }
  return lits;
}

Cnf GenerateBop(int n) {
  RequireVertices(n, 2, "BOP");
  Cnf cnf;
  cnf.n = n;
  const int width = PointerWidth(n);
  for (int j = 1; j <= n; ++j) {
    for (int code = 0; code < (1 << width); ++code) {
      std::vector<Literal> lits = PointerMismatch(j, code, width);
      const int i = code + 1;
      if (i <= n && i != j) lits.push_back({VarId::Edge(i, j), true});
      cnf.Add(Clause(std::move(lits)), ClauseGroup::Vertex(j));
    }
  }
  AddOrderingAxioms(cnf, n);
  cnf.RecomputeUniverse();
  return cnf;
}

Cnf OrLift(const Cnf& cnf, int ell, std::span<const VarId> lift_set,
           LiftMode mode) {
  if (ell < 1) {
    throw Error(ErrorCode::kInvalidArgument, "lifting needs ell >= 1");
  }
  std::set<VarId> lifted(lift_set.begin(), lift_set.end());
  for (const VarId& v : lifted) {
    if (!v.IsEdge() || v.gadget() != 0 || v.negated()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "only unlifted edge variables can be lifted: " + v.ToString());
    }
  }
  Cnf out;
  out.n = cnf.n;
  out.ell = ell;
  for (size_t c = 0; c < cnf.clauses.size(); ++c) {
    std::vector<Literal> fixed;
    std::vector<VarId> negatives;
    for (const Literal& lit : cnf.clauses[c].literals()) {
      if (!lifted.contains(lit.var)) {
        fixed.push_back(lit);
      } else if (lit.positive) {
        for (int l = 1; l <= ell; ++l) {
          fixed.push_back({VarId::Edge(lit.var.from(), lit.var.to(), l), true});
        }
      } else {
        negatives.push_back(lit.var);
      }
    }
    if (negatives.empty()) {
      out.Add(Clause(fixed), cnf.groups[c]);
      continue;
    }
    // Enumerate gadget index tuples for the negative lifted literals.
    std::vector<int> choice(negatives.size(), 1);
    while (true) {
      std::vector<Literal> lits = fixed;
      for (size_t k = 0; k < negatives.size(); ++k) {
        lits.push_back(
            {VarId::Edge(negatives[k].from(), negatives[k].to(), choice[k]),
             false});
      }
      out.Add(Clause(std::move(lits)), cnf.groups[c]);
      if (mode == LiftMode::kDiagonal) {
        if (choice[0] == ell) break;
        std::fill(choice.begin(), choice.end(), choice[0] + 1);
        continue;
      }
      size_t k = negatives.size();
      while (k > 0 && choice[k - 1] == ell) {
        choice[k - 1] = 1;
        --k;
      }
      if (k == 0) break;
      ++choice[k - 1];
    }
  }
  out.RecomputeUniverse();
  return out;
}

Cnf GenerateBopLifted(int n, int ell, LiftMode mode) {
  Cnf base = GenerateBop(n);
  std::vector<VarId> edges;
  for (const VarId& v : base.universe) {
    if (v.IsEdge()) edges.push_back(v);
  }
  return OrLift(base, ell, edges, mode);
}

AxiomSystem GenerateCycleTseitin(int n, PrimeField field) {
  RequireVertices(n, 3, "cycle Tseitin");
  AxiomSystem sys;
  sys.basis = Basis::kFourier;
  sys.field = field;
  sys.n = n;
  auto x = [](int k) { return VarId::Plain("x" + std::to_string(k)); };
  for (int k = 1; k <= n; ++k) {
    const int next = k == n ? 1 : k + 1;
    std::vector<Monomial> ms = {
        {Term({x(k), x(next)}), field.One()},
        {Term(), field.FromInt(k == n ? 1 : -1)},
    };
    sys.axioms.push_back(
        Polynomial::FromMonomials(Basis::kFourier, field, std::move(ms)));
    sys.groups.push_back({});
  }
  for (int k = 1; k <= n; ++k) sys.universe.push_back(x(k));
  std::sort(sys.universe.begin(), sys.universe.end());
  return sys;
}

Polynomial ClauseToPolynomial(const Clause& clause, Basis basis,
                              const PrimeField& field,
                              BooleanEncoding encoding) {
  if (basis == Basis::kBoolean && encoding == BooleanEncoding::kTwinMonomial) {
    std::vector<VarId> vars;
    vars.reserve(clause.literals().size());
    for (const Literal& lit : clause.literals()) {
      vars.push_back(lit.Negated().AsVariable());
    }
    return Polynomial::FromTerm(basis, field, Term(std::move(vars)),
                                field.One());
  }
  Polynomial p = Polynomial::Constant(basis, field, 1);
  for (const Literal& lit : clause.literals()) {
    // Factor that vanishes when the literal is true.
    Polynomial factor(basis, field);
    Polynomial x = Polynomial::FromTerm(basis, field, Term({lit.var}), field.One());
    Polynomial one = Polynomial::Constant(basis, field, 1);
    if (basis == Basis::kFourier) {
      factor = lit.positive ? Add(one, x) : Sub(one, x);
    } else {
      factor = lit.positive ? Sub(one, x) : x;
    }
    p = Mul(p, factor);
  }
  return p;
}

AxiomSystem CnfToAxioms(const Cnf& cnf, Basis basis, PrimeField field,
                        BooleanEncoding encoding) {
  AxiomSystem sys;
  sys.basis = basis;
  sys.field = field;
  sys.n = cnf.n;
  sys.ell = cnf.ell;
  sys.universe = cnf.universe;
  sys.groups = cnf.groups;
  sys.axioms.reserve(cnf.clauses.size());
  for (const Clause& c : cnf.clauses) {
    sys.axioms.push_back(ClauseToPolynomial(c, basis, field, encoding));
  }
  return sys;
}

}  // namespace pclab
