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


#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "pclab/errors.h"
#include "pclab/transforms.h"
#include "text_util.h"

namespace pclab {

void Restriction::Set(VarId v, bool value) {
  const bool base_value = v.negated() ? !value : value;
  auto [it, inserted] = values_.emplace(v.Base(), base_value);
  if (!inserted && it->second != base_value) {
    throw Error(ErrorCode::kInvalidArgument,
                "restriction assigns both values to " + v.Base().ToString());
  }
}

std::optional<bool> Restriction::Get(VarId v) const {
  auto it = values_.find(v.Base());
  if (it == values_.end()) return std::nullopt;
  return v.negated() ? !it->second : it->second;
}

Polynomial Restrict(const Polynomial& p, const Restriction& rho) {
  const PrimeField& f = p.field();
  std::vector<Monomial> out;
  out.reserve(p.monomial_count());
  for (const Monomial& m : p.monomials()) {
    FieldElement coef = m.coef;
    std::vector<VarId> kept;
    for (const VarId& v : m.term.vars()) {
      auto it = rho.values().find(v.Base());
      if (it == rho.values().end()) {
        kept.push_back(v);
      } else {
        coef = f.Mul(coef, EncodeTruth(it->second, v.negated(), p.basis(), f));
      }
    }
    if (!coef.IsZero()) out.push_back({Term::FromSorted(std::move(kept)), coef});
  }
  return Polynomial::FromMonomials(p.basis(), f, std::move(out));
}

Cnf Restrict(const Cnf& cnf, const Restriction& rho) {
  Cnf out;
  out.n = cnf.n;
  out.ell = cnf.ell;
  for (size_t c = 0; c < cnf.clauses.size(); ++c) {
    bool satisfied = false;
    std::vector<Literal> kept;
    for (const Literal& lit : cnf.clauses[c].literals()) {
      std::optional<bool> value = rho.Get(lit.var);
      if (!value) {
        kept.push_back(lit);
      } else if (*value == lit.positive) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) out.Add(Clause(std::move(kept)), cnf.groups[c]);
  }
  for (const VarId& v : cnf.universe) {
    if (!rho.Assigns(v)) out.universe.push_back(v);
  }
  return out;
}

RestrictedAxioms Restrict(const AxiomSystem& axioms, const Restriction& rho) {
  RestrictedAxioms r;
  r.system.basis = axioms.basis;
  r.system.field = axioms.field;
  r.system.n = axioms.n;
  r.system.ell = axioms.ell;
  for (const VarId& v : axioms.universe) {
    if (!rho.Assigns(v)) r.system.universe.push_back(v);
  }
  r.axiom_map.assign(axioms.axioms.size(), -1);
  for (size_t a = 0; a < axioms.axioms.size(); ++a) {
    Polynomial p = Restrict(axioms.axioms[a], rho);
    if (p.IsZero()) continue;
    r.axiom_map[a] = static_cast<int>(r.system.axioms.size());
    r.system.axioms.push_back(std::move(p));
    r.system.groups.push_back(a < axioms.groups.size() ? axioms.groups[a]
                                                       : ClauseGroup());
  }
  return r;
}

RestrictedProof Restrict(const PcProof& proof, const AxiomSystem& axioms,
                         const Restriction& rho) {
  RestrictedProof out;
  out.axioms = Restrict(axioms, rho);
  const std::vector<Polynomial> original = MaterializeLines(proof, axioms);
  const PrimeField& f = axioms.field;
  ProofBuilder builder(out.axioms.system);
  const int count = static_cast<int>(proof.steps.size());
  std::vector<int> line(count, ProofBuilder::kZeroLine);
  for (int k = 0; k < count; ++k) {
    const Step& s = proof.steps[k];
    switch (s.kind) {
      case StepKind::kAxiom: {
        const int a = out.axioms.axiom_map[s.axiom];
        if (a >= 0) line[k] = builder.Axiom(a);
        break;
      }
      case StepKind::kSquare:
        break;
      case StepKind::kTwin:
        if (!rho.Assigns(s.var)) line[k] = builder.Twin(s.var);
        break;
      case StepKind::kLinComb:
        line[k] = builder.LinComb(s.alpha, line[s.lhs], s.beta, line[s.rhs]);
        break;
      case StepKind::kMulVar:
        if (std::optional<bool> value = rho.Get(s.var)) {
          // Multiplying by a constant: a scalar combination.
          FieldElement c = EncodeTruth(*value, false, axioms.basis, f);
          line[k] = builder.LinComb(c, line[s.lhs], f.Zero(), ProofBuilder::kZeroLine);
        } else {
          line[k] = builder.MulVar(s.var, line[s.lhs]);
        }
        break;
    }
  }
  std::optional<int> final_line;
  if (count > 0 && original.back().IsOne()) {
    int last = line[count - 1];
    if (last != builder.size() - 1) last = builder.Copy(last);
    final_line = last;
  }
  std::vector<int> renumber;
  out.proof = builder.Finish(final_line, &renumber);
  out.proof.axioms_path = proof.axioms_path;
  out.line_map.assign(count, -1);
  for (int k = 0; k < count; ++k) {
    if (line[k] >= 0) out.line_map[k] = renumber[line[k]];
  }
  return out;
}

void WriteRestriction(std::ostream& out, const Restriction& rho) {
  for (const auto& [v, value] : rho.values()) {
    out << "set " << v.ToString() << " = " << (value ? "true" : "false") << '\n';
  }
}

Restriction ReadRestriction(std::istream& in) {
  Restriction rho;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = internal::Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> tok = internal::SplitWs(line);
    if (tok.size() != 4 || tok[0] != "set" || tok[2] != "=" ||
        (tok[3] != "true" && tok[3] != "false")) {
      throw Error(ErrorCode::kParse, "bad restriction line '" + raw + "'");
    }
    rho.Set(VarId::Parse(tok[1]), tok[3] == "true");
  }
  return rho;
}

namespace {

void RequireVertex(int n, int j) {
  if (j < 1 || j > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(j) + " outside [1," + std::to_string(n) + "]");
  }
}

// Gadget indices addressing x(i,j): {0} when unlifted, else 1..ell.
std::vector<int> Gadgets(int ell) {
  if (ell <= 0) return {0};
  std::vector<int> g;
  for (int l = 1; l <= ell; ++l) g.push_back(l);
  return g;
}

int ChosenGadget(int ell, int k, const std::map<int, int>& choice) {
  auto it = choice.find(k);
  if (it != choice.end()) {
    if ((ell <= 0 && it->second != 0) || (ell > 0 && (it->second < 1 || it->second > ell))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "gadget index out of range for vertex " + std::to_string(k));
    }
    return it->second;
  }
  if (ell <= 1) return ell <= 0 ? 0 : 1;
  throw Error(ErrorCode::kInvalidArgument,
              "no gadget index chosen for vertex " + std::to_string(k));
}

}  // namespace

Restriction BuildJcta(int n, int ell, int j, const std::vector<int>& pointer_vertices,
                      const std::map<int, int>& gadget_choice) {
  RequireVertex(n, j);
  Restriction rho;
  for (int i = 1; i <= n; ++i) {
    if (i == j) continue;
    for (int l : Gadgets(ell)) rho.Set(VarId::Edge(i, j, l), false);
  }
  for (int k = 1; k <= n; ++k) {
    if (k == j) continue;
    rho.Set(VarId::Edge(j, k, ChosenGadget(ell, k, gadget_choice)), true);
  }
  const int width = PointerWidth(n);
  for (int k : pointer_vertices) {
    RequireVertex(n, k);
    if (k == j) {
      throw Error(ErrorCode::kInvalidArgument, "vertex cannot point at itself");
    }
    for (int a = 1; a <= width; ++a) {
      rho.Set(VarId::Pointer(k, a), (((j - 1) >> (a - 1)) & 1) != 0);
    }
  }
  return rho;
}

Restriction BuildHeavyRestriction(int n, int ell, int j,
                                  const std::map<int, int>& gadget_choice) {
  RequireVertex(n, j);
  Restriction rho;
  for (int i = 1; i <= n; ++i) {
    if (i == j) continue;
    const int keep = ChosenGadget(ell, i, gadget_choice);
    for (int l : Gadgets(ell)) {
      if (l != keep) rho.Set(VarId::Edge(i, j, l), true);
    }
    for (int l : Gadgets(ell)) rho.Set(VarId::Edge(j, i, l), false);
  }
  return rho;
}

}  // namespace pclab
