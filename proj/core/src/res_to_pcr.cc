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


#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pclab/errors.h"
#include "pclab/transforms.h"

namespace pclab {
namespace {

// The PCR monomial of a set of literals: the product of their twins.
Term FalsityTerm(const std::vector<Literal>& literals) {
  std::vector<VarId> vars;
  vars.reserve(literals.size());
  for (const Literal& lit : literals) vars.push_back(lit.Negated().AsVariable());
  return Term(std::move(vars));
}

// Literals of `wide` missing from `narrow`; both are sorted by variable.
std::vector<Literal> Missing(const Clause& wide, const Clause& narrow) {
  std::vector<Literal> out;
  for (const Literal& lit : wide.literals()) {
    bool found = false;
    for (const Literal& other : narrow.literals()) {
      if (other == lit) {
        found = true;
        break;
      }
    }
    if (!found) out.push_back(lit);
  }
  return out;
}

}  // namespace

PcProof ResToPcr(const ResolutionProof& proof, const Cnf& cnf,
                 const PrimeField& field) {
  const ResReport report = CheckResolution(proof, cnf, /*require_refutation=*/false);
  if (!report.valid) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid resolution proof: " + report.message);
  }
  const std::vector<Clause> clauses = MaterializeClauses(proof, cnf);
  const AxiomSystem axioms = CnfToAxioms(cnf, Basis::kBoolean, field);
  const FieldElement one = field.One();
  const FieldElement minus_one = field.Neg(one);
  ProofBuilder builder(axioms);
  std::vector<int> line(proof.steps.size(), ProofBuilder::kZeroLine);
  std::map<int, int> axiom_line;
  std::map<VarId, int> twin_line;
  for (size_t k = 0; k < proof.steps.size(); ++k) {
    const ResStep& s = proof.steps[k];
    if (s.kind == ResKind::kInput) {
      auto [it, fresh] = axiom_line.try_emplace(s.clause, 0);
      if (fresh) it->second = builder.Axiom(s.clause);
      line[k] = it->second;
      continue;
    }
    // pos holds the pivot positively: its monomial is ~x M(A).
    int pos = s.lhs;
    int neg = s.rhs;
    if (!clauses[pos].Contains(Literal{s.pivot.Base(), true})) std::swap(pos, neg);
    const Clause& resolvent = clauses[k];
    const int l1 = builder.MulTerm(
        FalsityTerm(Missing(resolvent, clauses[pos])), line[pos]);
    const int l2 = builder.MulTerm(
        FalsityTerm(Missing(resolvent, clauses[neg])), line[neg]);
    auto [tw, fresh] = twin_line.try_emplace(s.pivot.Base(), 0);
    if (fresh) tw->second = builder.Twin(s.pivot.Base());
    // (x + ~x - 1) M(R), subtracted from x M(R) + ~x M(R).
    const int t = builder.MulTerm(FalsityTerm(resolvent.literals()), tw->second);
    const int sum = builder.LinComb(one, l1, one, l2);
    line[k] = builder.LinComb(one, sum, minus_one, t);
  }
  std::optional<int> final_line;
  if (report.refutation) {
    final_line = line.back();
    if (*final_line != builder.size() - 1) final_line = builder.Copy(*final_line);
  }
  PcProof out = builder.Finish(final_line);
  out.axioms_path = proof.cnf_path;
  return out;
}

}  // namespace pclab
