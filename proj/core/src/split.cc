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
#include <string>
#include <vector>

#include "pclab/errors.h"
#include "pclab/transforms.h"

namespace pclab {
namespace {

constexpr int kZero = ProofBuilder::kZeroLine;

void RequireFourier(Basis basis, const char* what) {
  if (basis != Basis::kFourier) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " is defined over the Fourier basis");
  }
}

// Builds `line` at its end and returns it, copying if it is aliased.
int EnsureLast(ProofBuilder& builder, int line) {
  return line == builder.size() - 1 ? line : builder.Copy(line);
}

}  // namespace

PcProof Split(const PcProof& proof, const AxiomSystem& axioms, VarId x) {
  RequireFourier(proof.basis, "Split");
  const VarId base = x.Base();
  const int count = static_cast<int>(proof.steps.size());
  for (int k = 0; k < count; ++k) {
    const Step& s = proof.steps[k];
    const std::string where = "line " + std::to_string(k + 1);
    if (s.kind == StepKind::kAxiom) {
      if (s.axiom < 0 || s.axiom >= static_cast<int>(axioms.axioms.size())) {
        throw Error(ErrorCode::kStructural, where + " uses a missing axiom");
      }
      if (axioms.axioms[s.axiom].Mentions(base) ||
          axioms.axioms[s.axiom].Mentions(base.Twin())) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cannot split at " + base.ToString() + ": axiom " +
                        std::to_string(s.axiom + 1) + " mentions it");
      }
    } else if (s.kind == StepKind::kTwin && s.var.Base() == base) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot split at " + base.ToString() + ": " + where +
                      " uses its twin axiom");
    } else if (s.kind == StepKind::kMulVar && s.var == base.Twin()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot split at " + base.ToString() + ": " + where +
                      " multiplies by its twin");
    }
  }
  // Materializing first validates the references.
  const std::vector<Polynomial> lines = MaterializeLines(proof, axioms);
  ProofBuilder builder(axioms);
  // Per original line: builder lines of the x-coefficient and x-free part.
  std::vector<int> one(count, kZero), zero(count, kZero);
  for (int k = 0; k < count; ++k) {
    const Step& s = proof.steps[k];
    switch (s.kind) {
      case StepKind::kAxiom:
        zero[k] = builder.Axiom(s.axiom);
        break;
      case StepKind::kSquare:
        break;
      case StepKind::kTwin:
        zero[k] = builder.Twin(s.var);
        break;
      case StepKind::kLinComb:
        one[k] = builder.LinComb(s.alpha, one[s.lhs], s.beta, one[s.rhs]);
        zero[k] = builder.LinComb(s.alpha, zero[s.lhs], s.beta, zero[s.rhs]);
        break;
      case StepKind::kMulVar:
        if (s.var == base) {
          one[k] = zero[s.lhs];
          zero[k] = one[s.lhs];
        } else {
          one[k] = builder.MulVar(s.var, one[s.lhs]);
          zero[k] = builder.MulVar(s.var, zero[s.lhs]);
        }
        break;
    }
  }
  std::optional<int> final_line;
  if (count > 0 && lines.back().IsOne()) {
    final_line = EnsureLast(builder, zero[count - 1]);
  }
  PcProof out = builder.Finish(final_line);
  out.axioms_path = proof.axioms_path;
  return out;
}

bool QuadraticContainmentCheck(const std::vector<Polynomial>& before,
                               const std::vector<Polynomial>& after, VarId x) {
  const TermSet qt_before = QuadraticTerms(before);
  const TermSet qt_x = QuadraticTermsWith(qt_before, x.Base());
  for (const Term& t : QuadraticTerms(after)) {
    if (!qt_before.contains(t) || qt_x.contains(t)) return false;
  }
  return true;
}

QdegToDegResult QdegToDeg(const PcProof& proof, const AxiomSystem& axioms) {
  RequireFourier(proof.basis, "quadratic degree");
  const std::vector<Polynomial> lines = MaterializeLines(proof, axioms);
  QdegToDegResult result;
  result.input_qdeg = QuadraticDegree(lines);
  result.input_degree = MaxDegree(lines);
  ProofBuilder builder(axioms);
  const int count = static_cast<int>(proof.steps.size());
  // P'_k = t_k P_k lives at builder line out[k]; zero lines have no term.
  std::vector<Term> t(count);
  std::vector<int> out(count, kZero);
  for (int k = 0; k < count; ++k) {
    const Step& s = proof.steps[k];
    const Polynomial& p = lines[k];
    if (p.IsZero()) continue;
    switch (s.kind) {
      case StepKind::kAxiom:
      case StepKind::kTwin: {
        result.axiom_degree = std::max(result.axiom_degree, p.Degree());
        t[k] = p.LeadingTerm();
        int line = s.kind == StepKind::kAxiom ? builder.Axiom(s.axiom)
                                              : builder.Twin(s.var);
        const int first = builder.size();
        line = builder.MulTerm(t[k], line);
        for (int m = first; m < builder.size(); ++m) {
          result.axiom_multiplication_degree =
              std::max(result.axiom_multiplication_degree, builder.line(m).Degree());
        }
        out[k] = line;
        break;
      }
      case StepKind::kSquare:
        break;  // always zero
      case StepKind::kMulVar:
        // t_k = x t_j gives t_k P_k = t_j P_j: reuse the earlier line.
        t[k] = MulTermByVar(t[s.lhs], s.var, Basis::kFourier).term;
        out[k] = out[s.lhs];
        break;
      case StepKind::kLinComb: {
        t[k] = p.LeadingTerm();
        auto part = [&](FieldElement c, int j) {
          if (c.IsZero() || lines[j].IsZero()) return kZero;
          return builder.MulTerm(MulTerms(t[k], t[j], Basis::kFourier), out[j]);
        };
        const int a = part(s.alpha, s.lhs);
        const int b = part(s.beta, s.rhs);
        out[k] = builder.LinComb(s.alpha, a, s.beta, b);
        break;
      }
    }
  }
  std::optional<int> final_line;
  if (count > 0 && lines.back().IsOne()) {
    final_line = EnsureLast(builder, out[count - 1]);
  }
  result.proof = builder.Finish(final_line);
  result.proof.axioms_path = proof.axioms_path;
  result.output_degree = MaxDegree(MaterializeLines(result.proof, axioms));
  return result;
}

}  // namespace pclab
