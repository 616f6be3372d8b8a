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


#include "pclab/constructions.h"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pclab/errors.h"
#include "pclab/transforms.h"

namespace pclab {
namespace {

void RequireN(int n, int min) {
  if (n < min) {
    throw Error(ErrorCode::kInvalidArgument,
                "construction needs n >= " + std::to_string(min) + ", got " +
                    std::to_string(n));
  }
}

// Emits resolution lines against a fixed CNF, reusing input lines.
class ResWriter {
 public:
  explicit ResWriter(const Cnf& cnf) : cnf_(cnf), index_(cnf) {}

  int Input(const Clause& clause) {
    const int c = index_.Find(clause);
    if (c < 0) {
      throw std::logic_error("construction needs a missing clause " +
                             clause.ToString());
    }
    auto [it, fresh] = inputs_.try_emplace(c, 0);
    if (fresh) it->second = Push(ResStep::Input(c), cnf_.clauses[c]);
    return it->second;
  }

  int Resolve(int a, int b, VarId pivot) {
    std::optional<Clause> r = pclab::Resolve(clauses_[a], clauses_[b], pivot);
    if (!r) throw std::logic_error("tautological resolvent");
    return Push(ResStep::Resolve(a, b, pivot), std::move(*r));
  }

  const Clause& clause(int line) const { return clauses_[line]; }
  ResolutionProof Take() { return std::move(proof_); }

 private:
  int Push(ResStep step, Clause clause) {
    proof_.steps.push_back(step);
    clauses_.push_back(std::move(clause));
    return static_cast<int>(clauses_.size()) - 1;
  }

  const Cnf& cnf_;
  ClauseIndex index_;
  std::map<int, int> inputs_;
  std::vector<Clause> clauses_;
  ResolutionProof proof_;
};

// The variables standing for the edge i -> j: x(i,j) when ell == 0, else the
// gadget copies x(i,j,1..ell).
std::vector<VarId> Gadget(int i, int j, int ell) {
  if (ell == 0) return {VarId::Edge(i, j)};
  std::vector<VarId> out;
  for (int l = 1; l <= ell; ++l) out.push_back(VarId::Edge(i, j, l));
  return out;
}

std::vector<Literal> Positive(const std::vector<VarId>& vars) {
  std::vector<Literal> out;
  for (const VarId& v : vars) out.push_back({v, true});
  return out;
}

// OR of all gadget copies of i -> j over i in [1, m], i != j.
Clause NotMinimal(int j, int m, int n, int ell) {
  std::vector<Literal> lits;
  for (int i = 1; i <= std::min(m, n); ++i) {
    if (i == j) continue;
    for (const Literal& lit : Positive(Gadget(i, j, ell))) lits.push_back(lit);
  }
  return Clause(std::move(lits));
}

// Derives the vertex clause of j from its pointer clauses.
int DeriveVertexClause(ResWriter& w, int n, int ell, int j) {
  const int width = PointerWidth(n);
  std::vector<int> level;
  for (int code = 0; code < (1 << width); ++code) {
    std::vector<Literal> lits = PointerMismatch(j, code, width);
    const int i = code + 1;
    if (i <= n && i != j) {
      for (const Literal& lit : Positive(Gadget(i, j, ell))) lits.push_back(lit);
    }
    level.push_back(w.Input(Clause(std::move(lits))));
  }
  for (int a = 1; a <= width; ++a) {
    std::vector<int> next;
    for (size_t k = 0; k + 1 < level.size(); k += 2) {
      next.push_back(w.Resolve(level[k], level[k + 1], VarId::Pointer(j, a)));
    }
    level = std::move(next);
  }
  return level.front();
}

// Eliminates vertices n..2 from the vertex clauses in `cur` (1-based).
void EliminateVertices(ResWriter& w, int n, int ell, std::vector<int>& cur) {
  for (int m = n; m >= 2; --m) {
    for (int j = 1; j < m; ++j) {
      const std::vector<VarId> into_j = Gadget(m, j, ell);
      for (const VarId& mj : into_j) {
        // ~x(m,j,l') or "j is not minimal among 1..m-1".
        int line = cur[m];
        for (int i = 1; i < m; ++i) {
          for (const VarId& im : Gadget(i, m, ell)) {
            std::vector<Literal> lits = {{im, false}, {mj, false}};
            if (i != j) {
              for (const Literal& lit : Positive(Gadget(i, j, ell))) {
                lits.push_back(lit);
              }
            }
            line = w.Resolve(line, w.Input(Clause(std::move(lits))), im);
          }
        }
        cur[j] = w.Resolve(cur[j], line, mj);
      }
    }
  }
}

ResolutionProof OrderingRefutation(const Cnf& cnf, int n, int ell, bool pointers) {
  ResWriter w(cnf);
  std::vector<int> cur(n + 1, -1);
  for (int j = 1; j <= n; ++j) {
    cur[j] = pointers ? DeriveVertexClause(w, n, ell, j)
                      : w.Input(NotMinimal(j, n, n, ell));
  }
  EliminateVertices(w, n, ell, cur);
  return w.Take();
}

}  // namespace

ResolutionProof LopResolutionRefutation(int n) {
  RequireN(n, 2);
  return OrderingRefutation(GenerateLop(n), n, 0, false);
}

ResolutionProof BopToLopDerivation(int n, std::vector<int>* vertex_lines) {
  RequireN(n, 2);
  const Cnf cnf = GenerateBop(n);
  ResWriter w(cnf);
  if (vertex_lines) vertex_lines->assign(n, -1);
  for (int j = 1; j <= n; ++j) {
    const int line = DeriveVertexClause(w, n, 0, j);
    if (vertex_lines) (*vertex_lines)[j - 1] = line;
  }
  return w.Take();
}

ResolutionProof BopResolutionRefutation(int n) {
  RequireN(n, 2);
  return OrderingRefutation(GenerateBop(n), n, 0, true);
}

ResolutionProof LiftedRefutation(int n, int ell) {
  RequireN(n, 2);
  if (ell < 1) throw Error(ErrorCode::kInvalidArgument, "lifting needs ell >= 1");
  return OrderingRefutation(GenerateBopLifted(n, ell), n, ell, true);
}

PcProof PcrUpperBound(int n, int ell, const PrimeField& field) {
  return ResToPcr(LiftedRefutation(n, ell), GenerateBopLifted(n, ell), field);
}

PcProof TseitinFourierRefutation(int n, const PrimeField& field) {
  const AxiomSystem axioms = GenerateCycleTseitin(n, field);
  auto x = [](int k) { return VarId::Plain("x" + std::to_string(k)); };
  const FieldElement one = field.One();
  ProofBuilder b(axioms);
  // x_k (x_k x_{k+1} - 1) = x_{k+1} - x_k telescopes to x_n - x_1.
  int chain = ProofBuilder::kZeroLine;
  for (int k = 1; k < n; ++k) {
    const int step = b.MulVar(x(k), b.Axiom(k - 1));
    chain = b.LinComb(one, chain, one, step);
  }
  // x_n (x_n x_1 + 1) = x_1 + x_n.
  const int closing = b.MulVar(x(n), b.Axiom(n - 1));
  const FieldElement half = field.Inv(field.FromInt(2));
  const int x1 = b.LinComb(half, closing, field.Neg(half), chain);
  const int last = b.MulVar(x(1), x1);
  PcProof proof = b.Finish(last);
  return proof;
}

}  // namespace pclab
