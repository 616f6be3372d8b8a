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
#include <map>
#include <vector>

#include "pclab/degree_lab.h"
#include "pclab/errors.h"
#include "pclab/proofs.h"
#include "pclab/random.h"
#include "pclab/transforms.h"

namespace pclab {
namespace {

std::vector<Term> HeavyTerms(const std::vector<Polynomial>& lines, int n, int ell,
                             int threshold) {
  std::vector<Term> heavy;
  for (const Term& t : QuadraticTerms(lines)) {
    if (static_cast<int>(Touched(t, n, ell).strong.size()) >= threshold) {
      heavy.push_back(t);
    }
  }
  return heavy;
}

}  // namespace

size_t CountHeavyTerms(const std::vector<Polynomial>& lines, int n, int ell,
                       int threshold) {
  return HeavyTerms(lines, n, ell, threshold).size();
}

HeavySelection SelectHeavyVertex(const std::vector<Polynomial>& lines, int n,
                                 int ell, int threshold) {
  if (ell < 1) {
    throw Error(ErrorCode::kInvalidArgument, "heavy selection needs lifted variables");
  }
  const std::vector<Term> heavy = HeavyTerms(lines, n, ell, threshold);
  if (heavy.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no quadratic term strongly touches " + std::to_string(threshold) +
                    " vertices");
  }
  std::vector<size_t> touching(n + 1, 0);
  for (const Term& t : heavy) {
    for (int v : Touched(t, n, ell).strong) ++touching[v];
  }
  HeavySelection sel;
  sel.heavy_terms = heavy.size();
  for (int v = 1; v <= n; ++v) {
    if (touching[v] > sel.touching_terms) {
      sel.vertex = v;
      sel.touching_terms = touching[v];
    }
  }
  const int j = sel.vertex;
  // counts[i][l]: heavy terms containing x(i,j,l).
  std::vector<std::vector<size_t>> counts(n + 1, std::vector<size_t>(ell + 1, 0));
  for (const Term& t : heavy) {
    for (const VarId& raw : t.vars()) {
      const VarId v = raw.Base();
      if (v.IsEdge() && v.to() == j && v.gadget() >= 1 && v.gadget() <= ell) {
        ++counts[v.from()][v.gadget()];
      }
    }
  }
  for (int a = 1; a <= PointerWidth(n); ++a) {
    sel.split_vars.push_back(VarId::Pointer(j, a));
  }
  for (int i = 1; i <= n; ++i) {
    if (i == j) continue;
    int best = 1;
    for (int l = 2; l <= ell; ++l) {
      if (counts[i][l] > counts[i][best]) best = l;
    }
    sel.gadget_choice[i] = best;
    sel.split_vars.push_back(VarId::Edge(i, j, best));
  }
  return sel;
}

namespace {

bool UsedAxiomsMention(const PcProof& proof, const AxiomSystem& axioms, VarId v) {
  for (const Step& s : proof.steps) {
    if (s.kind == StepKind::kAxiom && axioms.axioms[s.axiom].Mentions(v.Base())) {
      return true;
    }
  }
  return false;
}

}  // namespace

DemoReport RunDemoPipeline(int n, int ell, int steps, int rounds, int threshold,
                           uint64_t seed) {
  if (ell < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "the heavy restriction needs ell >= 2 to remove vertex axioms");
  }
  DemoReport report;
  report.n = n;
  report.ell = ell;
  AxiomSystem axioms =
      CnfToAxioms(GenerateBopLifted(n, ell), Basis::kFourier, PrimeField());
  RandomDerivationOptions options;
  options.steps = steps;
  PcProof proof = RandomDerivation(axioms, options, DeriveSeed(seed, "demo-derivation"));
  CheckOptions derivation;
  derivation.require_refutation = false;
  bool valid = CheckPcProof(proof, axioms, derivation).valid;
  std::vector<Polynomial> lines = MaterializeLines(proof, axioms);
  report.qdeg_before = QuadraticDegree(lines);
  report.special_before = SpecialDegree(lines, n, ell);
  for (int round = 0; round < rounds; ++round) {
    DemoRound r;
    r.heavy_before = CountHeavyTerms(lines, n, ell, threshold);
    if (r.heavy_before == 0) break;
    const HeavySelection sel = SelectHeavyVertex(lines, n, ell, threshold);
    r.vertex = sel.vertex;
    r.lines_before = static_cast<int>(proof.steps.size());
    const Restriction rho =
        BuildHeavyRestriction(n, ell, sel.vertex, sel.gadget_choice);
    RestrictedProof restricted = Restrict(proof, axioms, rho);
    axioms = std::move(restricted.axioms.system);
    proof = std::move(restricted.proof);
    for (const VarId& v : sel.split_vars) {
      // Prohibition clauses of the vertex survive the restriction and pin
      // its pointer bits; those bits stay unsplit.
      if (UsedAxiomsMention(proof, axioms, v)) {
        ++r.skipped_splits;
        continue;
      }
      proof = Split(proof, axioms, v);
    }
    r.valid = CheckPcProof(proof, axioms, derivation).valid;
    valid = valid && r.valid;
    lines = MaterializeLines(proof, axioms);
    r.lines_after = static_cast<int>(proof.steps.size());
    r.heavy_after = CountHeavyTerms(lines, n, ell, threshold);
    report.rounds.push_back(r);
  }
  report.qdeg_after = QuadraticDegree(lines);
  QdegToDegResult low = QdegToDeg(proof, axioms);
  valid = valid && CheckPcProof(low.proof, axioms, derivation).valid;
  report.degree_after_qdeg = low.output_degree;
  if (ell % 2 == 0) {
    const ClusterMap map = RandomPairing(n, ell, DeriveSeed(seed, "demo-cluster"));
    const AxiomSystem clustered_axioms = Cluster(axioms, map);
    const PcProof clustered = Cluster(low.proof, map);
    valid = valid && CheckPcProof(clustered, clustered_axioms, derivation).valid;
    report.special_after_cluster =
        SpecialDegree(MaterializeLines(clustered, clustered_axioms), n, ell / 2);
  } else {
    report.special_after_cluster = SpecialDegree(
        MaterializeLines(low.proof, axioms), n, ell);
  }
  report.all_valid = valid;
  return report;
}

}  // namespace pclab
