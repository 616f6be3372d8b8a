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


// Proof-to-proof transformations: restriction, Split, quadratic-degree to
// degree conversion, gadget clustering and Resolution to PCR simulation.

#ifndef PCLAB_TRANSFORMS_H_
#define PCLAB_TRANSFORMS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pclab/formulas.h"
#include "pclab/polynomial.h"
#include "pclab/proofs.h"
#include "pclab/term.h"
#include "pclab/var.h"

namespace pclab {

// Partial truth assignment on base variables; twins are derived.
class Restriction {
 public:
  // Setting a twin stores the negated value on the base variable. Throws
  // kInvalidArgument when the variable already holds the opposite value.
  void Set(VarId v, bool value);
  std::optional<bool> Get(VarId v) const;
  bool Assigns(VarId v) const { return values_.contains(v.Base()); }
  size_t size() const { return values_.size(); }
  const std::map<VarId, bool>& values() const { return values_; }

 private:
  std::map<VarId, bool> values_;
};

Polynomial Restrict(const Polynomial& p, const Restriction& rho);

// Satisfied clauses are dropped and falsified literals removed.
Cnf Restrict(const Cnf& cnf, const Restriction& rho);

struct RestrictedAxioms {
  AxiomSystem system;
  // Old axiom index -> new index, -1 for axioms that became zero.
  std::vector<int> axiom_map;
};
RestrictedAxioms Restrict(const AxiomSystem& axioms, const Restriction& rho);

struct RestrictedProof {
  RestrictedAxioms axioms;
  PcProof proof;
  // Old line -> new line, -1 for lines that became zero or were pruned.
  std::vector<int> line_map;
};
// Refutations stay refutations; lines outside the final line's backward
// cone are pruned in that case.
RestrictedProof Restrict(const PcProof& proof, const AxiomSystem& axioms,
                         const Restriction& rho);

void WriteRestriction(std::ostream& out, const Restriction& rho);
Restriction ReadRestriction(std::istream& in);

// The partial assignment making j the minimum of a lifted ordering
// instance: x(i,j,l) false for all i, l; x(j,k,l_k) true for each k != j;
// y(k) pointing at j for each k in `pointer_vertices`. ell = 0 addresses the
// unlifted variables x(i,j). `gadget_choice` maps k to l_k and may be empty
// when ell <= 1. Throws kInvalidArgument when some l_k is missing.
Restriction BuildJcta(int n, int ell, int j, const std::vector<int>& pointer_vertices,
                      const std::map<int, int>& gadget_choice);

// The restriction used to drop a heavy vertex j: x(i,j,l) true for every i
// and l != l_i, and x(j,k,l) false for all k, l.
Restriction BuildHeavyRestriction(int n, int ell, int j,
                                  const std::map<int, int>& gadget_choice);

// Split at x. Fourier basis; x and its twin must not occur in any axiom the
// proof uses, in twin-axiom steps, or as a multiplier in twin form.
PcProof Split(const PcProof& proof, const AxiomSystem& axioms, VarId x);

// QT(after) is contained in QT(before) minus the quadratic terms with x.
bool QuadraticContainmentCheck(const std::vector<Polynomial>& before,
                               const std::vector<Polynomial>& after, VarId x);

struct QdegToDegResult {
  PcProof proof;
  int input_qdeg = 0;
  int axiom_degree = 0;  // max degree of the axiom and twin lines used
  int input_degree = 0;
  int output_degree = 0;
  // Max degree of the lines derived while multiplying axiom lines by their
  // selected terms.
  int axiom_multiplication_degree = 0;
};
QdegToDegResult QdegToDeg(const PcProof& proof, const AxiomSystem& axioms);

// Perfect pairings of gadget indices per ordered vertex pair.
class ClusterMap {
 public:
  ClusterMap() = default;
  explicit ClusterMap(int ell) : ell_(ell) {}

  int ell() const { return ell_; }
  // pairing[l - 1] = cluster index in [1, ell/2]. Throws kInvalidArgument
  // unless every cluster index is used exactly twice.
  void SetPairing(int i, int j, std::vector<int> pairing);
  const std::map<std::pair<int, int>, std::vector<int>>& pairings() const {
    return pairings_;
  }
  // x(i,j,l) -> z(i,j,p), twins preserved; other variables unchanged.
  VarId Image(VarId v) const;

 private:
  int ell_ = 0;
  std::map<std::pair<int, int>, std::vector<int>> pairings_;
};

// Uniform perfect pairing for every ordered pair (i, j), i != j: a
// Fisher-Yates shuffle of 1..ell paired consecutively. Throws on odd ell.
ClusterMap RandomPairing(int n, int ell, uint64_t seed);

TermProduct Cluster(const Term& t, const ClusterMap& map);
Polynomial Cluster(const Polynomial& p, const ClusterMap& map);
AxiomSystem Cluster(const AxiomSystem& axioms, const ClusterMap& map);
// Step-for-step image; valid against Cluster(axioms). Fourier only.
PcProof Cluster(const PcProof& proof, const ClusterMap& map);

void WriteClusterMap(std::ostream& out, const ClusterMap& map);
ClusterMap ReadClusterMap(std::istream& in);

// Fraction of `trials` random pairings of one gadget block of size ell under
// which a term on `degree` of its variables keeps all of them as distinct
// cluster variables. Trial k uses DeriveSeed(seed, "cluster-trial", k).
double ClusterRetentionFrequency(int ell, int degree, int trials, uint64_t seed,
                                 int jobs = 1);

// Simulates a Resolution refutation in Boolean PCR against
// CnfToAxioms(cnf, Basis::kBoolean, field). Each clause C is represented by
// the monomial of the twins of its literals.
PcProof ResToPcr(const ResolutionProof& proof, const Cnf& cnf,
                 const PrimeField& field = PrimeField());

}  // namespace pclab

#endif  // PCLAB_TRANSFORMS_H_
