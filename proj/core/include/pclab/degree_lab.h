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


// Residues modulo polynomial families in the multilinear Boolean quotient,
// the operator R(t) = R_tau(t)(t) over lifted ordering axioms, and
// exhaustive checks of its properties at desk scale.

#ifndef PCLAB_DEGREE_LAB_H_
#define PCLAB_DEGREE_LAB_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "pclab/field.h"
#include "pclab/formulas.h"
#include "pclab/polynomial.h"
#include "pclab/term.h"
#include "pclab/var.h"

namespace pclab {

// Span(F) in F[x]/(x^2 - x) together with its graded-lex normal form.
//
// The quotient ring is the ring of functions on {0,1}^U, so Span(F) is the
// set of polynomials vanishing on the common zeros Z of F. The standard
// monomials (those that are not leading terms of Span(F)) are found by
// column reduction of the evaluation matrix on Z in ascending grlex order;
// the residue of P is its unique expansion over them. Variables that no
// generator mentions factor out and are carried through unchanged.
class SpanBasis {
 public:
  static constexpr int kMaxVariables = 16;

  // Boolean basis, base variables only. Throws kScaleLimit when `universe`
  // has more than kMaxVariables variables and kInvalidArgument when a
  // generator leaves the universe or mentions a twin.
  SpanBasis(std::span<const Polynomial> generators, std::vector<VarId> universe,
            const PrimeField& field = PrimeField());

  // The grlex-minimum of P + Span(F).
  Polynomial Reduce(const Polynomial& p) const;
  bool Contains(const Polynomial& p) const { return Reduce(p).IsZero(); }

  // True iff the generators have a common Boolean zero.
  bool Satisfiable() const { return !zeros_.empty(); }
  const std::vector<VarId>& universe() const { return universe_; }
  // Variables mentioned by some generator.
  const std::vector<VarId>& constrained() const { return constrained_; }
  size_t zero_count() const { return zeros_.size(); }

  // The fully inter-reduced echelon basis m - Reduce(m) over every
  // non-standard monomial m of the universe, by descending leading term.
  // Exhaustive over 2^|universe| monomials.
  std::vector<Polynomial> Elements() const;

 private:
  // Normal form of a monomial over the constrained variables, as
  // coefficients of standard_.
  std::vector<FieldElement> NormalForm(uint32_t mask) const;
  Term LocalTerm(uint32_t mask) const;

  PrimeField field_;
  std::vector<VarId> universe_;
  std::vector<VarId> constrained_;
  std::vector<uint32_t> zeros_;
  std::vector<uint32_t> standard_;  // ascending grlex
  // inverse_[r][a]: coefficient of standard_[r] in the expansion of the
  // indicator of zeros_[a].
  std::vector<std::vector<FieldElement>> inverse_;
};

// Residue of P modulo `family` over the variables of both.
Polynomial Residue(const Polynomial& p, std::span<const Polynomial> family);

// Grlex comparison of monomials given as bit masks over an ascending list of
// variables.
bool MaskGrlexLess(uint32_t a, uint32_t b);

// R over the twin-free Boolean translation of GenerateBopLifted(n, ell).
// Span bases per vertex set are cached; concurrent use is safe.
class ResidueOracle {
 public:
  ResidueOracle(int n, int ell, const PrimeField& field = PrimeField());

  int n() const { return n_; }
  int ell() const { return ell_; }
  const AxiomSystem& axioms() const { return axioms_; }
  const std::vector<VarId>& universe() const { return axioms_.universe; }

  // Touched vertices of t.
  std::vector<int> Tau(const Term& t) const;
  // Residue modulo T and BV_j for j in `vertices` (any order, repeats ok).
  Polynomial Residue(const Polynomial& p, std::vector<int> vertices) const;
  Polynomial Residue(const Term& t, std::vector<int> vertices) const;
  // R(t) = residue of t modulo tau(t), extended linearly.
  Polynomial R(const Polynomial& p) const;
  Polynomial R(const Term& t) const;

  std::shared_ptr<const SpanBasis> BasisFor(std::vector<int> vertices) const;
  size_t cached_bases() const;

  // Builds the basis afresh, bypassing the cache.
  SpanBasis Uncached(const std::vector<int>& vertices) const;

 private:
  int n_;
  int ell_;
  AxiomSystem axioms_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::shared_ptr<const SpanBasis>> cache_;
};

struct LemmaReport {
  std::string lemma;
  int n = 0;
  int ell = 0;
  uint64_t cases = 0;
  uint64_t counterexamples = 0;
  std::string first_counterexample;  // empty when none
  double seconds = 0;
};

// All base terms of degree <= max_degree over `universe`, ascending grlex.
std::vector<Term> EnumerateTerms(const std::vector<VarId>& universe,
                                 int max_degree);

// R_tau(wt)(t) = R_tau(t)(t) for all t of degree <= max_degree and all
// variables w with |tau(wt)| < n.
LemmaReport VerifyRdrop(const ResidueOracle& oracle, int max_degree = 4,
                        int jobs = 1);
// R_{BV_I, T}(t) = R_tau(t)(t) for every I containing tau(t) with |I| < n.
LemmaReport VerifyRdrop2(const ResidueOracle& oracle, int max_degree = 4,
                         int jobs = 1);
// tau(t') is contained in tau(t) for every term t' of R(t).
LemmaReport VerifyRtech(const ResidueOracle& oracle, int max_degree = 4,
                        int jobs = 1);
// R(wP) = R(w R(P)) on seeded samples P (<= 5 terms, degree <= 3) with
// |tau(wt)| < n for every term t of P. Sample k uses
// DeriveSeed(seed, "rop-sample", k).
LemmaReport VerifyRopCondition2(const ResidueOracle& oracle, int samples,
                                uint64_t seed, int jobs = 1);
// R(A) = 0 for every axiom A and R(1) = 1.
LemmaReport VerifyRopAxioms(const ResidueOracle& oracle);

// The four residue properties for the span of `generators`: R(P) <= P,
// P - Q in Span gives equal residues, linearity, R(PQ) = R(P R(Q)). Runs
// `pairs` seeded random pairs plus all pairs of terms of degree <=
// exhaustive_degree.
LemmaReport VerifyResidueProperties(const std::vector<Polynomial>& generators,
                                    const std::vector<VarId>& universe,
                                    int pairs, uint64_t seed,
                                    int exhaustive_degree = 2,
                                    const PrimeField& field = PrimeField());

// Heavy vertex choice over the quadratic terms of a Fourier proof.
struct HeavySelection {
  int vertex = 0;
  // l_i for each i != vertex: the gadget index of x(i,vertex,.) occurring
  // most often in heavy terms (lowest on ties, 1 when absent).
  std::map<int, int> gadget_choice;
  // y(vertex, a) for every bit a, then x(i, vertex, l_i).
  std::vector<VarId> split_vars;
  size_t heavy_terms = 0;     // |H|
  size_t touching_terms = 0;  // terms of H strongly touching `vertex`
};

// H = quadratic terms of `lines` strongly touching >= threshold vertices;
// the vertex strongly touched by most of H (lowest on ties). Throws
// kInvalidArgument when H is empty.
HeavySelection SelectHeavyVertex(const std::vector<Polynomial>& lines, int n,
                                 int ell, int threshold);
size_t CountHeavyTerms(const std::vector<Polynomial>& lines, int n, int ell,
                       int threshold);

struct DemoRound {
  int vertex = 0;
  size_t heavy_before = 0;
  size_t heavy_after = 0;
  int lines_before = 0;
  int lines_after = 0;
  // Split variables left alone because a used axiom mentions them.
  int skipped_splits = 0;
  bool valid = false;

  friend bool operator==(const DemoRound&, const DemoRound&) = default;
};
struct DemoReport {
  int n = 0;
  int ell = 0;
  std::vector<DemoRound> rounds;
  int qdeg_before = 0;
  int qdeg_after = 0;  // after all rounds
  int degree_after_qdeg = 0;
  int special_before = 0;
  int special_after_cluster = 0;
  bool all_valid = false;

  friend bool operator==(const DemoReport&, const DemoReport&) = default;
};

// Random Fourier derivation from GenerateBopLifted(n, ell), then up to
// `rounds` rounds of heavy selection, restriction and Split, then QdegToDeg
// and (for even ell) clustering with a seeded pairing. Every intermediate
// proof is re-checked.
DemoReport RunDemoPipeline(int n, int ell, int steps, int rounds,
                           int threshold, uint64_t seed);

}  // namespace pclab

#endif  // PCLAB_DEGREE_LAB_H_
