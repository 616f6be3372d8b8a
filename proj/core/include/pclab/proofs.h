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


// Polynomial Calculus and Resolution proof objects, checkers and metrics.

#ifndef PCLAB_PROOFS_H_
#define PCLAB_PROOFS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pclab/field.h"
#include "pclab/formulas.h"
#include "pclab/polynomial.h"
#include "pclab/term.h"
#include "pclab/var.h"

namespace pclab {

enum class StepKind : uint8_t { kAxiom, kSquare, kTwin, kLinComb, kMulVar };

// One derivation rule application. Line and axiom indices are 0-based.
struct Step {
  StepKind kind = StepKind::kAxiom;
  int axiom = -1;    // kAxiom
  VarId var;         // kSquare, kTwin, kMulVar
  FieldElement alpha;  // kLinComb
  FieldElement beta;
  int lhs = -1;  // kLinComb first operand, kMulVar operand
  int rhs = -1;  // kLinComb second operand

  static Step Axiom(int index) {
    Step s;
    s.kind = StepKind::kAxiom;
    s.axiom = index;
    return s;
  }
  static Step Square(VarId v) {
    Step s;
    s.kind = StepKind::kSquare;
    s.var = v;
    return s;
  }
  static Step Twin(VarId v) {
    Step s;
    s.kind = StepKind::kTwin;
    s.var = v;
    return s;
  }
  static Step LinComb(FieldElement alpha, int lhs, FieldElement beta, int rhs) {
    Step s;
    s.kind = StepKind::kLinComb;
    s.alpha = alpha;
    s.lhs = lhs;
    s.beta = beta;
    s.rhs = rhs;
    return s;
  }
  static Step MulVar(VarId v, int line) {
    Step s;
    s.kind = StepKind::kMulVar;
    s.var = v;
    s.lhs = line;
    return s;
  }

  friend bool operator==(const Step&, const Step&) = default;
};

struct PcProof {
  Basis basis = Basis::kBoolean;
  PrimeField field;
  std::string axioms_path;  // informational, written to the file header
  std::vector<Step> steps;
};

// Square axiom of v: zero in the multilinear representation. Twin axiom:
// x + ~x - 1 (Boolean) or x ~x + 1 (Fourier); v may be either member.
Polynomial TwinAxiom(VarId v, Basis basis, const PrimeField& field);

struct CheckOptions {
  // Require the last line to equal 1.
  bool require_refutation = true;
  // Keep a line only until its last reference; the report then carries no
  // line polynomials.
  bool streaming = false;
};

struct PcReport {
  bool valid = false;        // every step well-formed (and refutation, if required)
  bool refutation = false;   // last line is 1
  uint64_t size = 0;         // sum of per-line monomial counts
  int degree = 0;            // max line degree
  int lines = 0;
  int first_bad_line = -1;   // 0-based; -1 when valid
  std::string message;
};

// Throws kStructural when proof and axioms disagree on basis or field.
PcReport CheckPcProof(const PcProof& proof, const AxiomSystem& axioms,
                      const CheckOptions& options = {});

// All line polynomials. Throws kStructural on a malformed step.
std::vector<Polynomial> MaterializeLines(const PcProof& proof,
                                         const AxiomSystem& axioms);

// Builds a proof line by line, keeping polynomials, so transforms can skip
// zero lines: every method returns the new line index or kZeroLine when the
// derived polynomial is zero, and accepts kZeroLine operands.
class ProofBuilder {
 public:
  static constexpr int kZeroLine = -1;

  ProofBuilder(const AxiomSystem& axioms);

  int Axiom(int index);
  int Twin(VarId v);
  // alpha * a + beta * b. A single nonzero operand scaled by 1 is reused
  // without emitting a line.
  int LinComb(FieldElement alpha, int a, FieldElement beta, int b);
  int MulVar(VarId v, int a);
  // v1 * ... * vk * a, one variable at a time in the given order.
  int MulTerm(const Term& t, int a);
  // Emits an explicit copy (1 * a + 0 * a) so `a` becomes the last line.
  int Copy(int a);

  int size() const { return static_cast<int>(steps_.size()); }
  const Polynomial& line(int k) const { return lines_[k]; }
  const std::vector<Step>& steps() const { return steps_; }

  // Drops lines outside the backward cone of `final_line` (when set) and
  // renumbers. The map sends builder lines to output lines (-1 if dropped).
  PcProof Finish(std::optional<int> final_line,
                 std::vector<int>* renumbering = nullptr) const;

 private:
  int Push(Step step, Polynomial poly);

  const AxiomSystem& axioms_;
  std::vector<Step> steps_;
  std::vector<Polynomial> lines_;
};

// Resolution.

enum class ResKind : uint8_t { kInput, kResolve };

struct ResStep {
  ResKind kind = ResKind::kInput;
  int clause = -1;  // kInput, 0-based index into the CNF
  int lhs = -1;
  int rhs = -1;
  VarId pivot;

  static ResStep Input(int clause) {
    ResStep s;
    s.clause = clause;
    return s;
  }
  static ResStep Resolve(int lhs, int rhs, VarId pivot) {
    ResStep s;
    s.kind = ResKind::kResolve;
    s.lhs = lhs;
    s.rhs = rhs;
    s.pivot = pivot;
    return s;
  }
  friend bool operator==(const ResStep&, const ResStep&) = default;
};

struct ResolutionProof {
  std::string cnf_path;
  std::vector<ResStep> steps;
};

// Resolvent of two clauses on `pivot` (positive in one, negative in the
// other, either order). Returns nullopt when the pivot is not complementary
// or the resolvent would be tautological.
std::optional<Clause> Resolve(const Clause& a, const Clause& b, VarId pivot);

struct ResReport {
  bool valid = false;
  bool refutation = false;  // last clause empty
  int lines = 0;
  int resolutions = 0;
  int max_width = 0;
  int max_negative = 0;  // max negative literals in any derived clause
  int first_bad_line = -1;
  std::string message;
};

ResReport CheckResolution(const ResolutionProof& proof, const Cnf& cnf,
                          bool require_refutation = true);
std::vector<Clause> MaterializeClauses(const ResolutionProof& proof,
                                       const Cnf& cnf);

// Metrics over the Fourier basis.

// Q: unordered pairs of terms sharing a line, self-pairs included.
using TermPair = std::pair<Term, Term>;
struct TermPairLess {
  bool operator()(const TermPair& a, const TermPair& b) const;
};
using TermSet = std::set<Term, GrlexLess>;

// Throws kInvalidArgument for Boolean-basis lines.
std::set<TermPair, TermPairLess> QuadraticPairs(
    const std::vector<Polynomial>& lines);
TermSet QuadraticTerms(const std::vector<Polynomial>& lines);
// Image of pairs under the reduced product.
TermSet QuadraticTermsFromPairs(const std::set<TermPair, TermPairLess>& pairs);
// Quadratic terms containing x.
TermSet QuadraticTermsWith(const TermSet& qt, VarId x);
int QuadraticDegree(const std::vector<Polynomial>& lines);

int MaxDegree(const std::vector<Polynomial>& lines);

// Vertices touched by a term over lifted ordering variables. Edge x(i,j,l)
// and cluster z(i,j,l) variables both count as gadget copies of (i,j);
// unlifted x(i,j) counts as a complete gadget. Twins count as their base.
struct TouchReport {
  std::vector<int> strong;
  std::vector<int> light;
  std::vector<int> tau;  // union, sorted
};
// Throws kInvalidArgument on plain variables.
TouchReport Touched(const Term& t, int n, int ell);
int SpecialDegree(const std::vector<Polynomial>& lines, int n, int ell);

// Seeded random derivation: all axioms first, then `steps` random
// applications of the rules over the axiom universe plus `extra_vars`.
struct RandomDerivationOptions {
  int steps = 20;
  std::vector<VarId> extra_vars;
  size_t max_monomials = 24;
  int max_degree = 6;
  // Twin steps are only drawn for variables in this list.
  std::vector<VarId> twin_vars;
};
PcProof RandomDerivation(const AxiomSystem& axioms,
                         const RandomDerivationOptions& options, uint64_t seed);

// Inserts `count` detours L' = x (x L) at random lines and redirects later
// references to the detour, so x occurs mid-proof without changing any
// line's polynomial. Fourier basis only.
PcProof WithDetours(const PcProof& proof, VarId x, int count, uint64_t seed);

// Text formats. Line and axiom numbers are 1-based in files.
void WritePcProof(std::ostream& out, const PcProof& proof);
PcProof ReadPcProof(std::istream& in);
void WriteResolutionProof(std::ostream& out, const ResolutionProof& proof);
ResolutionProof ReadResolutionProof(std::istream& in);

}  // namespace pclab

#endif  // PCLAB_PROOFS_H_
