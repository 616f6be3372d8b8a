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

// Ordering-principle CNF families, OR-lifting, clause translation to
// polynomials, and an exhaustive satisfiability oracle.

#ifndef PCLAB_FORMULAS_H_
#define PCLAB_FORMULAS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pclab/field.h"
#include "pclab/polynomial.h"
#include "pclab/term.h"
#include "pclab/var.h"

namespace pclab {

struct Literal {
  VarId var;  // always a base variable
  bool positive = true;

  Literal Negated() const { return {var, !positive}; }
  // The literal read as a PCR variable: x or its twin.
  VarId AsVariable() const { return positive ? var : var.Twin(); }
  std::string ToString() const {
    return (positive ? "" : "~") + var.ToString();
  }
  friend bool operator==(const Literal&, const Literal&) = default;
};

class Clause {
 public:
  Clause() = default;
  // Sorts by variable and merges repeats. A variable in both polarities is
  // rejected with kInvalidArgument.
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals)
      : Clause(std::vector<Literal>(literals)) {}

  const std::vector<Literal>& literals() const { return literals_; }
  int width() const { return static_cast<int>(literals_.size()); }
  bool empty() const { return literals_.empty(); }
  int NegativeCount() const;
  bool Contains(const Literal& lit) const;
  // Clause with `lit` removed (no-op when absent).
  Clause Without(const Literal& lit) const;
  std::string ToString() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  size_t Hash() const;

 private:
  std::vector<Literal> literals_;
};

struct ClauseHash {
  size_t operator()(const Clause& c) const { return c.Hash(); }
};

// Axiom groups of ordering-principle formulas: the vertex axioms of j, the
// ordering axioms, or unlabeled.
enum class GroupKind : uint8_t { kNone, kVertex, kOrdering };

struct ClauseGroup {
  GroupKind kind = GroupKind::kNone;
  int vertex = 0;

  static ClauseGroup Vertex(int j) { return {GroupKind::kVertex, j}; }
  static ClauseGroup Ordering() { return {GroupKind::kOrdering, 0}; }
  std::string ToString() const;
  static ClauseGroup Parse(std::string_view text);
  friend bool operator==(const ClauseGroup&, const ClauseGroup&) = default;
};

struct Cnf {
  int n = 0;
  int ell = 0;  // 0 for unlifted formulas
  std::vector<Clause> clauses;
  std::vector<ClauseGroup> groups;  // parallel to clauses
  std::vector<VarId> universe;      // sorted base variables

  void Add(Clause clause, ClauseGroup group = {});
  // Rebuilds `universe` from the variables occurring in the clauses.
  void RecomputeUniverse();
  int MaxWidth() const;
};

// Lookup of clause position by content.
class ClauseIndex {
 public:
  explicit ClauseIndex(const Cnf& cnf);
  // -1 when absent.
  int Find(const Clause& clause) const;

 private:
  std::unordered_map<Clause, int, ClauseHash> index_;
};

struct AxiomSystem {
  Basis basis = Basis::kBoolean;
  PrimeField field;
  int n = 0;
  int ell = 0;
  std::vector<Polynomial> axioms;
  std::vector<ClauseGroup> groups;  // parallel to axioms
  std::vector<VarId> universe;      // sorted base variables
};

// Vertex disjunction over i != j, transitivity over distinct triples,
// antisymmetry once per unordered pair. Throws kInvalidArgument if n < 2.
Cnf GenerateLop(int n);

// LOP with binary pointers: vertex i is encoded by code i - 1 on
// PointerWidth(n) bits y(j,1..b), bit 1 least significant. Codes that do not
// name a vertex other than j get a pure prohibition clause.
Cnf GenerateBop(int n);

// The clause "(y_j != code)": y(j,a) if bit a of code is 0, ~y(j,a) if 1.
std::vector<Literal> PointerMismatch(int j, int code, int width);

enum class LiftMode {
  // Independent gadget index per negative literal: l^k clauses.
  kFullIndex,
  // One shared gadget index for all negative literals of a clause.
  kDiagonal,
};

// Replaces each unlifted edge x(i,j) in `lift_set` by the OR of x(i,j,1..ell).
// Only unlifted edge variables can be lifted.
Cnf OrLift(const Cnf& cnf, int ell, std::span<const VarId> lift_set,
           LiftMode mode = LiftMode::kFullIndex);

Cnf GenerateBopLifted(int n, int ell, LiftMode mode = LiftMode::kFullIndex);

// Odd-charge parity constraints on an n-cycle over plain variables x1..xn,
// Fourier basis: x_k x_{k+1} - 1 for k < n and x_n x_1 + 1.
AxiomSystem GenerateCycleTseitin(int n, PrimeField field = PrimeField());

enum class BooleanEncoding {
  // PCR: one monomial, the product of the twins of the literals.
  kTwinMonomial,
  // PC: product of (1 - x) for positive and x for negative literals.
  kTwinFree,
};

// Fourier: product of (1 + e(lit)) with e(x) = x, e(~x) = -x; 2^width
// monomials. Vanishes exactly on satisfying assignments in both bases.
Polynomial ClauseToPolynomial(const Clause& clause, Basis basis,
                              const PrimeField& field,
                              BooleanEncoding encoding =
                                  BooleanEncoding::kTwinMonomial);

AxiomSystem CnfToAxioms(const Cnf& cnf, Basis basis,
                        PrimeField field = PrimeField(),
                        BooleanEncoding encoding =
                            BooleanEncoding::kTwinMonomial);

// Exhaustive evaluation of a polynomial family at encoded Boolean points.
// Point bit k is the truth value of universe[k].
class PointEvaluator {
 public:
  static constexpr int kMaxVariables = 25;

  // Throws kScaleLimit beyond kMaxVariables and kInvalidArgument when a
  // polynomial mentions a variable outside the universe.
  PointEvaluator(std::span<const Polynomial> polys, std::vector<VarId> universe);

  size_t size() const { return polys_.size(); }
  int num_variables() const { return static_cast<int>(universe_.size()); }
  const std::vector<VarId>& universe() const { return universe_; }
  FieldElement Eval(size_t index, uint64_t point) const;
  bool AllVanish(uint64_t point) const;
  Assignment ToAssignment(uint64_t point) const;

 private:
  struct Entry {
    uint32_t mask;
    uint32_t twin_mask;
    FieldElement coef;
  };
  Basis basis_ = Basis::kBoolean;
  PrimeField field_;
  std::vector<VarId> universe_;
  std::vector<std::vector<Entry>> polys_;
};

struct SatResult {
  bool satisfiable = false;
  Assignment witness;
  uint64_t points_checked = 0;
};

// Throws kScaleLimit above 25 variables.
SatResult CheckSatisfiable(const Cnf& cnf);
SatResult CheckSatisfiable(const AxiomSystem& system);

// premises |= g over encoded truth assignments to the variables involved.
bool SemanticImplies(std::span<const Polynomial> premises, const Polynomial& g);

// DIMACS body plus a sidecar map with "var <k> = <name>" lines, the ambient
// "n=<n> ell=<ell>" header and "group <clause> <BV(j)|T>" lines.
void WriteDimacs(std::ostream& out, const Cnf& cnf);
void WriteNameMap(std::ostream& out, const Cnf& cnf);
Cnf ReadCnf(std::istream& dimacs, std::istream& name_map);

// Polynomial header, then polynomials, with "group BV(j)" / "group T" lines
// opening each run of same-group axioms.
void WriteAxioms(std::ostream& out, const AxiomSystem& system);
AxiomSystem ReadAxioms(std::istream& in);

}  // namespace pclab

#endif  // PCLAB_FORMULAS_H_
