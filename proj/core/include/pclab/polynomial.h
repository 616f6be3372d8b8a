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

#ifndef PCLAB_POLYNOMIAL_H_
#define PCLAB_POLYNOMIAL_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pclab/field.h"
#include "pclab/term.h"
#include "pclab/var.h"

namespace pclab {

struct Monomial {
  Term term;
  FieldElement coef;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Sparse multilinear polynomial over a prime field, tagged with its basis.
// Monomials are kept in ascending graded-lex order with no zero coefficients,
// so monomial_count() is the size contribution of a proof line.
class Polynomial {
 public:
  Polynomial(Basis basis, PrimeField field) : basis_(basis), field_(field) {}

  static Polynomial Constant(Basis basis, PrimeField field, int64_t c);
  static Polynomial FromTerm(Basis basis, PrimeField field, Term t,
                             FieldElement coef);
  // Accepts unsorted input with repeats; merges and drops zeros.
  static Polynomial FromMonomials(Basis basis, PrimeField field,
                                  std::vector<Monomial> monomials);

  Basis basis() const { return basis_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  size_t monomial_count() const { return monomials_.size(); }
  bool IsZero() const { return monomials_.empty(); }
  bool IsOne() const;
  bool IsConstant() const;
  int Degree() const;
  // Throws kInvalidArgument on the zero polynomial.
  const Term& LeadingTerm() const;
  FieldElement Coefficient(const Term& t) const;
  // Distinct base and twin variables occurring anywhere.
  std::vector<VarId> Variables() const;
  bool Mentions(VarId v) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.basis_ == b.basis_ && a.field_ == b.field_ &&
           a.monomials_ == b.monomials_;
  }

 private:
  Basis basis_;
  PrimeField field_;
  std::vector<Monomial> monomials_;
};

// Throws kStructural when bases or fields differ.
Polynomial Add(const Polynomial& p, const Polynomial& q);
Polynomial Sub(const Polynomial& p, const Polynomial& q);
Polynomial Scale(FieldElement alpha, const Polynomial& p);
Polynomial LinearCombination(FieldElement alpha, const Polynomial& p,
                             FieldElement beta, const Polynomial& q);
Polynomial MulVar(const Polynomial& p, VarId v);
Polynomial MulTerm(const Polynomial& p, const Term& t);
Polynomial Mul(const Polynomial& p, const Polynomial& q);

// Support-lexicographic comparison of polynomials: descending term lists are
// compared position by position under graded-lex, a proper prefix being
// smaller. Coefficients are ignored, so distinct polynomials with the same
// support compare equal.
std::strong_ordering CompareSupport(const Polynomial& p, const Polynomial& q);

// Truth assignment to base variables. Twins are derived on lookup.
class Assignment {
 public:
  // Setting a twin stores the negated value on its base variable.
  void Set(VarId v, bool value);
  std::optional<bool> Get(VarId v) const;
  bool Has(VarId v) const { return values_.contains(v.Base()); }
  const std::unordered_map<VarId, bool, VarIdHash>& values() const {
    return values_;
  }

 private:
  std::unordered_map<VarId, bool, VarIdHash> values_;
};

// Boolean: TRUE -> 1, FALSE -> 0, twin = 1 - x.
// Fourier: TRUE -> -1, FALSE -> +1, twin = -x.
FieldElement EncodeTruth(bool value, bool twin, Basis basis,
                         const PrimeField& field);

// Throws kInvalidArgument when a variable of p is unassigned.
FieldElement Evaluate(const Polynomial& p, const Assignment& assignment);

// Text form: "<coef> * <var> <var> ... ; <coef> * ..." in descending
// graded-lex order; the zero polynomial is "0".
std::string FormatPolynomial(const Polynomial& p);
Polynomial ParsePolynomial(std::string_view line, Basis basis,
                           const PrimeField& field);

// "field=<p> basis=<boolean|fourier>" plus optional extra key=value pairs.
struct PolynomialHeader {
  PrimeField field;
  Basis basis = Basis::kBoolean;
  std::vector<std::pair<std::string, std::string>> extra;
};
std::string FormatHeader(const PolynomialHeader& header);
PolynomialHeader ParseHeader(std::string_view line);

// Splits "k=v k=v" into pairs; throws kParse on malformed tokens.
std::vector<std::pair<std::string, std::string>> ParseKeyValues(
    std::string_view line);

}  // namespace pclab

#endif  // PCLAB_POLYNOMIAL_H_
