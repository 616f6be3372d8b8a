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

#ifndef PCLAB_TERM_H_
#define PCLAB_TERM_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pclab/var.h"

namespace pclab {

enum class Basis : uint8_t { kBoolean, kFourier };

std::string BasisName(Basis basis);
Basis ParseBasis(std::string_view name);

// A multilinear monomial: a strictly increasing list of variables. The empty
// term is the constant 1. A variable and its twin are different variables.
class Term {
 public:
  Term() = default;
  // Sorts and checks for duplicates (kInvalidArgument).
  explicit Term(std::vector<VarId> vars);
  Term(std::initializer_list<VarId> vars) : Term(std::vector<VarId>(vars)) {}

  static Term FromSorted(std::vector<VarId> vars) {
    Term t;
    t.vars_ = std::move(vars);
    return t;
  }

  const std::vector<VarId>& vars() const { return vars_; }
  int degree() const { return static_cast<int>(vars_.size()); }
  bool empty() const { return vars_.empty(); }
  bool Contains(VarId v) const;

  std::string ToString() const;

  friend bool operator==(const Term&, const Term&) = default;
  size_t Hash() const;

 private:
  std::vector<VarId> vars_;
};

struct TermHash {
  size_t operator()(const Term& t) const { return t.Hash(); }
};

// Graded lexicographic comparison: lower degree first; among equal degrees the
// term containing the largest variable of the symmetric difference is larger.
std::strong_ordering CompareGrlex(const Term& a, const Term& b);

struct GrlexLess {
  bool operator()(const Term& a, const Term& b) const {
    return CompareGrlex(a, b) < 0;
  }
};

// Product of a term by one variable modulo the basis square axiom. The second
// component is the sign, always +1 for multilinear reduction. Twin pairs are
// not reduced.
struct TermProduct {
  Term term;
  int sign = 1;
};
TermProduct MulTermByVar(const Term& t, VarId v, Basis basis);

// Product of two terms: union (Boolean) or symmetric difference (Fourier).
Term MulTerms(const Term& a, const Term& b, Basis basis);

}  // namespace pclab

#endif  // PCLAB_TERM_H_
