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

#include "pclab/polynomial.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "pclab/errors.h"
#include "text_util.h"

namespace pclab {
namespace {

using internal::SplitWs;
using internal::Trim;

void CheckCompatible(const Polynomial& p, const Polynomial& q) {
  if (p.basis() != q.basis()) {
    throw Error(ErrorCode::kStructural, "basis mismatch between polynomials");
  }
  if (!(p.field() == q.field())) {
    throw Error(ErrorCode::kStructural, "field mismatch between polynomials");
  }
}

}  // namespace

Polynomial Polynomial::Constant(Basis basis, PrimeField field, int64_t c) {
  return FromTerm(basis, field, Term(), field.FromInt(c));
}

Polynomial Polynomial::FromTerm(Basis basis, PrimeField field, Term t,
                                FieldElement coef) {
  Polynomial p(basis, field);
  if (!coef.IsZero()) p.monomials_.push_back({std::move(t), coef});
  return p;
}

Polynomial Polynomial::FromMonomials(Basis basis, PrimeField field,
                                     std::vector<Monomial> monomials) {
  Polynomial p(basis, field);
  bool canonical = true;
  for (size_t k = 0; k < monomials.size() && canonical; ++k) {
    canonical = !monomials[k].coef.IsZero() &&
                (k == 0 ||
                 CompareGrlex(monomials[k - 1].term, monomials[k].term) < 0);
  }
  if (canonical) {
    p.monomials_ = std::move(monomials);
    return p;
  }
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) {
              return CompareGrlex(a.term, b.term) < 0;
            });
  for (auto& m : monomials) {
    if (!p.monomials_.empty() && p.monomials_.back().term == m.term) {
      p.monomials_.back().coef = field.Add(p.monomials_.back().coef, m.coef);
      if (p.monomials_.back().coef.IsZero()) p.monomials_.pop_back();
    } else if (!m.coef.IsZero()) {
      p.monomials_.push_back(std::move(m));
    }
  }
  return p;
}

bool Polynomial::IsOne() const {
  return monomials_.size() == 1 && monomials_[0].term.empty() &&
         monomials_[0].coef == field_.One();
}

bool Polynomial::IsConstant() const {
  return monomials_.empty() ||
         (monomials_.size() == 1 && monomials_[0].term.empty());
}

int Polynomial::Degree() const {
  return monomials_.empty() ? 0 : monomials_.back().term.degree();
}

const Term& Polynomial::LeadingTerm() const {
  if (monomials_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "leading term of zero polynomial");
  }
  return monomials_.back().term;
}

FieldElement Polynomial::Coefficient(const Term& t) const {
  auto it = std::lower_bound(
      monomials_.begin(), monomials_.end(), t,
      [](const Monomial& m, const Term& x) { return CompareGrlex(m.term, x) < 0; });
  if (it != monomials_.end() && it->term == t) return it->coef;
  return field_.Zero();
}

std::vector<VarId> Polynomial::Variables() const {
  std::set<VarId> vars;
  for (const auto& m : monomials_) vars.insert(m.term.vars().begin(), m.term.vars().end());
  return {vars.begin(), vars.end()};
}

bool Polynomial::Mentions(VarId v) const {
  for (const auto& m : monomials_) {
    if (m.term.Contains(v)) return true;
  }
  return false;
}

Polynomial LinearCombination(FieldElement alpha, const Polynomial& p,
                             FieldElement beta, const Polynomial& q) {
  CheckCompatible(p, q);
  const PrimeField& f = p.field();
  std::vector<Monomial> out;
  out.reserve(p.monomial_count() + q.monomial_count());
  const auto& a = p.monomials();
  const auto& b = q.monomials();
  size_t i = 0, j = 0;
  auto push = [&](const Term& t, FieldElement c) {
    if (!c.IsZero()) out.push_back({t, c});
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && CompareGrlex(a[i].term, b[j].term) < 0)) {
      push(a[i].term, f.Mul(alpha, a[i].coef));
      ++i;
    } else if (i == a.size() || CompareGrlex(b[j].term, a[i].term) < 0) {
      push(b[j].term, f.Mul(beta, b[j].coef));
      ++j;
    } else {
      push(a[i].term, f.Add(f.Mul(alpha, a[i].coef), f.Mul(beta, b[j].coef)));
      ++i;
      ++j;
    }
  }
  return Polynomial::FromMonomials(p.basis(), f, std::move(out));
}

Polynomial Add(const Polynomial& p, const Polynomial& q) {
  return LinearCombination(p.field().One(), p, q.field().One(), q);
}

Polynomial Sub(const Polynomial& p, const Polynomial& q) {
  return LinearCombination(p.field().One(), p, p.field().Neg(p.field().One()), q);
}

Polynomial Scale(FieldElement alpha, const Polynomial& p) {
  std::vector<Monomial> out;
  if (!alpha.IsZero()) {
    out.reserve(p.monomial_count());
    for (const auto& m : p.monomials()) {
      out.push_back({m.term, p.field().Mul(alpha, m.coef)});
    }
  }
  return Polynomial::FromMonomials(p.basis(), p.field(), std::move(out));
}

Polynomial MulVar(const Polynomial& p, VarId v) {
  std::vector<Monomial> out;
  out.reserve(p.monomial_count());
  for (const auto& m : p.monomials()) {
    TermProduct prod = MulTermByVar(m.term, v, p.basis());
    out.push_back({std::move(prod.term), m.coef});
  }
  return Polynomial::FromMonomials(p.basis(), p.field(), std::move(out));
}

Polynomial MulTerm(const Polynomial& p, const Term& t) {
  std::vector<Monomial> out;
  out.reserve(p.monomial_count());
  for (const auto& m : p.monomials()) {
    out.push_back({MulTerms(m.term, t, p.basis()), m.coef});
  }
  return Polynomial::FromMonomials(p.basis(), p.field(), std::move(out));
}

Polynomial Mul(const Polynomial& p, const Polynomial& q) {
  CheckCompatible(p, q);
  std::vector<Monomial> out;
  out.reserve(p.monomial_count() * q.monomial_count());
  for (const auto& a : p.monomials()) {
    for (const auto& b : q.monomials()) {
      out.push_back({MulTerms(a.term, b.term, p.basis()),
                     p.field().Mul(a.coef, b.coef)});
    }
  }
  return Polynomial::FromMonomials(p.basis(), p.field(), std::move(out));
}

std::strong_ordering CompareSupport(const Polynomial& p, const Polynomial& q) {
  const auto& a = p.monomials();
  const auto& b = q.monomials();
  size_t i = a.size(), j = b.size();
  while (i > 0 && j > 0) {
    --i;
    --j;
    if (auto c = CompareGrlex(a[i].term, b[j].term); c != 0) return c;
  }
  return a.size() <=> b.size();
}

void Assignment::Set(VarId v, bool value) {
  values_[v.Base()] = v.negated() ? !value : value;
}

std::optional<bool> Assignment::Get(VarId v) const {
  auto it = values_.find(v.Base());
  if (it == values_.end()) return std::nullopt;
  return v.negated() ? !it->second : it->second;
}

FieldElement EncodeTruth(bool value, bool twin, Basis basis,
                         const PrimeField& field) {
  const bool effective = twin ? !value : value;
  if (basis == Basis::kBoolean) return effective ? field.One() : field.Zero();
  return effective ? field.FromInt(-1) : field.One();
}

FieldElement Evaluate(const Polynomial& p, const Assignment& assignment) {
  const PrimeField& f = p.field();
  FieldElement total = f.Zero();
  for (const auto& m : p.monomials()) {
    FieldElement value = m.coef;
    for (const VarId& v : m.term.vars()) {
      auto base = assignment.Get(v.Base());
      if (!base) {
        throw Error(ErrorCode::kInvalidArgument,
                    "assignment misses variable " + v.Base().ToString());
      }
      value = f.Mul(value, EncodeTruth(*base, v.negated(), p.basis(), f));
    }
    total = f.Add(total, value);
  }
  return total;
}

std::string FormatPolynomial(const Polynomial& p) {
  if (p.IsZero()) return "0";
  std::string out;
  const auto& ms = p.monomials();
  for (size_t k = ms.size(); k-- > 0;) {
    if (!out.empty()) out += " ; ";
    out += p.field().Format(ms[k].coef);
    out += " *";
    for (const VarId& v : ms[k].term.vars()) {
      out += ' ';
      out += v.ToString();
    }
  }
  return out;
}

Polynomial ParsePolynomial(std::string_view line, Basis basis,
                           const PrimeField& field) {
  line = Trim(line);
  if (line == "0") return Polynomial(basis, field);
  std::vector<Monomial> monomials;
  size_t pos = 0;
  while (pos <= line.size()) {
    size_t semi = line.find(';', pos);
    if (semi == std::string_view::npos) semi = line.size();
    std::string_view chunk = Trim(line.substr(pos, semi - pos));
    std::vector<std::string_view> tokens = SplitWs(chunk);
    if (tokens.empty()) {
      throw Error(ErrorCode::kParse, "empty monomial in '" + std::string(line) + "'");
    }
    int64_t coef = 0;
    auto [ptr, ec] = std::from_chars(tokens[0].data(),
                                     tokens[0].data() + tokens[0].size(), coef);
    if (ec != std::errc() || ptr != tokens[0].data() + tokens[0].size()) {
      throw Error(ErrorCode::kParse,
                  "bad coefficient '" + std::string(tokens[0]) + "'");
    }
    size_t first_var = 1;
    if (tokens.size() > 1 && tokens[1] == "*") first_var = 2;
    std::vector<VarId> vars;
    for (size_t k = first_var; k < tokens.size(); ++k) {
      vars.push_back(VarId::Parse(tokens[k]));
    }
    monomials.push_back({Term(std::move(vars)), field.FromInt(coef)});
    pos = semi + 1;
  }
  return Polynomial::FromMonomials(basis, field, std::move(monomials));
}

std::vector<std::pair<std::string, std::string>> ParseKeyValues(
    std::string_view line) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::string_view tok : SplitWs(Trim(line))) {
    size_t eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorCode::kParse, "expected key=value, got '" + std::string(tok) + "'");
    }
    out.emplace_back(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
  }
  return out;
}

std::string FormatHeader(const PolynomialHeader& header) {
  std::string out = "field=" + std::to_string(header.field.prime()) +
                    " basis=" + BasisName(header.basis);
  for (const auto& [k, v] : header.extra) out += " " + k + "=" + v;
  return out;
}

PolynomialHeader ParseHeader(std::string_view line) {
  PolynomialHeader header;
  bool saw_field = false, saw_basis = false;
  for (auto& [k, v] : ParseKeyValues(line)) {
    if (k == "field") {
      uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), p);
      if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw Error(ErrorCode::kParse, "bad field value '" + v + "'");
      }
      header.field = PrimeField(p);
      saw_field = true;
    } else if (k == "basis") {
      header.basis = ParseBasis(v);
      saw_basis = true;
    } else {
      header.extra.emplace_back(k, v);
    }
  }
  if (!saw_field || !saw_basis) {
    throw Error(ErrorCode::kParse, "header needs field= and basis=");
  }
  return header;
}

}  // namespace pclab
