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
#include <cstdint>
#include <deque>
#include <vector>

#include <gtest/gtest.h>

#include "pclab/degree_lab.h"
#include "pclab/errors.h"
#include "pclab/formulas.h"
#include "pclab/proofs.h"
#include "pclab/random.h"
#include "test_support.h"

namespace pclab {
namespace {

using testing::P;
using testing::Poly;
using testing::RandomPolynomial;

constexpr Basis kB = Basis::kBoolean;

Term MaskTerm(uint32_t mask, const std::vector<VarId>& vars) {
  std::vector<VarId> picked;
  for (size_t k = 0; k < vars.size(); ++k) {
    if (mask >> k & 1) picked.push_back(vars[k]);
  }
  return Term(std::move(picked));
}

// Span(F) built by closing F under multiplication by variables, as a dense
// echelon form over all monomials of a small universe.
class ClosureSpan {
 public:
  ClosureSpan(const std::vector<Polynomial>& generators, std::vector<VarId> vars)
      : vars_(std::move(vars)), size_(uint32_t{1} << vars_.size()) {
    for (uint32_t m = 0; m < size_; ++m) order_.push_back(m);
    // Descending grlex through the Term comparison.
    std::sort(order_.begin(), order_.end(), [&](uint32_t a, uint32_t b) {
      return CompareGrlex(MaskTerm(a, vars_), MaskTerm(b, vars_)) > 0;
    });
    std::deque<Vec> queue;
    for (const Polynomial& g : generators) queue.push_back(ToVec(g));
    while (!queue.empty()) {
      Vec v = std::move(queue.front());
      queue.pop_front();
      Eliminate(v);
      const int pivot = Lead(v);
      if (pivot < 0) continue;
      const FieldElement inv = f_.Inv(v[pivot]);
      for (FieldElement& c : v) c = f_.Mul(c, inv);
      rows_.emplace_back(pivot, v);
      for (size_t k = 0; k < vars_.size(); ++k) {
        Vec w(size_, f_.Zero());
        for (uint32_t m = 0; m < size_; ++m) {
          const uint32_t target = m | (uint32_t{1} << k);
          w[target] = f_.Add(w[target], v[m]);
        }
        queue.push_back(std::move(w));
      }
    }
  }

  Polynomial Reduce(const Polynomial& p) const {
    Vec v = ToVec(p);
    Eliminate(v);
    std::vector<Monomial> ms;
    for (uint32_t m = 0; m < size_; ++m) {
      if (v[m].value() != 0) ms.push_back({MaskTerm(m, vars_), v[m]});
    }
    return Polynomial::FromMonomials(kB, f_, std::move(ms));
  }

  size_t dimension() const { return rows_.size(); }

 private:
  using Vec = std::vector<FieldElement>;

  Vec ToVec(const Polynomial& p) const {
    Vec v(size_, f_.Zero());
    for (const Monomial& m : p.monomials()) {
      uint32_t mask = 0;
      for (const VarId& x : m.term.vars()) {
        mask |= uint32_t{1} << (std::find(vars_.begin(), vars_.end(), x) - vars_.begin());
      }
      v[mask] = f_.Add(v[mask], m.coef);
    }
    return v;
  }

  int Lead(const Vec& v) const {
    for (uint32_t m : order_) {
      if (v[m].value() != 0) return static_cast<int>(m);
    }
    return -1;
  }

  // Clears every pivot position, scanning from the largest monomial down.
  void Eliminate(Vec& v) const {
    for (uint32_t m : order_) {
      if (v[m].value() == 0) continue;
      for (const auto& [pivot, row] : rows_) {
        if (pivot != static_cast<int>(m)) continue;
        const FieldElement c = v[m];
        for (uint32_t k = 0; k < size_; ++k) v[k] = f_.Sub(v[k], f_.Mul(c, row[k]));
        break;
      }
    }
  }

  PrimeField f_;
  std::vector<VarId> vars_;
  uint32_t size_;
  std::vector<uint32_t> order_;
  std::vector<std::pair<int, Vec>> rows_;
};

TEST(MaskGrlexTest, AgreesWithTermOrder) {
  const std::vector<VarId> vars = testing::PlainPool(9);
  Rng rng(4);
  for (int k = 0; k < 5000; ++k) {
    const uint32_t a = static_cast<uint32_t>(rng.Below(512));
    const uint32_t b = static_cast<uint32_t>(rng.Below(512));
    EXPECT_EQ(MaskGrlexLess(a, b),
              CompareGrlex(MaskTerm(a, vars), MaskTerm(b, vars)) < 0)
        << a << " " << b;
  }
}

TEST(SpanBasisTest, Examples) {
  const std::vector<VarId> xy = {P("x"), P("y")};
  const std::vector<Polynomial> fx = {Poly("1 * x", kB)};
  const SpanBasis span(fx, xy);
  const std::vector<Polynomial> elements = span.Elements();
  ASSERT_EQ(elements.size(), 2u);
  EXPECT_EQ(elements[0], Poly("1 * x y", kB));
  EXPECT_EQ(elements[1], Poly("1 * x", kB));
  EXPECT_EQ(span.Reduce(Poly("2 * x y ; 1 * y ; 3", kB)), Poly("1 * y ; 3", kB));

  const SpanBasis empty({}, xy);
  EXPECT_TRUE(empty.Elements().empty());
  EXPECT_EQ(empty.Reduce(Poly("1 * x y ; 1 * x", kB)), Poly("1 * x y ; 1 * x", kB));

  const AxiomSystem bop = CnfToAxioms(GenerateBop(3), kB, PrimeField(),
                                      BooleanEncoding::kTwinFree);
  const SpanBasis unsat(bop.axioms, bop.universe);
  EXPECT_FALSE(unsat.Satisfiable());
  EXPECT_TRUE(unsat.Contains(Poly("1", kB)));
}

TEST(SpanBasisTest, Errors) {
  const std::vector<Polynomial> twin = {Poly("1 * ~x", kB)};
  EXPECT_THROW(SpanBasis(twin, {P("x")}), Error);
  const std::vector<Polynomial> outside = {Poly("1 * z", kB)};
  EXPECT_THROW(SpanBasis(outside, {P("x")}), Error);
  EXPECT_THROW(SpanBasis({}, testing::PlainPool(17)), Error);
}

TEST(SpanBasisTest, MatchesClosureOracle) {
  const PrimeField f;
  const std::vector<VarId> vars = testing::PlainPool(5);
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> gens;
    const int count = static_cast<int>(rng.Range(0, 3));
    for (int k = 0; k < count; ++k) {
      gens.push_back(RandomPolynomial(rng, kB, f, vars, 3, 3));
    }
    const SpanBasis span(gens, vars);
    const ClosureSpan oracle(gens, vars);
    EXPECT_EQ(span.Elements().size(), oracle.dimension());
    for (int k = 0; k < 10; ++k) {
      const Polynomial p = RandomPolynomial(rng, kB, f, vars, 5, 5);
      ASSERT_EQ(span.Reduce(p), oracle.Reduce(p))
          << "trial " << trial << " " << FormatPolynomial(p);
    }
  }
}

TEST(SpanBasisTest, ElementsAreInterReduced) {
  const AxiomSystem lop = CnfToAxioms(GenerateLop(3), kB, PrimeField(),
                                      BooleanEncoding::kTwinFree);
  std::vector<Polynomial> some(lop.axioms.begin(), lop.axioms.begin() + 4);
  const SpanBasis span(some, lop.universe);
  const std::vector<Polynomial> elements = span.Elements();
  for (size_t a = 0; a < elements.size(); ++a) {
    EXPECT_TRUE(span.Contains(elements[a]));
    for (size_t b = 0; b < elements.size(); ++b) {
      if (a == b) continue;
      EXPECT_TRUE(elements[b].Coefficient(elements[a].LeadingTerm()).value() == 0);
    }
  }
}

TEST(ResidueTest, Examples) {
  const std::vector<Polynomial> family = {Poly("1 * x y ; -1 * z", kB)};
  EXPECT_TRUE(Residue(family[0], family).IsZero());
  EXPECT_EQ(Residue(Poly("1 * x y", kB), family), Poly("1 * z", kB));
  EXPECT_EQ(Residue(Poly("1 * x y ; 1 * w", kB), {}), Poly("1 * x y ; 1 * w", kB));
}

TEST(ResidueTest, ZeroIffSemanticallyImplied) {
  const PrimeField f;
  const std::vector<VarId> vars = testing::PlainPool(6);
  Rng rng(23);
  int zero = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(RandomPolynomial(rng, kB, f, vars, 2, 3));
    const Polynomial p = RandomPolynomial(rng, kB, f, vars, 3, 3);
    const bool is_zero = Residue(p, gens).IsZero();
    zero += is_zero;
    EXPECT_EQ(is_zero, SemanticImplies(gens, p)) << trial;
  }
  EXPECT_GT(zero, 0);
}

TEST(ResidueTest, IdempotentAndMonotone) {
  const AxiomSystem bop = CnfToAxioms(GenerateBop(3), kB, PrimeField(),
                                      BooleanEncoding::kTwinFree);
  const PrimeField f;
  Rng rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> small, large;
    for (const Polynomial& a : bop.axioms) {
      const int pick = static_cast<int>(rng.Below(4));
      if (pick == 0) small.push_back(a);
      if (pick <= 1) large.push_back(a);
    }
    const SpanBasis fs(small, bop.universe);
    const SpanBasis gs(large, bop.universe);
    const Polynomial p = RandomPolynomial(rng, kB, f, bop.universe, 4, 3);
    const Polynomial rf = fs.Reduce(p);
    EXPECT_EQ(fs.Reduce(rf), rf);
    EXPECT_TRUE(CompareSupport(gs.Reduce(p), rf) <= 0);
    EXPECT_TRUE(CompareSupport(rf, p) <= 0);
  }
}

TEST(ResidueOracleTest, Examples) {
  const ResidueOracle oracle(3, 1);
  EXPECT_EQ(oracle.R(Poly("1", kB)), Poly("1", kB));
  for (const Polynomial& a : oracle.axioms().axioms) {
    EXPECT_TRUE(oracle.R(a).IsZero()) << FormatPolynomial(a);
  }
  const Term x121({VarId::Edge(1, 2, 1)});
  EXPECT_EQ(oracle.Tau(x121), (std::vector<int>{1, 2}));
  const Polynomial r = oracle.R(x121);
  EXPECT_EQ(r, oracle.Residue(x121, {2}));
  EXPECT_EQ(r, oracle.Residue(x121, {2, 1}));
}

TEST(ResidueOracleTest, CacheCoherence) {
  const ResidueOracle oracle(3, 1);
  const std::vector<Term> terms = EnumerateTerms(oracle.universe(), 2);
  for (const std::vector<int>& set : std::vector<std::vector<int>>{{}, {1}, {2, 3}}) {
    const SpanBasis fresh = oracle.Uncached(set);
    std::vector<int> reversed(set.rbegin(), set.rend());
    reversed.insert(reversed.end(), set.begin(), set.end());
    EXPECT_EQ(oracle.BasisFor(set), oracle.BasisFor(reversed));
    for (const Term& t : terms) {
      const Polynomial p = Polynomial::FromTerm(kB, PrimeField(), t, FieldElement(1));
      ASSERT_EQ(oracle.BasisFor(set)->Reduce(p), fresh.Reduce(p)) << t.ToString();
    }
  }
  EXPECT_EQ(oracle.cached_bases(), 3u);
}

TEST(EnumerateTermsTest, CountsAndOrder) {
  const std::vector<VarId> vars = testing::PlainPool(6);
  const std::vector<Term> terms = EnumerateTerms(vars, 2);
  EXPECT_EQ(terms.size(), 1u + 6u + 15u);
  for (size_t k = 1; k < terms.size(); ++k) {
    EXPECT_TRUE(CompareGrlex(terms[k - 1], terms[k]) < 0);
  }
}

TEST(LemmaTest, SmallScaleChecks) {
  const ResidueOracle oracle(3, 1);
  for (const LemmaReport& r :
       {VerifyRopAxioms(oracle), VerifyRdrop(oracle, 2, 2), VerifyRdrop2(oracle, 2, 2),
        VerifyRtech(oracle, 3, 2), VerifyRopCondition2(oracle, 60, 1, 2)}) {
    EXPECT_GT(r.cases, 0u) << r.lemma;
    EXPECT_EQ(r.counterexamples, 0u) << r.lemma << ": " << r.first_counterexample;
  }
}

TEST(LemmaTest, ResiduePropertiesOnLop) {
  const AxiomSystem lop = CnfToAxioms(GenerateLop(3), kB, PrimeField(),
                                      BooleanEncoding::kTwinFree);
  const LemmaReport r = VerifyResidueProperties(lop.axioms, lop.universe, 50, 3);
  EXPECT_GT(r.cases, 50u);
  EXPECT_EQ(r.counterexamples, 0u) << r.first_counterexample;
  // A satisfiable subsystem has a nontrivial span.
  std::vector<Polynomial> part(lop.axioms.begin(), lop.axioms.begin() + 3);
  EXPECT_EQ(VerifyResidueProperties(part, lop.universe, 50, 3).counterexamples, 0u);
}

// --- heavy selection --------------------------------------------------------

Polynomial Fourier(std::string_view text) { return Poly(text, Basis::kFourier); }

TEST(HeavyTest, DominantVertex) {
  const std::vector<Polynomial> lines = {
      Fourier("1 * x(1,3,2) ; 1 * x(2,3,2)"),
      Fourier("1 * x(1,3,1) ; 1 * y(3,1)"),
      Fourier("1 * x(1,2,1) ; 1")};
  const HeavySelection h = SelectHeavyVertex(lines, 3, 2, 1);
  EXPECT_EQ(h.vertex, 3);
  EXPECT_EQ(h.gadget_choice.at(1), 1);
  EXPECT_EQ(h.gadget_choice.at(2), 2);
  // H = {x(1,3,2) x(2,3,2), x(1,3,1) y(3,1), x(1,2,1)}.
  EXPECT_EQ(h.heavy_terms, 3u);
  EXPECT_EQ(h.touching_terms, 2u);
  EXPECT_EQ(h.split_vars,
            (std::vector<VarId>{VarId::Pointer(3, 1), VarId::Pointer(3, 2),
                                VarId::Edge(1, 3, 1), VarId::Edge(2, 3, 2)}));
  EXPECT_EQ(CountHeavyTerms(lines, 3, 2, 2), 0u);
}

TEST(HeavyTest, TiesGoToTheLowestIndex) {
  const std::vector<Polynomial> lines = {Fourier("1 * x(2,1,2) ; 1 * x(1,2,1)")};
  const HeavySelection h = SelectHeavyVertex(lines, 3, 2, 2);
  EXPECT_EQ(h.vertex, 1);
  EXPECT_EQ(h.gadget_choice.at(2), 2);
  EXPECT_EQ(h.gadget_choice.at(3), 1);
  EXPECT_THROW(SelectHeavyVertex({Fourier("1 * x(1,2,1)")}, 3, 2, 1), Error);
}

TEST(DemoTest, PipelineReducesHeavyTerms) {
  int reduced = 0;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const DemoReport r = RunDemoPipeline(3, 2, 12, 2, 1, seed);
    EXPECT_TRUE(r.all_valid) << seed;
    ASSERT_FALSE(r.rounds.empty());
    EXPECT_LE(r.rounds.back().heavy_after, r.rounds.front().heavy_before);
    reduced += r.rounds.back().heavy_after < r.rounds.front().heavy_before;
    EXPECT_LE(r.special_after_cluster, r.special_before);
    EXPECT_EQ(r, RunDemoPipeline(3, 2, 12, 2, 1, seed));
  }
  EXPECT_GT(reduced, 0);
  EXPECT_THROW(RunDemoPipeline(3, 1, 12, 2, 1, 1), Error);
}

}  // namespace
}  // namespace pclab
