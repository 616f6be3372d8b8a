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


#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "pclab/constructions.h"
#include "pclab/errors.h"
#include "pclab/formulas.h"
#include "pclab/proofs.h"
#include "pclab/random.h"
#include "pclab/transforms.h"
#include "test_support.h"

namespace pclab {
namespace {

using testing::P;
using testing::Poly;

constexpr Basis kF = Basis::kFourier;

VarId X(int i, int j, int l = 0) { return VarId::Edge(i, j, l); }

CheckOptions Derivation() {
  CheckOptions options;
  options.require_refutation = false;
  return options;
}

bool Mentions(const std::vector<Polynomial>& lines, VarId v) {
  for (const Polynomial& p : lines) {
    if (p.Mentions(v.Base()) || p.Mentions(v.Base().Twin())) return true;
  }
  return false;
}

// --- Restrict ---------------------------------------------------------------

TEST(RestrictTest, Examples) {
  Restriction rho;
  rho.Set(P("x"), false);
  EXPECT_EQ(Restrict(Poly("1 * x ; 1 * y", kF), rho), Poly("1 ; 1 * y", kF));
  rho.Set(P("y"), true);
  EXPECT_TRUE(Restrict(Poly("1 * x ; 1 * y", kF), rho).IsZero());
  EXPECT_EQ(Restrict(Poly("1 * x ~y ; 1 * z", Basis::kBoolean), rho),
            Poly("1 * z", Basis::kBoolean));
}

TEST(RestrictTest, TwinsAreDerived) {
  Restriction rho;
  rho.Set(P("x").Twin(), true);
  EXPECT_EQ(rho.Get(P("x")), false);
  EXPECT_EQ(rho.Get(P("x").Twin()), true);
  EXPECT_NO_THROW(rho.Set(P("x"), false));
  EXPECT_THROW(rho.Set(P("x"), true), Error);
  EXPECT_EQ(rho.size(), 1u);
}

TEST(RestrictTest, Cnf) {
  Cnf cnf;
  cnf.Add(Clause({{P("x"), true}, {P("y"), true}}));
  cnf.Add(Clause({{P("x"), false}, {P("z"), true}}));
  Restriction rho;
  rho.Set(P("x"), true);
  const Cnf r = Restrict(cnf, rho);
  ASSERT_EQ(r.clauses.size(), 1u);
  EXPECT_EQ(r.clauses[0], Clause({{P("z"), true}}));
}

TEST(RestrictTest, RoundTrip) {
  Restriction rho;
  rho.Set(X(1, 2, 1), true);
  rho.Set(VarId::Pointer(3, 2), false);
  rho.Set(P("w"), true);
  std::stringstream s;
  WriteRestriction(s, rho);
  EXPECT_EQ(ReadRestriction(s).values(), rho.values());
  std::stringstream bad("set x = maybe\n");
  EXPECT_THROW(ReadRestriction(bad), Error);
}

TEST(RestrictTest, SoundnessAwayFromAxioms) {
  const AxiomSystem sys = CnfToAxioms(GenerateBopLifted(3, 1), kF);
  const std::vector<VarId> extra = {P("a"), P("b"), P("c")};
  RandomDerivationOptions options;
  options.steps = 16;
  options.extra_vars = extra;
  int checked = 0;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    const PcProof proof = RandomDerivation(sys, options, seed);
    Rng rng(DeriveSeed(seed, "rho", 0));
    Restriction rho;
    for (const VarId& v : extra) {
      if (rng.Coin()) rho.Set(v, rng.Coin());
    }
    const RestrictedProof r = Restrict(proof, sys, rho);
    const PcReport report = CheckPcProof(r.proof, r.axioms.system, Derivation());
    ASSERT_TRUE(report.valid) << "seed " << seed << ": " << report.message;
    ++checked;
  }
  EXPECT_EQ(checked, 500);
}

TEST(RestrictTest, RefutationsStayRefutations) {
  const AxiomSystem sys = GenerateCycleTseitin(6);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const PcProof proof = WithDetours(TseitinFourierRefutation(6), P("d"), 3, seed);
    Restriction rho;
    rho.Set(P("d"), seed % 2 == 0);
    const RestrictedProof r = Restrict(proof, sys, rho);
    const PcReport report = CheckPcProof(r.proof, r.axioms.system);
    EXPECT_TRUE(report.valid && report.refutation) << report.message;
    EXPECT_FALSE(Mentions(MaterializeLines(r.proof, r.axioms.system), P("d")));
  }
}

TEST(RestrictTest, RestrictedAxiomsFollowFromOriginalsAndRho) {
  const AxiomSystem sys = CnfToAxioms(GenerateBopLifted(3, 1), kF);
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    Restriction rho;
    std::vector<Polynomial> premises = sys.axioms;
    for (const VarId& v : sys.universe) {
      if (rng.Below(3) != 0) continue;
      const bool value = rng.Coin();
      rho.Set(v, value);
      // Vanishes exactly where v has the chosen truth value.
      premises.push_back(Poly(std::string("1 * ") + v.ToString() +
                                  (value ? " ; 1" : " ; -1"),
                              kF));
    }
    const RestrictedAxioms r = Restrict(sys, rho);
    for (const Polynomial& a : r.system.axioms) {
      EXPECT_TRUE(SemanticImplies(premises, a)) << FormatPolynomial(a);
    }
  }
}

TEST(JctaTest, AssignmentCounts) {
  const std::map<int, int> choice = {{1, 1}, {3, 1}};
  const Restriction plain = BuildJcta(3, 1, 2, {}, choice);
  EXPECT_EQ(plain.size(), 4u);  // 2 (n - 1) ell edge variables
  EXPECT_EQ(plain.Get(X(1, 2, 1)), false);
  EXPECT_EQ(plain.Get(X(3, 2, 1)), false);
  EXPECT_EQ(plain.Get(X(2, 1, 1)), true);
  EXPECT_EQ(plain.Get(X(2, 3, 1)), true);

  const Restriction pointed = BuildJcta(3, 1, 2, {1}, choice);
  EXPECT_EQ(pointed.size(), 6u);
  // Vertex 2 has code 1 on two bits.
  EXPECT_EQ(pointed.Get(VarId::Pointer(1, 1)), true);
  EXPECT_EQ(pointed.Get(VarId::Pointer(1, 2)), false);

  const Restriction lifted = BuildJcta(4, 3, 1, {}, {{2, 3}, {3, 1}, {4, 2}});
  EXPECT_EQ(lifted.size(), 3u * 3u + 3u);
  EXPECT_THROW(BuildJcta(4, 3, 1, {}, {{2, 3}}), Error);
}

TEST(JctaTest, MakesTheVertexTheMinimum) {
  const int n = 3;
  const AxiomSystem sys = CnfToAxioms(GenerateBopLifted(n, 1), kF);
  const RestrictedAxioms r = Restrict(sys, BuildJcta(n, 1, 2, {}, {{1, 1}, {3, 1}}));
  for (size_t k = 0; k < sys.axioms.size(); ++k) {
    const ClauseGroup& g = sys.groups[k];
    const bool touches_two = sys.axioms[k].Mentions(X(1, 2, 1)) ||
                             sys.axioms[k].Mentions(X(2, 1, 1)) ||
                             sys.axioms[k].Mentions(X(2, 3, 1)) ||
                             sys.axioms[k].Mentions(X(3, 2, 1));
    if (g.kind == GroupKind::kOrdering && touches_two) {
      EXPECT_EQ(r.axiom_map[k], -1) << FormatPolynomial(sys.axioms[k]);
    }
    // The vertex axioms of 2 survive as constraints on its own pointer only.
    if (g.kind == GroupKind::kVertex && g.vertex == 2 && r.axiom_map[k] >= 0) {
      for (const VarId& v : r.system.axioms[r.axiom_map[k]].Variables()) {
        EXPECT_EQ(v.kind(), VarKind::kPointer);
        EXPECT_EQ(v.vertex(), 2);
      }
    }
  }
}

TEST(HeavyRestrictionTest, Assignments) {
  const Restriction rho = BuildHeavyRestriction(3, 2, 1, {{2, 2}, {3, 1}});
  EXPECT_EQ(rho.Get(X(2, 1, 1)), true);
  EXPECT_FALSE(rho.Assigns(X(2, 1, 2)));
  EXPECT_EQ(rho.Get(X(3, 1, 2)), true);
  EXPECT_FALSE(rho.Assigns(X(3, 1, 1)));
  EXPECT_EQ(rho.Get(X(1, 2, 1)), false);
  EXPECT_EQ(rho.Get(X(1, 3, 2)), false);
}

// --- Split ------------------------------------------------------------------

TEST(SplitTest, ComponentsOfOneLine) {
  const PrimeField f;
  AxiomSystem sys;
  sys.basis = kF;
  sys.axioms = {Poly("1 * y", kF), Poly("1 * z", kF)};
  sys.groups.resize(2);
  sys.universe = {P("y"), P("z")};
  PcProof proof;
  proof.basis = kF;
  proof.steps = {Step::Axiom(0), Step::Axiom(1), Step::MulVar(P("x"), 0),
                 Step::LinComb(f.One(), 2, f.One(), 1)};
  ASSERT_EQ(MaterializeLines(proof, sys).back(), Poly("1 * x y ; 1 * z", kF));
  const PcProof split = Split(proof, sys, P("x"));
  ASSERT_TRUE(CheckPcProof(split, sys, Derivation()).valid);
  const std::vector<Polynomial> lines = MaterializeLines(split, sys);
  EXPECT_FALSE(Mentions(lines, P("x")));
  EXPECT_NE(std::find(lines.begin(), lines.end(), Poly("1 * y", kF)), lines.end());
  EXPECT_NE(std::find(lines.begin(), lines.end(), Poly("1 * z", kF)), lines.end());
}

TEST(SplitTest, XFreeRefutationStillEndsInOne) {
  const AxiomSystem sys = GenerateCycleTseitin(4);
  const PcProof proof = TseitinFourierRefutation(4);
  const PcProof split = Split(proof, sys, P("q"));
  const PcReport r = CheckPcProof(split, sys);
  EXPECT_TRUE(r.valid && r.refutation) << r.message;
  EXPECT_LE(split.steps.size(), proof.steps.size());
}

TEST(SplitTest, TseitinDummy) {
  const AxiomSystem sys = GenerateCycleTseitin(5);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const PcProof proof = WithDetours(TseitinFourierRefutation(5), P("d"), 4, seed);
    const PcProof split = Split(proof, sys, P("d"));
    const PcReport r = CheckPcProof(split, sys);
    EXPECT_TRUE(r.valid && r.refutation) << r.message;
    EXPECT_FALSE(Mentions(MaterializeLines(split, sys), P("d")));
  }
}

TEST(SplitTest, Errors) {
  const AxiomSystem sys = GenerateCycleTseitin(4);
  const PcProof proof = TseitinFourierRefutation(4);
  EXPECT_THROW(Split(proof, sys, P("x1")), Error);
  EXPECT_THROW(Split(proof, sys, P("x1").Twin()), Error);
  PcProof twin = proof;
  twin.steps.push_back(Step::Twin(P("q")));
  EXPECT_THROW(Split(twin, sys, P("q")), Error);
  PcProof mul_twin = proof;
  mul_twin.steps.push_back(Step::MulVar(P("q").Twin(), 0));
  EXPECT_THROW(Split(mul_twin, sys, P("q")), Error);
  PcProof boolean = proof;
  boolean.basis = Basis::kBoolean;
  EXPECT_THROW(Split(boolean, sys, P("q")), Error);
}

TEST(SplitTest, RandomDerivationsWithQuadraticContainment) {
  const AxiomSystem sys = CnfToAxioms(GenerateBopLifted(3, 2), kF);
  const VarId s = P("s");
  RandomDerivationOptions options;
  options.steps = 14;
  options.extra_vars = {s, P("t")};
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const PcProof proof = RandomDerivation(sys, options, seed);
    const PcProof split = Split(proof, sys, s);
    const PcReport r = CheckPcProof(split, sys, Derivation());
    ASSERT_TRUE(r.valid) << "seed " << seed << ": " << r.message;
    const std::vector<Polynomial> after = MaterializeLines(split, sys);
    EXPECT_FALSE(Mentions(after, s));
    EXPECT_TRUE(QuadraticContainmentCheck(MaterializeLines(proof, sys), after, s))
        << "seed " << seed;
  }
}

TEST(QuadraticContainmentTest, HandInstance) {
  const std::vector<Polynomial> before = {Poly("1 * x y ; 1 * y", kF)};
  // Components: x-part y, rest y.
  EXPECT_TRUE(QuadraticContainmentCheck(before, {Poly("1 * y", kF)}, P("x")));
  EXPECT_FALSE(QuadraticContainmentCheck(before, {Poly("1 * x ; 1 * y", kF)}, P("x")));
  EXPECT_TRUE(QuadraticContainmentCheck(before, {}, P("x")));
}

// --- QdegToDeg ----------------------------------------------------------------

TEST(QdegToDegTest, CyclicCubicNeedsDegreeFour) {
  AxiomSystem sys;
  sys.basis = kF;
  sys.axioms = {Poly("1 * x1 x2 x3 ; 1 * x2 x3 x4 ; 1 * x3 x4 x1 ; 1 * x4 x1 x2", kF)};
  sys.groups.resize(1);
  sys.universe = {P("x1"), P("x2"), P("x3"), P("x4")};
  PcProof proof;
  proof.basis = kF;
  proof.steps = {Step::Axiom(0)};
  const QdegToDegResult r = QdegToDeg(proof, sys);
  EXPECT_EQ(r.input_qdeg, 2);
  EXPECT_EQ(r.axiom_degree, 3);
  EXPECT_EQ(r.axiom_multiplication_degree, 4);
  EXPECT_LE(r.output_degree, 2 * std::max(r.input_qdeg, r.axiom_degree));
  EXPECT_EQ(MaterializeLines(r.proof, sys).back().Degree(), 2);
  EXPECT_TRUE(CheckPcProof(r.proof, sys, Derivation()).valid);
}

TEST(QdegToDegTest, SingleTermLines) {
  AxiomSystem sys;
  sys.basis = kF;
  sys.axioms = {Poly("3 * a b", kF)};
  sys.groups.resize(1);
  sys.universe = {P("a"), P("b")};
  PcProof proof;
  proof.basis = kF;
  proof.steps = {Step::Axiom(0), Step::MulVar(P("c"), 0)};
  const QdegToDegResult r = QdegToDeg(proof, sys);
  EXPECT_TRUE(CheckPcProof(r.proof, sys, Derivation()).valid);
  // Only the axiom itself keeps its degree; every transformed line is t t = 1.
  EXPECT_EQ(MaterializeLines(r.proof, sys).back(), Poly("3", kF));
  EXPECT_EQ(r.output_degree, 2);
}

TEST(QdegToDegTest, TseitinAndRandomCorpus) {
  const AxiomSystem cycle = GenerateCycleTseitin(5);
  const QdegToDegResult t = QdegToDeg(TseitinFourierRefutation(5), cycle);
  const PcReport tr = CheckPcProof(t.proof, cycle);
  EXPECT_TRUE(tr.valid && tr.refutation) << tr.message;
  EXPECT_LE(t.output_degree, 2 * std::max(t.input_qdeg, 2));

  const AxiomSystem sys = CnfToAxioms(GenerateBopLifted(3, 2), kF);
  RandomDerivationOptions options;
  options.steps = 14;
  options.extra_vars = {P("s")};
  bool lowered = false;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const PcProof proof = RandomDerivation(sys, options, seed);
    const QdegToDegResult r = QdegToDeg(proof, sys);
    ASSERT_TRUE(CheckPcProof(r.proof, sys, Derivation()).valid) << seed;
    EXPECT_LE(r.output_degree, 2 * std::max(r.input_qdeg, r.axiom_degree));
    lowered |= r.output_degree < r.input_degree;
  }
  EXPECT_TRUE(lowered);
}

// --- Cluster ----------------------------------------------------------------

TEST(ClusterTest, TermExamples) {
  const Term pair({X(1, 2, 1), X(1, 2, 2)});
  ClusterMap two(2);
  two.SetPairing(1, 2, {1, 1});
  const TermProduct cancelled = Cluster(pair, two);
  EXPECT_EQ(cancelled.term, Term());
  EXPECT_EQ(cancelled.sign, 1);

  ClusterMap four(4);
  four.SetPairing(1, 2, {1, 2, 1, 2});
  EXPECT_EQ(Cluster(pair, four).term,
            Term({VarId::Cluster(1, 2, 1), VarId::Cluster(1, 2, 2)}));
  EXPECT_EQ(four.Image(X(1, 2, 3)), VarId::Cluster(1, 2, 1));
  EXPECT_EQ(four.Image(X(1, 2, 4).Twin()), VarId::Cluster(1, 2, 2).Twin());
  EXPECT_EQ(four.Image(VarId::Pointer(1, 1)), VarId::Pointer(1, 1));
}

TEST(ClusterTest, RejectsBadPairings) {
  ClusterMap map(4);
  EXPECT_THROW(map.SetPairing(1, 2, {1, 1, 1, 2}), Error);
  EXPECT_THROW(map.SetPairing(1, 2, {1, 2, 3}), Error);
  EXPECT_THROW(RandomPairing(3, 3, 1), Error);
}

TEST(ClusterTest, RandomPairingIsPerfectAndSeeded) {
  const ClusterMap a = RandomPairing(4, 6, 9);
  EXPECT_EQ(a.pairings().size(), 12u);
  for (const auto& [key, pairing] : a.pairings()) {
    std::vector<int> count(4, 0);
    for (int p : pairing) ++count[p];
    EXPECT_EQ(count, (std::vector<int>{0, 2, 2, 2}));
  }
  EXPECT_EQ(a.pairings(), RandomPairing(4, 6, 9).pairings());
  EXPECT_NE(a.pairings(), RandomPairing(4, 6, 10).pairings());
}

TEST(ClusterTest, ProofImageIsValid) {
  const int n = 3, ell = 2;
  const AxiomSystem sys = CnfToAxioms(GenerateBopLifted(n, ell), kF);
  RandomDerivationOptions options;
  options.steps = 12;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const ClusterMap map = RandomPairing(n, ell, seed);
    const AxiomSystem clustered = Cluster(sys, map);
    EXPECT_EQ(clustered.ell, ell / 2);
    const PcProof proof = Cluster(RandomDerivation(sys, options, seed), map);
    const PcReport r = CheckPcProof(proof, clustered, Derivation());
    EXPECT_TRUE(r.valid) << r.message;
    for (const VarId& v : clustered.universe) {
      EXPECT_NE(v.kind(), VarKind::kEdge);
    }
  }
}

TEST(ClusterTest, MapRoundTrip) {
  const ClusterMap map = RandomPairing(3, 4, 5);
  std::stringstream s;
  WriteClusterMap(s, map);
  const ClusterMap back = ReadClusterMap(s);
  EXPECT_EQ(back.ell(), 4);
  EXPECT_EQ(back.pairings(), map.pairings());
  std::stringstream bad("clustermap ell=4\npair 1 2 1 1 -> 1\n");
  EXPECT_THROW(ReadClusterMap(bad), Error);
}

TEST(ClusterTest, RetentionMatchesExactProbability) {
  EXPECT_NEAR(ClusterRetentionFrequency(4, 2, 30000, 1), 2.0 / 3.0, 0.015);
  const double f = ClusterRetentionFrequency(20, 10, 40000, 2, 2);
  const double exact = 3628800.0 / 654729075.0;  // 10! / 19!!
  const double sigma = std::sqrt(exact * (1 - exact) / 40000);
  EXPECT_NEAR(f, exact, 4 * sigma);
  EXPECT_LE(f, std::pow(0.75, 10));
  EXPECT_EQ(ClusterRetentionFrequency(20, 10, 5000, 2, 1),
            ClusterRetentionFrequency(20, 10, 5000, 2, 3));
  EXPECT_EQ(ClusterRetentionFrequency(6, 4, 1000, 3), 0.0);
}

}  // namespace
}  // namespace pclab
