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


#include "pclab/constructions.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "pclab/errors.h"
#include "pclab/formulas.h"
#include "pclab/proofs.h"
#include "pclab/stats.h"
#include "pclab/transforms.h"
#include "test_support.h"

namespace pclab {
namespace {

using testing::P;

TEST(LopRefutationTest, TwoVerticesTakeTwoResolutions) {
  const ResolutionProof proof = LopResolutionRefutation(2);
  const ResReport r = CheckResolution(proof, GenerateLop(2));
  ASSERT_TRUE(r.valid) << r.message;
  EXPECT_TRUE(r.refutation);
  EXPECT_EQ(r.resolutions, 2);
  EXPECT_EQ(r.lines, 5);
}

TEST(LopRefutationTest, ValidWithAtMostTwoNegativeLiterals) {
  for (int n = 2; n <= 12; ++n) {
    const ResReport r = CheckResolution(LopResolutionRefutation(n), GenerateLop(n));
    ASSERT_TRUE(r.valid) << "n=" << n << ": " << r.message;
    EXPECT_TRUE(r.refutation);
    EXPECT_LE(r.max_negative, 2) << "n=" << n;
  }
}

TEST(LopRefutationTest, Deterministic) {
  const ResolutionProof a = LopResolutionRefutation(7);
  const ResolutionProof b = LopResolutionRefutation(7);
  EXPECT_EQ(a.steps, b.steps);
}

TEST(LopRefutationTest, CubicGrowth) {
  std::vector<double> n, lines;
  for (int k = 3; k <= 20; ++k) {
    n.push_back(k);
    lines.push_back(LopResolutionRefutation(k).steps.size());
  }
  const PowerFit fit = FitLogLog(n, lines);
  EXPECT_NEAR(fit.slope, 3.0, 0.4);
}

TEST(LopRefutationTest, RejectsSmallN) {
  EXPECT_THROW(LopResolutionRefutation(1), Error);
  EXPECT_THROW(BopToLopDerivation(1), Error);
  EXPECT_THROW(TseitinFourierRefutation(2), Error);
}

TEST(BopToLopTest, TwoVertices) {
  std::vector<int> vertex;
  const ResolutionProof proof = BopToLopDerivation(2, &vertex);
  const ResReport r = CheckResolution(proof, GenerateBop(2), false);
  ASSERT_TRUE(r.valid) << r.message;
  EXPECT_LE(r.resolutions, 2);
  const std::vector<Clause> clauses = MaterializeClauses(proof, GenerateBop(2));
  EXPECT_EQ(clauses[vertex[1]], Clause({{VarId::Edge(1, 2), true}}));
  EXPECT_EQ(clauses[vertex[0]], Clause({{VarId::Edge(2, 1), true}}));
}

TEST(BopToLopTest, TreeSizeAndVertexClauses) {
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> vertex;
    const ResolutionProof proof = BopToLopDerivation(n, &vertex);
    const Cnf bop = GenerateBop(n);
    const ResReport r = CheckResolution(proof, bop, false);
    ASSERT_TRUE(r.valid) << r.message;
    const int leaves = 1 << PointerWidth(n);
    EXPECT_EQ(r.resolutions, n * (leaves - 1)) << "n=" << n;
    const std::vector<Clause> clauses = MaterializeClauses(proof, bop);
    const Cnf lop = GenerateLop(n);
    for (int j = 1; j <= n; ++j) {
      EXPECT_EQ(clauses[vertex[j - 1]], lop.clauses[j - 1]) << "n=" << n;
    }
  }
}

TEST(BopRefutationTest, Valid) {
  for (int n = 2; n <= 10; ++n) {
    const ResReport r = CheckResolution(BopResolutionRefutation(n), GenerateBop(n));
    ASSERT_TRUE(r.valid) << "n=" << n << ": " << r.message;
    EXPECT_TRUE(r.refutation);
  }
}

TEST(LiftedRefutationTest, ValidOnGrid) {
  for (int n = 2; n <= 6; ++n) {
    for (int ell = 1; ell <= 3; ++ell) {
      const ResReport r =
          CheckResolution(LiftedRefutation(n, ell), GenerateBopLifted(n, ell));
      ASSERT_TRUE(r.valid) << "n=" << n << " ell=" << ell << ": " << r.message;
      EXPECT_TRUE(r.refutation);
    }
  }
}

TEST(LiftedRefutationTest, EllOneMatchesUnlifted) {
  for (int n = 2; n <= 6; ++n) {
    const ResolutionProof lifted = LiftedRefutation(n, 1);
    const ResolutionProof plain = BopResolutionRefutation(n);
    ASSERT_EQ(lifted.steps.size(), plain.steps.size());
    for (size_t k = 0; k < plain.steps.size(); ++k) {
      EXPECT_EQ(lifted.steps[k].kind, plain.steps[k].kind);
      EXPECT_EQ(lifted.steps[k].lhs, plain.steps[k].lhs);
      EXPECT_EQ(lifted.steps[k].rhs, plain.steps[k].rhs);
    }
  }
}

TEST(LiftedRefutationTest, SizeWithinCubicTimesEllSquared) {
  // Ratio of size to n^3 ell^2 stays bounded across the grid.
  double lo = 1e18, hi = 0;
  for (int n = 3; n <= 10; ++n) {
    for (int ell = 1; ell <= 3; ++ell) {
      const double ratio =
          static_cast<double>(LiftedRefutation(n, ell).steps.size()) /
          (std::pow(n, 3) * ell * ell);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  EXPECT_LT(hi / lo, 4.0);
}

TEST(ResToPcrTest, SingleResolution) {
  Cnf cnf;
  cnf.Add(Clause({{P("x"), true}, {P("y"), true}}));
  cnf.Add(Clause({{P("x"), false}, {P("z"), true}}));
  cnf.RecomputeUniverse();
  ResolutionProof res;
  res.steps = {ResStep::Input(0), ResStep::Input(1),
               ResStep::Resolve(0, 1, P("x"))};
  const PcProof pcr = ResToPcr(res, cnf);
  const AxiomSystem axioms = CnfToAxioms(cnf, Basis::kBoolean);
  CheckOptions options;
  options.require_refutation = false;
  const PcReport r = CheckPcProof(pcr, axioms, options);
  ASSERT_TRUE(r.valid) << r.message;
  const std::vector<Polynomial> lines = MaterializeLines(pcr, axioms);
  EXPECT_EQ(lines.back(), testing::Poly("1 * ~y ~z", Basis::kBoolean));
}

TEST(ResToPcrTest, EmptyClauseInput) {
  Cnf cnf;
  cnf.Add(Clause());
  ResolutionProof res;
  res.steps = {ResStep::Input(0)};
  const PcProof pcr = ResToPcr(res, cnf);
  const PcReport r = CheckPcProof(pcr, CnfToAxioms(cnf, Basis::kBoolean));
  ASSERT_TRUE(r.valid) << r.message;
  EXPECT_EQ(r.size, 1u);
}

TEST(ResToPcrTest, LopRefutation) {
  for (int n = 2; n <= 5; ++n) {
    const Cnf lop = GenerateLop(n);
    const PcProof pcr = ResToPcr(LopResolutionRefutation(n), lop);
    const PcReport r = CheckPcProof(pcr, CnfToAxioms(lop, Basis::kBoolean));
    ASSERT_TRUE(r.valid) << "n=" << n << ": " << r.message;
    EXPECT_TRUE(r.refutation);
  }
}

TEST(ResToPcrTest, RejectsInvalidInput) {
  const Cnf lop = GenerateLop(3);
  ResolutionProof res;
  res.steps = {ResStep::Input(0), ResStep::Input(1),
               ResStep::Resolve(0, 1, VarId::Edge(1, 2))};
  EXPECT_THROW(ResToPcr(res, lop), Error);
}

TEST(PcrUpperBoundTest, ValidRefutations) {
  for (auto [n, ell] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 1}}) {
    const PcProof proof = PcrUpperBound(n, ell);
    const AxiomSystem axioms =
        CnfToAxioms(GenerateBopLifted(n, ell), Basis::kBoolean);
    const PcReport r = CheckPcProof(proof, axioms);
    ASSERT_TRUE(r.valid) << "n=" << n << ": " << r.message;
    EXPECT_TRUE(r.refutation);
    EXPECT_GT(r.size, 0u);
  }
}

TEST(TseitinRefutationTest, ThreeVertices) {
  const PcProof proof = TseitinFourierRefutation(3);
  const AxiomSystem axioms = GenerateCycleTseitin(3);
  const PcReport r = CheckPcProof(proof, axioms);
  ASSERT_TRUE(r.valid) << r.message;
  EXPECT_LE(r.lines, 10);
  for (const Polynomial& p : MaterializeLines(proof, axioms)) {
    EXPECT_LE(p.monomials().size(), 2u);
  }
}

TEST(TseitinRefutationTest, LinearSize) {
  std::vector<double> n, size;
  for (int k = 3; k <= 50; ++k) {
    const PcReport r = CheckPcProof(TseitinFourierRefutation(k),
                                    GenerateCycleTseitin(k));
    ASSERT_TRUE(r.valid) << "n=" << k << ": " << r.message;
    n.push_back(k);
    size.push_back(static_cast<double>(r.size));
  }
  EXPECT_NEAR(FitLogLog(n, size).slope, 1.0, 0.2);
}

}  // namespace
}  // namespace pclab
