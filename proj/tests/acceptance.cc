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


// Acceptance gate: runs every criterion at its stated scale and tolerance and
// prints one PASS/FAIL line per criterion.
//
//   acceptance [--jobs N] [--cli PATH --work DIR] [--expect-fail 3,...]
//
// With --cli, the determinism criterion also re-runs driver commands and
// compares their files. Criteria listed in --expect-fail still print their
// real verdict; they only stop a failure from failing the process.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pclab/constructions.h"
#include "pclab/degree_lab.h"
#include "pclab/errors.h"
#include "pclab/formulas.h"
#include "pclab/parallel.h"
#include "pclab/proofs.h"
#include "pclab/random.h"
#include "pclab/stats.h"
#include "pclab/transforms.h"

namespace pclab {
namespace {

constexpr uint64_t kSeed = 20260101;

struct Options {
  int jobs = 1;
  std::string cli;
  std::string work;
  std::set<int> expect_fail;
};

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string ProofText(const PcProof& p) {
  std::ostringstream s;
  WritePcProof(s, p);
  return s.str();
}

std::string ProofText(const ResolutionProof& p) {
  std::ostringstream s;
  WriteResolutionProof(s, p);
  return s.str();
}

bool MentionsVar(const std::vector<Polynomial>& lines, VarId v) {
  for (const Polynomial& p : lines) {
    if (p.Mentions(v.Base()) || p.Mentions(v.Base().Twin())) return true;
  }
  return false;
}

CheckOptions Derivation() {
  CheckOptions o;
  o.require_refutation = false;
  return o;
}

// 1 -------------------------------------------------------------------------
Verdict UpperBound() {
  std::vector<double> ns, sizes;
  bool valid = true;
  double worst = 0;
  for (int n = 4; n <= 12; ++n) {
    const auto start = Clock::now();
    const PcProof proof = PcrUpperBound(n, 1);
    const PcReport r =
        CheckPcProof(proof, CnfToAxioms(GenerateBopLifted(n, 1), Basis::kBoolean));
    worst = std::max(worst, Since(start));
    valid = valid && r.valid && r.refutation;
    ns.push_back(n);
    sizes.push_back(static_cast<double>(r.size));
  }
  const PowerFit fit = FitLogLog(ns, sizes);
  Verdict v;
  v.pass = valid && fit.slope >= 2.5 && fit.slope <= 4.0 && worst < 60;
  v.detail = "PCR refutations n=4..12 valid=" + std::to_string(valid) +
             ", size slope " + Fmt("%.3f", fit.slope) + " in [2.5,4.0], slowest " +
             Fmt("%.3f", worst) + " s (< 60 s)";
  return v;
}

// 2 -------------------------------------------------------------------------
Verdict LopRefutation() {
  std::vector<double> ns, lines;
  bool valid = true;
  int max_negative = 0;
  for (int n = 3; n <= 20; ++n) {
    const ResReport r = CheckResolution(LopResolutionRefutation(n), GenerateLop(n));
    valid = valid && r.valid && r.refutation;
    max_negative = std::max(max_negative, r.max_negative);
    ns.push_back(n);
    lines.push_back(r.lines);
  }
  const PowerFit fit = FitLogLog(ns, lines);
  Verdict v;
  v.pass = valid && std::abs(fit.slope - 3) <= 0.4 && max_negative <= 2;
  v.detail = "LOP n=3..20 valid=" + std::to_string(valid) + ", clause slope " +
             Fmt("%.3f", fit.slope) + " (3 +- 0.4), max negative literals " +
             std::to_string(max_negative) + " (<= 2)";
  return v;
}

// 3 -------------------------------------------------------------------------
Verdict LiftedRefutation() {
  std::vector<double> model, clauses;
  bool valid = true;
  for (int ell = 1; ell <= 3; ++ell) {
    for (int n = 3; n <= 10; ++n) {
      const ResReport r =
          CheckResolution(pclab::LiftedRefutation(n, ell), GenerateBopLifted(n, ell));
      valid = valid && r.valid && r.refutation;
      model.push_back(static_cast<double>(n) * n * n * ell * ell);
      clauses.push_back(r.lines);
    }
  }
  const ScaleFit fit = FitScale(model, clauses);
  size_t worst = 0;
  for (size_t k = 0; k < fit.relative_residuals.size(); ++k) {
    if (std::abs(fit.relative_residuals[k]) > std::abs(fit.relative_residuals[worst])) {
      worst = k;
    }
  }
  const int worst_ell = static_cast<int>(worst / 8) + 1;
  const int worst_n = static_cast<int>(worst % 8) + 3;
  Verdict v;
  v.pass = valid && fit.max_abs_residual < 0.2;
  v.detail = "lifted n=3..10 ell=1..3 valid=" + std::to_string(valid) + ", C=" +
             Fmt("%.4f", fit.constant) + ", max |residual| " +
             Fmt("%.1f%%", 100 * fit.max_abs_residual) + " at n=" +
             std::to_string(worst_n) + " ell=" + std::to_string(worst_ell) +
             " (< 20%)";
  return v;
}

// Corpus shared by criteria 4 and 5: seeded random Fourier derivations from
// the lifted ordering axioms with a fresh variable s, and every fourth entry
// a cycle-Tseitin refutation with s-detours.
struct CorpusEntry {
  const AxiomSystem* axioms;
  PcProof proof;
};

std::vector<CorpusEntry> BuildCorpus(const AxiomSystem& lifted,
                                     const std::vector<AxiomSystem>& cycles, int size) {
  const VarId s = VarId::Plain("s");
  std::vector<CorpusEntry> corpus(size);
  for (int k = 0; k < size; ++k) {
    const uint64_t seed = DeriveSeed(kSeed, "split-corpus", k);
    if (k % 4 == 3) {
      const AxiomSystem& cycle = cycles[k % cycles.size()];
      corpus[k] = {&cycle, WithDetours(TseitinFourierRefutation(
                                           static_cast<int>(cycle.universe.size())),
                                       s, 3, seed)};
    } else {
      RandomDerivationOptions options;
      options.steps = 14;
      options.extra_vars = {s, VarId::Plain("t")};
      options.twin_vars = {VarId::Edge(1, 2, 1)};
      corpus[k] = {&lifted, RandomDerivation(lifted, options, seed)};
    }
  }
  return corpus;
}

// 4 -------------------------------------------------------------------------
Verdict SplitSuite(const std::vector<CorpusEntry>& corpus, int jobs) {
  const VarId s = VarId::Plain("s");
  std::vector<int> ok(corpus.size(), 0);
  ParallelFor(corpus.size(), jobs, [&](size_t k) {
    const CorpusEntry& e = corpus[k];
    const bool refutation = CheckPcProof(e.proof, *e.axioms).valid;
    const PcProof split = Split(e.proof, *e.axioms, s);
    CheckOptions options;
    options.require_refutation = refutation;
    if (!CheckPcProof(split, *e.axioms, options).valid) return;
    const std::vector<Polynomial> after = MaterializeLines(split, *e.axioms);
    if (MentionsVar(after, s)) return;
    if (!QuadraticContainmentCheck(MaterializeLines(e.proof, *e.axioms), after, s)) {
      return;
    }
    ok[k] = 1;
  });
  int passed = 0;
  for (int v : ok) passed += v;
  Verdict v;
  v.pass = passed == static_cast<int>(corpus.size());
  v.detail = std::to_string(passed) + "/" + std::to_string(corpus.size()) +
             " split outputs valid, x-free and QT-contained (100% required)";
  return v;
}

// 5 -------------------------------------------------------------------------
Verdict QdegToDegSuite(const std::vector<CorpusEntry>& corpus, int jobs) {
  std::vector<int> ok(corpus.size(), 0), lowered(corpus.size(), 0);
  ParallelFor(corpus.size(), jobs, [&](size_t k) {
    const CorpusEntry& e = corpus[k];
    const QdegToDegResult r = QdegToDeg(e.proof, *e.axioms);
    const bool valid = CheckPcProof(r.proof, *e.axioms, Derivation()).valid;
    ok[k] = valid && r.output_degree <= 2 * std::max(r.input_qdeg, r.axiom_degree);
    lowered[k] = r.output_degree < r.input_degree;
  });
  int passed = 0, lower = 0;
  for (size_t k = 0; k < corpus.size(); ++k) {
    passed += ok[k];
    lower += lowered[k];
  }

  AxiomSystem cyclic;
  cyclic.basis = Basis::kFourier;
  cyclic.axioms = {ParsePolynomial("1 * x1 x2 x3 ; 1 * x2 x3 x4 ; 1 * x3 x4 x1 ; 1 * x4 x1 x2",
                                     Basis::kFourier, PrimeField())};
  cyclic.groups.resize(1);
  for (const char* name : {"x1", "x2", "x3", "x4"}) {
    cyclic.universe.push_back(VarId::Plain(name));
  }
  PcProof single;
  single.basis = Basis::kFourier;
  single.steps = {Step::Axiom(0)};
  const QdegToDegResult a = QdegToDeg(single, cyclic);
  const bool cyclic_ok = a.input_qdeg == 2 && a.axiom_degree == 3 &&
                           a.axiom_multiplication_degree == 4 &&
                           CheckPcProof(a.proof, cyclic, Derivation()).valid;
  Verdict v;
  v.pass = passed == static_cast<int>(corpus.size()) && lower > 0 && cyclic_ok;
  v.detail = std::to_string(passed) + "/" + std::to_string(corpus.size()) +
             " valid with degree <= 2 max(d, d0); degree lowered on " +
             std::to_string(lower) + "; cyclic cubic p: d=" + std::to_string(a.input_qdeg) +
             " d0=" + std::to_string(a.axiom_degree) + " intermediate degree " +
             std::to_string(a.axiom_multiplication_degree) + " (expect 4)";
  return v;
}

// 6 -------------------------------------------------------------------------
Verdict ClusteringBound(int jobs) {
  constexpr int kTrials = 100000;
  bool pass = true;
  std::string detail;
  for (int ell : {12, 16, 20}) {
    const double f =
        ClusterRetentionFrequency(ell, ell / 2, kTrials, DeriveSeed(kSeed, "cluster", ell),
                                  jobs);
    const double bound = std::pow(0.75, ell / 2);
    const double sigma = std::sqrt(bound * (1 - bound) / kTrials);
    pass = pass && f <= bound + 3 * sigma;
    detail += (detail.empty() ? "" : ", ") + std::string("ell=") + std::to_string(ell) +
              " freq " + Fmt("%.5f", f) + " <= " + Fmt("%.5f", bound + 3 * sigma);
  }
  return {pass, detail + " (1e5 trials each)"};
}

// 7 -------------------------------------------------------------------------
Verdict ResidueProperties() {
  const auto start = Clock::now();
  const AxiomSystem bop = CnfToAxioms(GenerateBop(3), Basis::kBoolean, PrimeField(),
                                      BooleanEncoding::kTwinFree);
  const LemmaReport r = VerifyResidueProperties(bop.axioms, bop.universe, 200,
                                                DeriveSeed(kSeed, "residue"), 2);
  const double seconds = Since(start);
  Verdict v;
  v.pass = r.counterexamples == 0 && r.cases > 200 && seconds < 300;
  v.detail = "gen_bop(3): " + std::to_string(r.cases) + " cases, " +
             std::to_string(r.counterexamples) + " counterexamples, " +
             Fmt("%.2f", seconds) + " s (< 300 s)";
  if (!r.first_counterexample.empty()) v.detail += "; first: " + r.first_counterexample;
  return v;
}

// 8 -------------------------------------------------------------------------
Verdict OperatorR(int jobs) {
  const ResidueOracle oracle(3, 1);
  const bool one = oracle.R(Polynomial::Constant(Basis::kBoolean, PrimeField(), 1)).IsOne();
  const std::vector<LemmaReport> reports = {
      VerifyRopAxioms(oracle),
      VerifyRopCondition2(oracle, 500, DeriveSeed(kSeed, "rop"), jobs),
      VerifyRdrop(oracle, 4, jobs), VerifyRdrop2(oracle, 4, jobs),
      VerifyRtech(oracle, 4, jobs)};
  bool pass = one;
  std::string detail = std::string("R(1)=1 ") + (one ? "yes" : "no");
  for (const LemmaReport& r : reports) {
    pass = pass && r.counterexamples == 0 && r.cases > 0;
    detail += ", " + r.lemma + " " + std::to_string(r.counterexamples) + "/" +
              std::to_string(r.cases);
  }
  return {pass, "n=3 ell=1: " + detail + " (counterexamples/cases)"};
}

// 9 -------------------------------------------------------------------------
Verdict Unsatisfiability() {
  bool pass = true;
  int unsat = 0;
  auto expect_unsat = [&](const Cnf& cnf) {
    const bool sat = CheckSatisfiable(cnf).satisfiable;
    pass = pass && !sat;
    unsat += !sat;
  };
  for (int n = 2; n <= 3; ++n) {
    expect_unsat(GenerateLop(n));
    expect_unsat(GenerateBop(n));
    for (int ell = 1; ell <= 2; ++ell) expect_unsat(GenerateBopLifted(n, ell));
  }
  const bool diagonal_sat =
      CheckSatisfiable(GenerateBopLifted(2, 2, LiftMode::kDiagonal)).satisfiable;
  pass = pass && diagonal_sat;
  return {pass, std::to_string(unsat) +
                    "/8 instances UNSAT (lop, bop, bop-lifted; n<=3, ell<=2); "
                    "diagonal lifted (2,2) SAT=" +
                    std::to_string(diagonal_sat)};
}

// 10 ------------------------------------------------------------------------
Verdict FourierTseitin() {
  std::vector<double> ns, sizes;
  bool valid = true;
  for (int n = 3; n <= 50; ++n) {
    const PcReport r = CheckPcProof(TseitinFourierRefutation(n), GenerateCycleTseitin(n));
    valid = valid && r.valid && r.refutation;
    ns.push_back(n);
    sizes.push_back(static_cast<double>(r.size));
  }
  const PowerFit fit = FitLogLog(ns, sizes);
  Verdict v;
  v.pass = valid && std::abs(fit.slope - 1) <= 0.2;
  v.detail = "n=3..50 valid=" + std::to_string(valid) + ", size slope " +
             Fmt("%.3f", fit.slope) + " (1 +- 0.2)";
  return v;
}

// 11 ------------------------------------------------------------------------
std::string Artifacts(int jobs) {
  std::ostringstream out;
  out << ProofText(PcrUpperBound(7, 1)) << ProofText(LopResolutionRefutation(9))
      << ProofText(pclab::LiftedRefutation(5, 2));
  const AxiomSystem sys = CnfToAxioms(GenerateBopLifted(3, 2), Basis::kFourier);
  RandomDerivationOptions options;
  options.steps = 14;
  options.extra_vars = {VarId::Plain("s")};
  const PcProof d = RandomDerivation(sys, options, DeriveSeed(kSeed, "det"));
  const ClusterMap map = RandomPairing(3, 2, DeriveSeed(kSeed, "det-map"));
  out << ProofText(Split(d, sys, VarId::Plain("s"))) << ProofText(Cluster(d, map))
      << ProofText(QdegToDeg(d, sys).proof);
  WriteClusterMap(out, map);
  out << Fmt("%.9f", ClusterRetentionFrequency(16, 8, 20000, kSeed, jobs)) << '\n';
  const ResidueOracle oracle(3, 1);
  const LemmaReport r = VerifyRopCondition2(oracle, 100, kSeed, jobs);
  out << r.cases << ' ' << r.counterexamples << '\n';
  const DemoReport demo = RunDemoPipeline(3, 2, 12, 2, 1, kSeed);
  out << demo.qdeg_after << ' ' << demo.special_after_cluster << ' '
      << demo.rounds.size() << '\n';
  return out.str();
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs the same driver commands in two directories; returns the number of
// differing or missing files, or -1 when a command fails.
int CliDifferences(const Options& o, std::vector<std::string>* files_out) {
  namespace fs = std::filesystem;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"refute pcr-upper 8 1 --out pcr8.pc", "pcr8.pc"},
      {"refute bop-lifted 5 2 --out lifted52.res", "lifted52.res"},
      {"derive bop-lifted 3 2 --extra s --steps 14 --seed 11 --out d.pc", "d.pc"},
      {"transform split d.pc s --out ds.pc", "ds.pc"},
      {"transform cluster d.pc --seed 7 --out dc.pc --map-out dc.map", "dc.map"},
      {"experiment pcr-upper n=4..12 ell=1 --no-timing --out pcr.csv", "pcr.csv"},
      {"experiment tseitin-cycle n=3..50 --no-timing --jobs 4 --out tseitin.csv",
       "tseitin.csv"},
      {"verify-lemmas 3 1 rop-cond2 --seed 3 --no-timing --out - > lemmas.txt",
       "lemmas.txt"}};
  std::vector<std::string> contents[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = fs::path(o.work) / (run == 0 ? "a" : "b");
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& [args, file] : commands) {
      const std::string cmd = "cd \"" + dir.string() + "\" && \"" + o.cli + "\" " + args +
                              " 2>/dev/null" + (args.find('>') == std::string::npos
                                                    ? " >/dev/null"
                                                    : "");
      if (std::system(cmd.c_str()) != 0) {
        std::cerr << "acceptance: failed: " << cmd << '\n';
        return -1;
      }
      contents[run].push_back(ReadFile(dir / file));
      if (run == 0) files_out->push_back(file);
    }
  }
  int differ = 0;
  for (size_t k = 0; k < contents[0].size(); ++k) {
    differ += contents[0][k] != contents[1][k] || contents[0][k].empty();
  }
  return differ;
}

Verdict Determinism(const Options& o) {
  const bool same = Artifacts(1) == Artifacts(o.jobs);
  std::string detail = std::string("in-process artifacts identical across runs and ") +
                       "thread counts: " + (same ? "yes" : "no");
  bool pass = same;
  if (!o.cli.empty()) {
    std::vector<std::string> files;
    const int differ = CliDifferences(o, &files);
    pass = pass && differ == 0;
    detail += differ < 0 ? "; CLI command failed"
                         : "; CLI files identical " +
                               std::to_string(files.size() - differ) + "/" +
                               std::to_string(files.size());
  }
  return {pass, detail};
}

Options ParseArgs(int argc, char** argv) {
  Options o;
  o.jobs = DefaultJobs();
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    auto next = [&]() -> std::string {
      if (k + 1 >= argc) throw Error(ErrorCode::kInvalidArgument, arg + " needs a value");
      return argv[++k];
    };
    if (arg == "--jobs") {
      o.jobs = std::max(1, std::stoi(next()));
    } else if (arg == "--cli") {
      o.cli = std::filesystem::absolute(next()).string();
    } else if (arg == "--work") {
      o.work = next();
    } else if (arg == "--expect-fail") {
      std::stringstream s(next());
      for (std::string id; std::getline(s, id, ',');) o.expect_fail.insert(std::stoi(id));
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown argument " + arg);
    }
  }
  if (!o.cli.empty() && o.work.empty()) {
    o.work = (std::filesystem::temp_directory_path() / "pclab_acceptance").string();
  }
  return o;
}

int Main(int argc, char** argv) {
  const Options o = ParseArgs(argc, argv);
  const AxiomSystem lifted = CnfToAxioms(GenerateBopLifted(3, 2), Basis::kFourier);
  std::vector<AxiomSystem> cycles;
  for (int n = 5; n <= 8; ++n) cycles.push_back(GenerateCycleTseitin(n));

  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"upper bound (PCR, BOP lifted)", [] { return UpperBound(); }},
      {"LOP resolution refutation", [] { return LopRefutation(); }},
      {"lifted resolution refutation", [] { return LiftedRefutation(); }},
      {"split suite", nullptr},
      {"qdeg to deg", nullptr},
      {"clustering bound", [&] { return ClusteringBound(o.jobs); }},
      {"residue properties", [] { return ResidueProperties(); }},
      {"operator R", [&] { return OperatorR(o.jobs); }},
      {"unsatisfiability oracle", [] { return Unsatisfiability(); }},
      {"Fourier Tseitin refutation", [] { return FourierTseitin(); }},
      {"determinism", [&] { return Determinism(o); }},
  };
  std::vector<CorpusEntry> corpus;
  criteria[3].second = [&] {
    if (corpus.empty()) corpus = BuildCorpus(lifted, cycles, 1000);
    return SplitSuite(corpus, o.jobs);
  };
  criteria[4].second = [&] {
    if (corpus.empty()) corpus = BuildCorpus(lifted, cycles, 1000);
    return QdegToDegSuite(corpus, o.jobs);
  };

  int unexpected = 0, passed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    const auto start = Clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    passed += v.pass;
    const bool expected = o.expect_fail.contains(id);
    if (!v.pass && !expected) ++unexpected;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[k].first
              << ": " << v.detail << " (" << Fmt("%.2f", Since(start)) << " s)"
              << (!v.pass && expected ? " [known failure]" : "") << std::endl;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed" << std::endl;
  return unexpected == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pclab

int main(int argc, char** argv) {
  try {
    return pclab::Main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 2;
  }
}
