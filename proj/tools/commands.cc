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


#include "commands.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include "pclab/constructions.h"
#include "pclab/degree_lab.h"
#include "pclab/errors.h"
#include "pclab/formulas.h"
#include "pclab/parallel.h"
#include "pclab/proofs.h"
#include "pclab/random.h"
#include "pclab/stats.h"
#include "pclab/transforms.h"

namespace pclab::cli {
namespace {

namespace fs = std::filesystem;

Error Usage(const std::string& message) {
  return Error(ErrorCode::kInvalidArgument, message);
}

int ParseInt(std::string_view text, std::string_view what) {
  try {
    size_t used = 0;
    const int v = std::stoi(std::string(text), &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Usage("bad " + std::string(what) + " '" + std::string(text) + "'");
}

// --- I/O ----------------------------------------------------------------

bool IsStdStream(const std::string& path) { return path.empty() || path == "-"; }

std::string ReadAll(const std::string& path) {
  std::ostringstream buffer;
  if (IsStdStream(path)) {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void WriteText(const std::string& path, const std::string& text) {
  if (IsStdStream(path)) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

template <typename Fn>
std::string Render(Fn&& fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

// Directory against which a file's relative references resolve.
fs::path BaseDir(const std::string& path) {
  if (IsStdStream(path)) return fs::path(".");
  const fs::path parent = fs::path(path).parent_path();
  return parent.empty() ? fs::path(".") : parent;
}

// Rewrites a reference relative to `from_file` so that it resolves from
// `to_file` instead. Generator specs pass through.
std::string Rebase(const std::string& ref, const std::string& from_file,
                   const std::string& to_file) {
  if (ref.empty() || ref.starts_with("gen:")) return ref;
  const fs::path target = fs::path(ref).is_absolute() ? fs::path(ref)
                                                      : BaseDir(from_file) / ref;
  return fs::relative(target, BaseDir(to_file)).lexically_normal().string();
}

// --- formula families ---------------------------------------------------

// Formula identified by generator parameters; serialized in proof headers as
// "gen:<family>:<n>:<ell>:<basis>" so that proofs can be re-checked without
// a separate axiom file.
struct Family {
  std::string name;
  int n = 0;
  int ell = 0;
  Basis basis = Basis::kBoolean;

  bool IsCnf() const { return name != "tseitin-cycle"; }

  std::string Spec() const {
    return "gen:" + name + ":" + std::to_string(n) + ":" + std::to_string(ell) +
           ":" + BasisName(basis);
  }

  Cnf MakeCnf() const {
    if (name == "lop") return GenerateLop(n);
    if (name == "bop") return GenerateBop(n);
    if (name == "bop-lifted") return GenerateBopLifted(n, ell);
    if (name == "bop-lifted-diagonal") {
      return GenerateBopLifted(n, ell, LiftMode::kDiagonal);
    }
    throw Usage("family " + name + " has no CNF form");
  }

  AxiomSystem MakeAxioms(const PrimeField& field) const {
    if (!IsCnf()) return GenerateCycleTseitin(n, field);
    return CnfToAxioms(MakeCnf(), basis, field);
  }
};

const std::vector<std::string>& FormulaFamilies() {
  static const std::vector<std::string> names = {
      "lop", "bop", "bop-lifted", "bop-lifted-diagonal", "tseitin-cycle"};
  return names;
}

bool IsLifted(const std::string& name) { return name.starts_with("bop-lifted"); }

Family MakeFamily(const std::string& name, const RunConfig& config) {
  if (std::find(FormulaFamilies().begin(), FormulaFamilies().end(), name) ==
      FormulaFamilies().end()) {
    throw Usage("unknown family '" + name + "'");
  }
  Family f;
  f.name = name;
  f.n = config.n;
  f.ell = IsLifted(name) ? config.ell : 0;
  if (f.n <= 0) throw Usage("family " + name + " needs n > 0");
  if (IsLifted(name) && f.ell <= 0) throw Usage("family " + name + " needs ell > 0");
  const Basis fallback = name == "tseitin-cycle" ? Basis::kFourier : Basis::kBoolean;
  f.basis = config.basis.empty() ? fallback : ParseBasis(config.basis);
  if (name == "tseitin-cycle" && f.basis != Basis::kFourier) {
    throw Usage("tseitin-cycle is defined over the Fourier basis only");
  }
  return f;
}

Family ParseSpec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream s(spec.substr(4));
  for (std::string part; std::getline(s, part, ':');) parts.push_back(part);
  if (parts.size() != 4) throw Error(ErrorCode::kParse, "bad generator spec " + spec);
  RunConfig config;
  config.n = ParseInt(parts[1], "n");
  config.ell = ParseInt(parts[2], "ell");
  config.basis = parts[3];
  return MakeFamily(parts[0], config);
}

Cnf LoadCnf(const std::string& ref, const std::string& relative_to) {
  if (ref.starts_with("gen:")) return ParseSpec(ref).MakeCnf();
  if (ref.empty()) throw Usage("no CNF given and none recorded in the proof");
  const fs::path path =
      fs::path(ref).is_absolute() ? fs::path(ref) : BaseDir(relative_to) / ref;
  std::istringstream dimacs(ReadAll(path.string()));
  std::istringstream names(ReadAll(path.string() + ".map"));
  return ReadCnf(dimacs, names);
}

AxiomSystem LoadAxioms(const std::string& ref, const std::string& relative_to,
                       Basis basis, const PrimeField& field) {
  if (ref.starts_with("gen:")) {
    Family f = ParseSpec(ref);
    if (f.IsCnf()) f.basis = basis;
    return f.MakeAxioms(field);
  }
  if (ref.empty()) throw Usage("no axioms given and none recorded in the proof");
  if (ref.ends_with(".cnf")) {
    return CnfToAxioms(LoadCnf(ref, relative_to), basis, field);
  }
  const fs::path path =
      fs::path(ref).is_absolute() ? fs::path(ref) : BaseDir(relative_to) / ref;
  std::istringstream in(ReadAll(path.string()));
  return ReadAxioms(in);
}

bool IsPcProof(const std::string& text) { return text.starts_with("pcproof"); }

// --- measurements -------------------------------------------------------

struct Measurement {
  bool valid = false;
  uint64_t lines = 0;
  uint64_t size = 0;
  int degree = 0;
  std::optional<int> qdeg;
  double seconds = 0;
};

Measurement MeasurePc(const PcProof& proof, const AxiomSystem& axioms) {
  const PcReport r = CheckPcProof(proof, axioms);
  Measurement m;
  m.valid = r.valid;
  m.lines = r.lines;
  m.size = r.size;
  m.degree = r.degree;
  if (r.valid && proof.basis == Basis::kFourier) {
    m.qdeg = QuadraticDegree(MaterializeLines(proof, axioms));
  }
  return m;
}

// Each clause is a single monomial in the PCR translation, so the monomial
// size of a Resolution proof is its line count.
Measurement MeasureResolution(const ResolutionProof& proof, const Cnf& cnf) {
  const ResReport r = CheckResolution(proof, cnf);
  Measurement m;
  m.valid = r.valid;
  m.lines = r.lines;
  m.size = r.lines;
  m.degree = r.max_width;
  return m;
}

// A refutation from one of the constructions, rendered as a proof file.
struct Refutation {
  std::string text;
  Measurement measurement;
};

Refutation BuildRefutation(const std::string& family, int n, int ell,
                           const PrimeField& field) {
  Refutation out;
  const auto start = std::chrono::steady_clock::now();
  RunConfig config;
  config.n = n;
  config.ell = ell;
  if (family == "lop" || family == "bop" || family == "bop-lifted") {
    const Family f = MakeFamily(family, config);
    const Cnf cnf = f.MakeCnf();
    ResolutionProof proof = family == "lop"   ? LopResolutionRefutation(n)
                            : family == "bop" ? BopResolutionRefutation(n)
                                              : LiftedRefutation(n, ell);
    proof.cnf_path = f.Spec();
    out.measurement = MeasureResolution(proof, cnf);
    out.text = Render([&](std::ostream& s) { WriteResolutionProof(s, proof); });
  } else if (family == "pcr-upper") {
    const Family f = MakeFamily("bop-lifted", config);
    PcProof proof = PcrUpperBound(n, ell, field);
    proof.axioms_path = f.Spec();
    out.measurement = MeasurePc(proof, f.MakeAxioms(field));
    out.text = Render([&](std::ostream& s) { WritePcProof(s, proof); });
  } else if (family == "tseitin-cycle") {
    const Family f = MakeFamily(family, config);
    PcProof proof = TseitinFourierRefutation(n, field);
    proof.axioms_path = f.Spec();
    out.measurement = MeasurePc(proof, f.MakeAxioms(field));
    out.text = Render([&](std::ostream& s) { WritePcProof(s, proof); });
  } else {
    throw Usage("no refutation construction for '" + family + "'");
  }
  out.measurement.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string FormatSeconds(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", seconds);
  return buf;
}

void PrintPcReport(const PcReport& r) {
  std::cout << "kind=pc valid=" << r.valid << " refutation=" << r.refutation
            << " lines=" << r.lines << " size=" << r.size << " degree=" << r.degree
            << '\n';
  if (!r.valid) {
    std::cout << "first_bad_line=" << r.first_bad_line + 1 << " message=" << r.message
              << '\n';
  }
}

void PrintResReport(const ResReport& r) {
  std::cout << "kind=resolution valid=" << r.valid << " refutation=" << r.refutation
            << " lines=" << r.lines << " resolutions=" << r.resolutions
            << " max_width=" << r.max_width << " max_negative=" << r.max_negative
            << '\n';
  if (!r.valid) {
    std::cout << "first_bad_line=" << r.first_bad_line + 1 << " message=" << r.message
              << '\n';
  }
}

std::vector<VarId> ParseVars(const std::vector<std::string>& names) {
  std::vector<VarId> vars;
  for (const std::string& name : names) vars.push_back(VarId::Parse(name));
  return vars;
}

std::string AxiomsSidecar(const std::string& out) {
  if (IsStdStream(out)) {
    throw Usage("this transform changes the axioms; --out is required");
  }
  return out + ".ax";
}

}  // namespace

// --- verbs --------------------------------------------------------------

int RunGen(const RunConfig& config, const GenArgs& args) {
  const Family f = MakeFamily(args.family, config);
  const PrimeField field(config.field);
  if (args.axioms || !f.IsCnf()) {
    const AxiomSystem sys = f.MakeAxioms(field);
    WriteText(config.out, Render([&](std::ostream& s) { WriteAxioms(s, sys); }));
    std::cerr << "gen: " << f.name << " axioms=" << sys.axioms.size()
              << " variables=" << sys.universe.size() << '\n';
    return kExitOk;
  }
  const Cnf cnf = f.MakeCnf();
  WriteText(config.out, Render([&](std::ostream& s) { WriteDimacs(s, cnf); }));
  if (!IsStdStream(config.out)) {
    WriteText(config.out + ".map", Render([&](std::ostream& s) { WriteNameMap(s, cnf); }));
  }
  std::cerr << "gen: " << f.name << " clauses=" << cnf.clauses.size()
            << " variables=" << cnf.universe.size() << '\n';
  return kExitOk;
}

int RunRefute(const RunConfig& config, const std::string& family) {
  const int ell = family == "pcr-upper" || family == "bop-lifted" ? config.ell : 0;
  const Refutation r = BuildRefutation(family, config.n, ell, PrimeField(config.field));
  if (!r.measurement.valid) {
    std::cerr << "refute: construction failed to check\n";
    return kExitInvalid;
  }
  WriteText(config.out, r.text);
  std::cerr << "refute: " << family << " n=" << config.n << " ell=" << ell
            << " lines=" << r.measurement.lines << " size=" << r.measurement.size
            << " degree=" << r.measurement.degree;
  if (config.timing) std::cerr << " seconds=" << FormatSeconds(r.measurement.seconds);
  std::cerr << '\n';
  return kExitOk;
}

int RunDerive(const RunConfig& config, const DeriveArgs& args) {
  RunConfig fourier = config;
  if (fourier.basis.empty()) fourier.basis = "fourier";
  const Family f = MakeFamily(args.family, fourier);
  const AxiomSystem sys = f.MakeAxioms(PrimeField(config.field));
  RandomDerivationOptions options;
  options.steps = args.steps;
  options.extra_vars = ParseVars(args.extra_vars);
  PcProof proof = RandomDerivation(sys, options, DeriveSeed(config.seed, "derive"));
  proof.axioms_path = f.Spec();
  WriteText(config.out, Render([&](std::ostream& s) { WritePcProof(s, proof); }));
  return kExitOk;
}

int RunCheck(const RunConfig& config, const CheckArgs& args) {
  (void)config;
  const std::string text = ReadAll(args.proof);
  std::istringstream in(text);
  if (IsPcProof(text)) {
    const PcProof proof = ReadPcProof(in);
    const bool own = !args.axioms.empty();
    const AxiomSystem sys =
        LoadAxioms(own ? args.axioms : proof.axioms_path, own ? "" : args.proof,
                   proof.basis, proof.field);
    CheckOptions options;
    options.streaming = args.streaming;
    options.require_refutation = !args.derivation;
    const PcReport r = CheckPcProof(proof, sys, options);
    PrintPcReport(r);
    return r.valid ? kExitOk : kExitInvalid;
  }
  const ResolutionProof proof = ReadResolutionProof(in);
  const bool own = !args.axioms.empty();
  const Cnf cnf = LoadCnf(own ? args.axioms : proof.cnf_path, own ? "" : args.proof);
  const ResReport r = CheckResolution(proof, cnf, !args.derivation);
  PrintResReport(r);
  return r.valid ? kExitOk : kExitInvalid;
}

int RunTransform(const RunConfig& config, const TransformArgs& args) {
  const std::string text = ReadAll(args.input);
  std::istringstream in(text);
  const bool own = !args.axioms.empty();
  const std::string axioms_ref = own ? args.axioms : "";
  const std::string relative_to = own ? "" : args.input;

  if (args.kind == "res2pcr") {
    if (IsPcProof(text)) throw Usage("res2pcr expects a Resolution proof");
    const ResolutionProof proof = ReadResolutionProof(in);
    const std::string ref = own ? axioms_ref : proof.cnf_path;
    const Cnf cnf = LoadCnf(ref, relative_to);
    const PrimeField field(config.field);
    PcProof out = ResToPcr(proof, cnf, field);
    out.axioms_path = Rebase(ref, relative_to, config.out);
    const PcReport r = CheckPcProof(out, CnfToAxioms(cnf, Basis::kBoolean, field));
    PrintPcReport(r);
    if (!r.valid) return kExitInvalid;
    WriteText(config.out, Render([&](std::ostream& s) { WritePcProof(s, out); }));
    return kExitOk;
  }

  if (!IsPcProof(text)) throw Usage(args.kind + " expects a PC proof");
  const PcProof proof = ReadPcProof(in);
  const std::string ref = own ? axioms_ref : proof.axioms_path;
  const AxiomSystem axioms = LoadAxioms(ref, relative_to, proof.basis, proof.field);
  CheckOptions derivation;
  derivation.require_refutation = false;
  const PcReport before = CheckPcProof(proof, axioms, derivation);
  if (!before.valid) {
    PrintPcReport(before);
    return kExitInvalid;
  }

  PcProof out;
  AxiomSystem out_axioms = axioms;
  std::string out_ref = Rebase(ref, relative_to, config.out);
  std::optional<std::string> sidecar;
  if (args.kind == "split") {
    if (args.argument.empty()) throw Usage("split needs a variable");
    out = Split(proof, axioms, VarId::Parse(args.argument));
  } else if (args.kind == "qdeg2deg") {
    const QdegToDegResult r = QdegToDeg(proof, axioms);
    std::cerr << "qdeg2deg: input_qdeg=" << r.input_qdeg
              << " axiom_degree=" << r.axiom_degree << " input_degree=" << r.input_degree
              << " output_degree=" << r.output_degree
              << " axiom_multiplication_degree=" << r.axiom_multiplication_degree
              << '\n';
    out = r.proof;
  } else if (args.kind == "restrict") {
    if (args.argument.empty()) throw Usage("restrict needs a restriction file");
    std::istringstream rho_in(ReadAll(args.argument));
    RestrictedProof r = Restrict(proof, axioms, ReadRestriction(rho_in));
    out = std::move(r.proof);
    out_axioms = std::move(r.axioms.system);
    sidecar = AxiomsSidecar(config.out);
  } else if (args.kind == "cluster") {
    ClusterMap map;
    if (!args.map_in.empty()) {
      std::istringstream map_in(ReadAll(args.map_in));
      map = ReadClusterMap(map_in);
    } else {
      map = RandomPairing(axioms.n, axioms.ell, DeriveSeed(config.seed, "cluster"));
    }
    if (!args.map_out.empty()) {
      WriteText(args.map_out, Render([&](std::ostream& s) { WriteClusterMap(s, map); }));
    }
    out = Cluster(proof, map);
    out_axioms = Cluster(axioms, map);
    sidecar = AxiomsSidecar(config.out);
  } else {
    throw Usage("unknown transform '" + args.kind + "'");
  }

  CheckOptions options;
  options.require_refutation = before.refutation;
  const PcReport after = CheckPcProof(out, out_axioms, options);
  PrintPcReport(after);
  if (!after.valid) return kExitInvalid;
  if (sidecar) {
    WriteText(*sidecar, Render([&](std::ostream& s) { WriteAxioms(s, out_axioms); }));
    out_ref = fs::path(*sidecar).filename().string();
  }
  out.axioms_path = out_ref;
  WriteText(config.out, Render([&](std::ostream& s) { WritePcProof(s, out); }));
  return kExitOk;
}

int RunVerifyLemmas(const RunConfig& config, const VerifyArgs& args) {
  static const std::vector<std::string> kAll = {"rop", "rop-cond2", "rdrop", "rdrop2",
                                                "rtech", "residue"};
  std::vector<std::string> which;
  if (args.which == "all") {
    which = kAll;
  } else if (std::find(kAll.begin(), kAll.end(), args.which) != kAll.end()) {
    which = {args.which};
  } else {
    throw Usage("unknown lemma '" + args.which + "'");
  }
  if (config.n < 2 || config.ell < 1) throw Usage("verify-lemmas needs n >= 2, ell >= 1");
  const PrimeField field(config.field);
  std::optional<ResidueOracle> oracle;
  std::vector<LemmaReport> reports;
  for (const std::string& lemma : which) {
    if (lemma != "residue" && !oracle) oracle.emplace(config.n, config.ell, field);
    if (lemma == "rop") reports.push_back(VerifyRopAxioms(*oracle));
    if (lemma == "rop-cond2") {
      reports.push_back(
          VerifyRopCondition2(*oracle, args.samples, config.seed, config.jobs));
    }
    if (lemma == "rdrop") {
      reports.push_back(VerifyRdrop(*oracle, args.max_degree, config.jobs));
    }
    if (lemma == "rdrop2") {
      reports.push_back(VerifyRdrop2(*oracle, args.max_degree, config.jobs));
    }
    if (lemma == "rtech") {
      reports.push_back(VerifyRtech(*oracle, args.max_degree, config.jobs));
    }
    if (lemma == "residue") {
      const AxiomSystem bop = CnfToAxioms(GenerateBop(config.n), Basis::kBoolean, field,
                                          BooleanEncoding::kTwinFree);
      LemmaReport r = VerifyResidueProperties(bop.axioms, bop.universe, args.pairs,
                                              config.seed, 2, field);
      r.n = config.n;
      reports.push_back(r);
    }
  }
  bool clean = true;
  for (const LemmaReport& r : reports) {
    std::cout << "lemma=" << r.lemma << " n=" << r.n << " ell=" << r.ell
              << " cases=" << r.cases << " counterexamples=" << r.counterexamples;
    if (config.timing) std::cout << " seconds=" << FormatSeconds(r.seconds);
    std::cout << '\n';
    if (r.counterexamples != 0) {
      std::cout << "first_counterexample=" << r.first_counterexample << '\n';
      clean = false;
    }
  }
  return clean ? kExitOk : kExitInvalid;
}

namespace {

// "name=a..b" or "name=a,b,c".
std::pair<std::string, std::vector<int>> ParseAxis(const std::string& token) {
  const size_t eq = token.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
    throw Usage("bad grid axis '" + token + "'");
  }
  const std::string name = token.substr(0, eq);
  const std::string body = token.substr(eq + 1);
  std::vector<int> values;
  if (const size_t dots = body.find(".."); dots != std::string::npos) {
    const int lo = ParseInt(body.substr(0, dots), name);
    const int hi = ParseInt(body.substr(dots + 2), name);
    if (lo > hi) throw Usage("empty range in '" + token + "'");
    for (int v = lo; v <= hi; ++v) values.push_back(v);
  } else {
    std::stringstream s(body);
    for (std::string part; std::getline(s, part, ',');) {
      values.push_back(ParseInt(part, name));
    }
  }
  for (int v : values) {
    if (v <= 0) throw Usage("grid values must be positive in '" + token + "'");
  }
  return {name, values};
}

}  // namespace

int RunExperiment(const RunConfig& config, const ExperimentArgs& args) {
  if (args.grid.empty()) throw Usage("empty grid");
  std::map<std::string, std::vector<int>> axes;
  for (const std::string& token : args.grid) {
    auto [name, values] = ParseAxis(token);
    if (name != "n" && name != "ell") throw Usage("unknown grid axis '" + name + "'");
    axes[name] = values;
  }
  if (!axes.contains("n")) throw Usage("grid needs an n axis");
  const bool uses_ell = args.family == "pcr-upper" || args.family == "bop-lifted";
  const std::vector<int> ells =
      uses_ell ? (axes.contains("ell") ? axes["ell"] : std::vector<int>{1})
               : std::vector<int>{0};
  struct Cell {
    int n;
    int ell;
  };
  std::vector<Cell> cells;
  for (int ell : ells) {
    for (int n : axes["n"]) cells.push_back({n, ell});
  }
  const PrimeField field(config.field);
  std::vector<Measurement> results(cells.size());
  std::vector<std::string> errors(cells.size());
  ParallelFor(cells.size(), config.jobs, [&](size_t k) {
    try {
      results[k] = BuildRefutation(args.family, cells[k].n, cells[k].ell, field).measurement;
    } catch (const Error& e) {
      errors[k] = e.what();
    }
  });
  for (const std::string& e : errors) {
    if (!e.empty()) throw Usage(e);
  }

  std::ostringstream csv;
  csv << "family,n,ell,clauses,proof_size_monomials,degree,qdeg,seconds\n";
  bool all_valid = true;
  for (size_t k = 0; k < cells.size(); ++k) {
    const Measurement& m = results[k];
    all_valid = all_valid && m.valid;
    csv << args.family << ',' << cells[k].n << ',' << cells[k].ell << ',' << m.lines
        << ',' << m.size << ',' << m.degree << ',';
    if (m.qdeg) csv << *m.qdeg;
    csv << ',';
    if (config.timing) csv << FormatSeconds(m.seconds);
    csv << '\n';
  }
  WriteText(config.out, csv.str());

  std::ostream& summary = IsStdStream(config.out) ? std::cerr : std::cout;
  for (int ell : ells) {
    std::vector<double> x, y;
    for (size_t k = 0; k < cells.size(); ++k) {
      if (cells[k].ell != ell) continue;
      x.push_back(cells[k].n);
      y.push_back(static_cast<double>(results[k].size));
    }
    if (x.size() < 2) continue;
    const PowerFit fit = FitLogLog(x, y);
    char line[160];
    std::snprintf(line, sizeof(line),
                  "slope family=%s ell=%d points=%zu slope=%.9f r2=%.9f\n",
                  args.family.c_str(), ell, x.size(), fit.slope, fit.r_squared);
    summary << line;
  }
  if (!all_valid) std::cerr << "experiment: some proofs failed to check\n";
  return all_valid ? kExitOk : kExitInvalid;
}

int RunDemo(const RunConfig& config, const DemoArgs& args) {
  const DemoReport r =
      RunDemoPipeline(config.n, config.ell, args.steps, args.rounds, args.threshold,
                      config.seed);
  for (size_t k = 0; k < r.rounds.size(); ++k) {
    const DemoRound& d = r.rounds[k];
    std::cout << "round=" << k + 1 << " vertex=" << d.vertex
              << " heavy=" << d.heavy_before << "->" << d.heavy_after
              << " lines=" << d.lines_before << "->" << d.lines_after
              << " skipped_splits=" << d.skipped_splits << " valid=" << d.valid << '\n';
  }
  std::cout << "qdeg=" << r.qdeg_before << "->" << r.qdeg_after
            << " degree_after_qdeg2deg=" << r.degree_after_qdeg
            << " special=" << r.special_before << "->" << r.special_after_cluster
            << " valid=" << r.all_valid << '\n';
  return r.all_valid ? kExitOk : kExitInvalid;
}

}  // namespace pclab::cli
