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


// pclab: generate ordering-principle formulas, build and check PC/PCR and
// Resolution refutations, transform proofs and run the residue checks.

#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "pclab/errors.h"
#include "pclab/parallel.h"

namespace {

using pclab::cli::RunConfig;

// n and ell may be given positionally after the family as well as by flag.
void AddShape(CLI::App* sub, RunConfig& config) {
  sub->add_option("n", config.n, "Number of vertices (or cycle length)");
  sub->add_option("ell", config.ell, "Gadget size");
}

int Run(int argc, char** argv) {
  RunConfig config;
  config.jobs = pclab::DefaultJobs();
  bool no_timing = false;

  CLI::App app{"Polynomial calculus laboratory for ordering principles", "pclab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", config.n, "Number of vertices")->envname("PCLAB_N");
  app.add_option("--ell", config.ell, "Gadget size")->envname("PCLAB_ELL");
  app.add_option("--basis", config.basis, "boolean or fourier")
      ->envname("PCLAB_BASIS")
      ->check(CLI::IsMember({"boolean", "fourier"}));
  app.add_option("--field", config.field, "Odd prime modulus")->envname("PCLAB_FIELD");
  app.add_option("--seed", config.seed, "Master seed")->envname("PCLAB_SEED");
  app.add_option("--out", config.out, "Output file ('-' or omitted: stdout)")
      ->envname("PCLAB_OUT");
  app.add_option("--jobs", config.jobs, "Worker threads")
      ->envname("PCLAB_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "Omit wall-clock columns")
      ->envname("PCLAB_NO_TIMING");

  pclab::cli::GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a formula as DIMACS or axioms");
  gen_cmd->add_option("family", gen.family,
                      "lop | bop | bop-lifted | bop-lifted-diagonal | tseitin-cycle")
      ->required();
  AddShape(gen_cmd, config);
  gen_cmd->add_flag("--axioms", gen.axioms, "Write the polynomial translation");

  std::string refute_family;
  CLI::App* refute_cmd = app.add_subcommand("refute", "Build an explicit refutation");
  refute_cmd->add_option("family", refute_family,
                         "lop | bop | bop-lifted | pcr-upper | tseitin-cycle")
      ->required();
  AddShape(refute_cmd, config);

  pclab::cli::DeriveArgs derive;
  CLI::App* derive_cmd =
      app.add_subcommand("derive", "Seeded random derivation from a family's axioms");
  derive_cmd->add_option("family", derive.family, "Formula family")->required();
  AddShape(derive_cmd, config);
  derive_cmd->add_option("--steps", derive.steps, "Derivation steps");
  derive_cmd->add_option("--extra", derive.extra_vars,
                         "Variables outside the axioms that steps may multiply by");

  pclab::cli::CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "Check a proof file");
  check_cmd->add_option("proof", check.proof, "Proof file ('-' for stdin)")
      ->default_val("-");
  check_cmd->add_option("--axioms", check.axioms,
                        "Axiom or CNF file (default: the proof header)");
  check_cmd->add_flag("--streaming", check.streaming, "Keep only referenced lines");
  check_cmd->add_flag("--derivation", check.derivation,
                      "Accept valid derivations that are not refutations");

  pclab::cli::TransformArgs transform;
  CLI::App* transform_cmd = app.add_subcommand("transform", "Transform a proof");
  transform_cmd->add_option("kind", transform.kind,
                            "split | qdeg2deg | restrict | cluster | res2pcr")
      ->required()
      ->check(CLI::IsMember({"split", "qdeg2deg", "restrict", "cluster", "res2pcr"}));
  transform_cmd->add_option("input", transform.input, "Proof file ('-' for stdin)")
      ->required();
  transform_cmd->add_option("argument", transform.argument,
                            "Split variable or restriction file");
  transform_cmd->add_option("--axioms", transform.axioms,
                            "Axiom or CNF file (default: the proof header)");
  transform_cmd->add_option("--map", transform.map_in, "Cluster map to apply");
  transform_cmd->add_option("--map-out", transform.map_out, "Write the cluster map");

  pclab::cli::VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-lemmas", "Exhaustive residue-operator checks");
  AddShape(verify_cmd, config);
  verify_cmd->add_option("which", verify.which,
                         "all | rop | rop-cond2 | rdrop | rdrop2 | rtech | residue");
  verify_cmd->add_option("--samples", verify.samples, "Samples for rop-cond2");
  verify_cmd->add_option("--pairs", verify.pairs, "Random pairs for residue");
  verify_cmd->add_option("--max-degree", verify.max_degree, "Term degree bound");

  pclab::cli::ExperimentArgs experiment;
  CLI::App* experiment_cmd =
      app.add_subcommand("experiment", "Scaling sweep written as CSV");
  experiment_cmd->add_option("family", experiment.family,
                             "lop | bop | bop-lifted | pcr-upper | tseitin-cycle")
      ->required();
  experiment_cmd->add_option("grid", experiment.grid, "Axes like n=4..12 ell=1,2");

  pclab::cli::DemoArgs demo;
  CLI::App* demo_cmd = app.add_subcommand(
      "demo", "Heavy-term restriction, Split, qdeg2deg and clustering on a random proof");
  AddShape(demo_cmd, config);
  demo_cmd->add_option("--steps", demo.steps, "Derivation steps");
  demo_cmd->add_option("--rounds", demo.rounds, "Heavy-vertex rounds");
  demo_cmd->add_option("--threshold", demo.threshold,
                       "Strongly touched vertices that make a term heavy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? pclab::cli::kExitOk : pclab::cli::kExitUsage;
  }
  config.timing = !no_timing;

  if (gen_cmd->parsed()) return pclab::cli::RunGen(config, gen);
  if (refute_cmd->parsed()) return pclab::cli::RunRefute(config, refute_family);
  if (derive_cmd->parsed()) return pclab::cli::RunDerive(config, derive);
  if (check_cmd->parsed()) return pclab::cli::RunCheck(config, check);
  if (transform_cmd->parsed()) return pclab::cli::RunTransform(config, transform);
  if (verify_cmd->parsed()) return pclab::cli::RunVerifyLemmas(config, verify);
  if (experiment_cmd->parsed()) return pclab::cli::RunExperiment(config, experiment);
  if (demo_cmd->parsed()) return pclab::cli::RunDemo(config, demo);
  return pclab::cli::kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const pclab::Error& e) {
    std::cerr << "pclab: " << e.what() << '\n';
    switch (e.code()) {
      case pclab::ErrorCode::kScaleLimit:
        return pclab::cli::kExitScale;
      case pclab::ErrorCode::kStructural:
        return pclab::cli::kExitInvalid;
      default:
        return pclab::cli::kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "pclab: internal error: " << e.what() << '\n';
    return pclab::cli::kExitInvalid;
  }
}
