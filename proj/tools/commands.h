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


// Verb implementations behind the pclab command-line driver. Each returns a
// process exit code; library errors propagate as pclab::Error.

#ifndef PCLAB_TOOLS_COMMANDS_H_
#define PCLAB_TOOLS_COMMANDS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pclab/field.h"
#include "pclab/term.h"

namespace pclab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitScale = 3;

struct RunConfig {
  int n = 0;
  int ell = 0;
  std::string basis;  // empty: family default
  uint64_t field = PrimeField::kDefaultPrime;
  uint64_t seed = 1;
  std::string out;  // empty or "-": stdout
  int jobs = 1;
  bool timing = true;
};

struct GenArgs {
  std::string family;
  bool axioms = false;
};
int RunGen(const RunConfig& config, const GenArgs& args);

int RunRefute(const RunConfig& config, const std::string& family);

struct DeriveArgs {
  std::string family;
  int steps = 20;
  std::vector<std::string> extra_vars;
};
int RunDerive(const RunConfig& config, const DeriveArgs& args);

struct CheckArgs {
  std::string proof;
  std::string axioms;  // overrides the proof header
  bool streaming = false;
  bool derivation = false;  // accept proofs that do not end in 1
};
int RunCheck(const RunConfig& config, const CheckArgs& args);

struct TransformArgs {
  std::string kind;
  std::string input;
  std::string argument;  // split variable or restriction file
  std::string axioms;
  std::string map_in;
  std::string map_out;
};
int RunTransform(const RunConfig& config, const TransformArgs& args);

struct VerifyArgs {
  std::string which = "all";
  int samples = 500;
  int pairs = 200;
  int max_degree = 4;
};
int RunVerifyLemmas(const RunConfig& config, const VerifyArgs& args);

struct ExperimentArgs {
  std::string family;
  std::vector<std::string> grid;
};
int RunExperiment(const RunConfig& config, const ExperimentArgs& args);

struct DemoArgs {
  int steps = 12;
  int rounds = 2;
  int threshold = 1;
};
int RunDemo(const RunConfig& config, const DemoArgs& args);

}  // namespace pclab::cli

#endif  // PCLAB_TOOLS_COMMANDS_H_
