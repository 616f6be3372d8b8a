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


// Explicit upper-bound proofs for the ordering-principle families and a
// short Fourier refutation of the odd cycle parity formula.

#ifndef PCLAB_CONSTRUCTIONS_H_
#define PCLAB_CONSTRUCTIONS_H_

#include <vector>

#include "pclab/field.h"
#include "pclab/formulas.h"
#include "pclab/proofs.h"

namespace pclab {

// Refutes GenerateLop(n) by eliminating vertices n, n-1, ..., 2 from the
// clauses "j is not minimal among 1..m". Derived clauses have at most two
// negative literals. Throws kInvalidArgument if n < 2.
ResolutionProof LopResolutionRefutation(int n);

// Derivation of the LOP vertex clauses from GenerateBop(n): the pointer bits
// of j are resolved out of its 2^b clauses, lowest bit first. Not a
// refutation. `vertex_lines[j - 1]` receives the line of j's clause.
ResolutionProof BopToLopDerivation(int n,
                                   std::vector<int>* vertex_lines = nullptr);

// The composition of the two above, refuting GenerateBop(n).
ResolutionProof BopResolutionRefutation(int n);

// Refutes GenerateBopLifted(n, ell) by running the same scheme with every
// edge replaced by its ell gadget copies.
ResolutionProof LiftedRefutation(int n, int ell);

// ResToPcr(LiftedRefutation(n, ell)) against the Boolean translation of
// GenerateBopLifted(n, ell).
PcProof PcrUpperBound(int n, int ell, const PrimeField& field = PrimeField());

// Refutes GenerateCycleTseitin(n) in 3n lines of at most two monomials.
PcProof TseitinFourierRefutation(int n, const PrimeField& field = PrimeField());

}  // namespace pclab

#endif  // PCLAB_CONSTRUCTIONS_H_
