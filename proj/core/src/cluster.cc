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
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "pclab/errors.h"
#include "pclab/parallel.h"
#include "pclab/random.h"
#include "pclab/transforms.h"
#include "text_util.h"

namespace pclab {
namespace {

using internal::ParseInt;
using internal::SplitWs;
using internal::Trim;

void RequireFourier(Basis basis) {
  if (basis != Basis::kFourier) {
    throw Error(ErrorCode::kInvalidArgument,
                "clustering is defined over the Fourier basis");
  }
}

void RequireEven(int ell) {
  if (ell <= 0 || ell % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "clustering needs a positive even ell, got " + std::to_string(ell));
  }
}

// Pairs consecutive entries of a uniformly shuffled 1..ell.
std::vector<int> DrawPairing(Rng& rng, int ell) {
  std::vector<int> order(ell);
  for (int l = 0; l < ell; ++l) order[l] = l + 1;
  rng.Shuffle(order);
  std::vector<int> pairing(ell);
  for (int k = 0; k < ell; ++k) pairing[order[k] - 1] = k / 2 + 1;
  return pairing;
}

}  // namespace

void ClusterMap::SetPairing(int i, int j, std::vector<int> pairing) {
  RequireEven(ell_);
  if (static_cast<int>(pairing.size()) != ell_) {
    throw Error(ErrorCode::kInvalidArgument, "pairing must cover 1..ell");
  }
  std::vector<int> uses(ell_ / 2 + 1, 0);
  for (int p : pairing) {
    if (p < 1 || p > ell_ / 2 || ++uses[p] > 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pairing of (" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not a perfect matching");
    }
  }
  pairings_[{i, j}] = std::move(pairing);
}

VarId ClusterMap::Image(VarId v) const {
  if (!v.IsEdge() || v.gadget() < 1) return v;
  auto it = pairings_.find({v.from(), v.to()});
  if (it == pairings_.end() || v.gadget() > ell_) return v;
  const VarId z = VarId::Cluster(v.from(), v.to(), it->second[v.gadget() - 1]);
  return v.negated() ? z.Twin() : z;
}

ClusterMap RandomPairing(int n, int ell, uint64_t seed) {
  RequireEven(ell);
  ClusterMap map(ell);
  Rng rng(seed);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) map.SetPairing(i, j, DrawPairing(rng, ell));
    }
  }
  return map;
}

TermProduct Cluster(const Term& t, const ClusterMap& map) {
  TermProduct out;
  for (const VarId& v : t.vars()) {
    TermProduct step = MulTermByVar(out.term, map.Image(v), Basis::kFourier);
    out.term = std::move(step.term);
    out.sign *= step.sign;
  }
  return out;
}

Polynomial Cluster(const Polynomial& p, const ClusterMap& map) {
  RequireFourier(p.basis());
  const PrimeField& f = p.field();
  std::vector<Monomial> monomials;
  monomials.reserve(p.monomials().size());
  for (const Monomial& m : p.monomials()) {
    TermProduct image = Cluster(m.term, map);
    monomials.push_back(
        {std::move(image.term), image.sign < 0 ? f.Neg(m.coef) : m.coef});
  }
  return Polynomial::FromMonomials(p.basis(), f, std::move(monomials));
}

AxiomSystem Cluster(const AxiomSystem& axioms, const ClusterMap& map) {
  RequireFourier(axioms.basis);
  AxiomSystem out = axioms;
  out.ell = map.ell() / 2;
  for (Polynomial& p : out.axioms) p = Cluster(p, map);
  for (VarId& v : out.universe) v = map.Image(v);
  std::sort(out.universe.begin(), out.universe.end());
  out.universe.erase(std::unique(out.universe.begin(), out.universe.end()),
                     out.universe.end());
  return out;
}

PcProof Cluster(const PcProof& proof, const ClusterMap& map) {
  RequireFourier(proof.basis);
  PcProof out = proof;
  for (Step& s : out.steps) {
    if (s.kind != StepKind::kAxiom) s.var = map.Image(s.var);
  }
  return out;
}

void WriteClusterMap(std::ostream& out, const ClusterMap& map) {
  out << "clustermap ell=" << map.ell() << "\n";
  for (const auto& [key, pairing] : map.pairings()) {
    for (int p = 1; p <= map.ell() / 2; ++p) {
      std::vector<int> members;
      for (int l = 0; l < map.ell(); ++l) {
        if (pairing[l] == p) members.push_back(l + 1);
      }
      out << "pair " << key.first << " " << key.second << " " << members[0]
          << " " << members[1] << " -> " << p << "\n";
    }
  }
}

ClusterMap ReadClusterMap(std::istream& in) {
  std::string line;
  int ell = -1;
  std::map<std::pair<int, int>, std::vector<int>> pairings;
  while (std::getline(in, line)) {
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::vector<std::string_view> words = SplitWs(text);
    if (words[0] == "clustermap") {
      for (size_t k = 1; k < words.size(); ++k) {
        if (words[k].starts_with("ell=")) {
          ell = ParseInt<int>(words[k].substr(4), "ell");
        }
      }
      if (ell < 0) throw Error(ErrorCode::kParse, "cluster map header lacks ell");
      continue;
    }
    if (ell < 0) throw Error(ErrorCode::kParse, "missing cluster map header");
    if (words.size() != 7 || words[0] != "pair" || words[5] != "->") {
      throw Error(ErrorCode::kParse, "bad cluster map line: " + std::string(text));
    }
    const int i = ParseInt<int>(words[1], "vertex");
    const int j = ParseInt<int>(words[2], "vertex");
    const int l1 = ParseInt<int>(words[3], "gadget index");
    const int l2 = ParseInt<int>(words[4], "gadget index");
    const int p = ParseInt<int>(words[6], "cluster index");
    std::vector<int>& pairing = pairings[{i, j}];
    pairing.resize(ell, 0);
    for (int l : {l1, l2}) {
      if (l < 1 || l > ell || pairing[l - 1] != 0) {
        throw Error(ErrorCode::kParse, "bad gadget index in: " + std::string(text));
      }
      pairing[l - 1] = p;
    }
  }
  if (ell < 0) throw Error(ErrorCode::kParse, "empty cluster map");
  ClusterMap map(ell);
  for (auto& [key, pairing] : pairings) {
    try {
      map.SetPairing(key.first, key.second, std::move(pairing));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
  }
  return map;
}

double ClusterRetentionFrequency(int ell, int degree, int trials, uint64_t seed,
                                 int jobs) {
  RequireEven(ell);
  if (degree < 0 || degree > ell || trials <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad retention experiment size");
  }
  std::vector<char> kept(trials, 0);
  ParallelFor(trials, jobs, [&](size_t k) {
    Rng rng(DeriveSeed(seed, "cluster-trial", k));
    const std::vector<int> pairing = DrawPairing(rng, ell);
    // The term is x_1 ... x_degree; it keeps every variable iff no pair lies
    // inside it.
    std::vector<char> seen(ell / 2 + 1, 0);
    bool ok = true;
    for (int l = 0; l < degree && ok; ++l) {
      ok = !seen[pairing[l]];
      seen[pairing[l]] = 1;
    }
    kept[k] = ok;
  });
  const auto hits = std::count(kept.begin(), kept.end(), 1);
  return static_cast<double>(hits) / trials;
}

}  // namespace pclab
