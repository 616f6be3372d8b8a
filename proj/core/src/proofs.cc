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


#include "pclab/proofs.h"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pclab/errors.h"
#include "pclab/random.h"

namespace pclab {
namespace {

std::string LineName(int k) { return "L" + std::to_string(k + 1); }

void CheckCompatible(const PcProof& proof, const AxiomSystem& axioms) {
  if (proof.basis != axioms.basis) {
    throw Error(ErrorCode::kStructural, "proof basis " + BasisName(proof.basis) +
                                            " differs from axiom basis " +
                                            BasisName(axioms.basis));
  }
  if (!(proof.field == axioms.field)) {
    throw Error(ErrorCode::kStructural, "proof field differs from axiom field");
  }
}

// Applies one step against earlier lines. Returns the polynomial, or sets
// *error and returns nullopt.
template <typename LineFn>
std::optional<Polynomial> ApplyStep(const Step& step, int k,
                                    const AxiomSystem& axioms, LineFn&& line,
                                    std::string* error) {
  auto ref_ok = [&](int r) {
    if (r < 0 || r >= k) {
      *error = LineName(k) + " references " +
               (r < 0 ? std::string("an invalid line") : LineName(r)) +
               " which does not precede it";
      return false;
    }
    return true;
  };
  switch (step.kind) {
    case StepKind::kAxiom:
      if (step.axiom < 0 || step.axiom >= static_cast<int>(axioms.axioms.size())) {
        *error = LineName(k) + " uses axiom " + std::to_string(step.axiom + 1) +
                 " of " + std::to_string(axioms.axioms.size());
        return std::nullopt;
      }
      return axioms.axioms[step.axiom];
    case StepKind::kSquare:
      return Polynomial(axioms.basis, axioms.field);
    case StepKind::kTwin:
      return TwinAxiom(step.var, axioms.basis, axioms.field);
    case StepKind::kLinComb:
      if (!ref_ok(step.lhs) || !ref_ok(step.rhs)) return std::nullopt;
      return LinearCombination(step.alpha, line(step.lhs), step.beta,
                               line(step.rhs));
    case StepKind::kMulVar:
      if (!ref_ok(step.lhs)) return std::nullopt;
      return MulVar(line(step.lhs), step.var);
  }
  *error = "unknown step kind";
  return std::nullopt;
}

}  // namespace

Polynomial TwinAxiom(VarId v, Basis basis, const PrimeField& field) {
  const VarId x = v.Base();
  std::vector<Monomial> ms;
  if (basis == Basis::kBoolean) {
    ms = {{Term({x}), field.One()},
          {Term({x.Twin()}), field.One()},
          {Term(), field.FromInt(-1)}};
  } else {
    ms = {{Term({x, x.Twin()}), field.One()}, {Term(), field.One()}};
  }
  return Polynomial::FromMonomials(basis, field, std::move(ms));
}

PcReport CheckPcProof(const PcProof& proof, const AxiomSystem& axioms,
                      const CheckOptions& options) {
  CheckCompatible(proof, axioms);
  const int count = static_cast<int>(proof.steps.size());
  PcReport report;
  report.lines = count;
  std::vector<int> last_use;
  if (options.streaming) {
    last_use.assign(count, -1);
    for (int k = 0; k < count; ++k) {
      const Step& s = proof.steps[k];
      for (int r : {s.lhs, s.rhs}) {
        if (r >= 0 && r < k) last_use[r] = std::max(last_use[r], k);
      }
    }
    if (count > 0) last_use[count - 1] = count;
  }
  std::vector<std::optional<Polynomial>> lines(count);
  auto line = [&](int r) -> const Polynomial& { return *lines[r]; };
  for (int k = 0; k < count; ++k) {
    std::string error;
    std::optional<Polynomial> p = ApplyStep(proof.steps[k], k, axioms, line, &error);
    if (!p) {
      report.first_bad_line = k;
      report.message = error;
      return report;
    }
    report.size += p->monomial_count();
    report.degree = std::max(report.degree, p->Degree());
    lines[k] = std::move(p);
    if (options.streaming) {
      const Step& s = proof.steps[k];
      for (int r : {s.lhs, s.rhs}) {
        if (r >= 0 && last_use[r] == k) lines[r].reset();
      }
      if (last_use[k] < 0) lines[k].reset();
    }
  }
  report.refutation = count > 0 && lines[count - 1] && lines[count - 1]->IsOne();
  if (options.require_refutation && !report.refutation) {
    report.first_bad_line = std::max(count - 1, 0);
    report.message = count == 0 ? "empty proof" : "final line is not 1";
    return report;
  }
  report.valid = true;
  return report;
}

std::vector<Polynomial> MaterializeLines(const PcProof& proof,
                                         const AxiomSystem& axioms) {
  CheckCompatible(proof, axioms);
  std::vector<Polynomial> lines;
  lines.reserve(proof.steps.size());
  auto line = [&](int r) -> const Polynomial& { return lines[r]; };
  for (int k = 0; k < static_cast<int>(proof.steps.size()); ++k) {
    std::string error;
    std::optional<Polynomial> p = ApplyStep(proof.steps[k], k, axioms, line, &error);
    if (!p) throw Error(ErrorCode::kStructural, error);
    lines.push_back(std::move(*p));
  }
  return lines;
}

ProofBuilder::ProofBuilder(const AxiomSystem& axioms) : axioms_(axioms) {}

int ProofBuilder::Push(Step step, Polynomial poly) {
  if (poly.IsZero()) return kZeroLine;
  steps_.push_back(step);
  lines_.push_back(std::move(poly));
  return size() - 1;
}

int ProofBuilder::Axiom(int index) {
  if (index < 0 || index >= static_cast<int>(axioms_.axioms.size())) {
    throw Error(ErrorCode::kStructural, "axiom index out of range");
  }
  return Push(Step::Axiom(index), axioms_.axioms[index]);
}

int ProofBuilder::Twin(VarId v) {
  return Push(Step::Twin(v), TwinAxiom(v, axioms_.basis, axioms_.field));
}

int ProofBuilder::LinComb(FieldElement alpha, int a, FieldElement beta, int b) {
  if (alpha.IsZero()) a = kZeroLine;
  if (beta.IsZero()) b = kZeroLine;
  if (a == kZeroLine && b == kZeroLine) return kZeroLine;
  if (b == kZeroLine) {
    if (alpha == axioms_.field.One()) return a;
    return Push(Step::LinComb(alpha, a, axioms_.field.Zero(), a),
                Scale(alpha, lines_[a]));
  }
  if (a == kZeroLine) {
    if (beta == axioms_.field.One()) return b;
    return Push(Step::LinComb(beta, b, axioms_.field.Zero(), b),
                Scale(beta, lines_[b]));
  }
  return Push(Step::LinComb(alpha, a, beta, b),
              LinearCombination(alpha, lines_[a], beta, lines_[b]));
}

int ProofBuilder::MulVar(VarId v, int a) {
  if (a == kZeroLine) return kZeroLine;
  return Push(Step::MulVar(v, a), pclab::MulVar(lines_[a], v));
}

int ProofBuilder::MulTerm(const Term& t, int a) {
  for (const VarId& v : t.vars()) a = MulVar(v, a);
  return a;
}

int ProofBuilder::Copy(int a) {
  if (a == kZeroLine) return kZeroLine;
  const PrimeField& f = axioms_.field;
  return Push(Step::LinComb(f.One(), a, f.Zero(), a), lines_[a]);
}

PcProof ProofBuilder::Finish(std::optional<int> final_line,
                             std::vector<int>* renumbering) const {
  const int count = size();
  std::vector<char> keep(count, final_line ? 0 : 1);
  if (final_line) {
    if (*final_line < 0 || *final_line >= count) {
      throw Error(ErrorCode::kStructural, "final line out of range");
    }
    keep[*final_line] = 1;
    for (int k = *final_line; k >= 0; --k) {
      if (!keep[k]) continue;
      const Step& s = steps_[k];
      if (s.kind == StepKind::kLinComb) {
        // Zero-coefficient operands are referenced too.
        keep[s.lhs] = keep[s.rhs] = 1;
      } else if (s.kind == StepKind::kMulVar) {
        keep[s.lhs] = 1;
      }
    }
  }
  std::vector<int> map(count, -1);
  PcProof out;
  out.basis = axioms_.basis;
  out.field = axioms_.field;
  for (int k = 0; k < count; ++k) {
    if (!keep[k]) continue;
    Step s = steps_[k];
    if (s.lhs >= 0) s.lhs = map[s.lhs];
    if (s.rhs >= 0) s.rhs = map[s.rhs];
    map[k] = static_cast<int>(out.steps.size());
    out.steps.push_back(s);
  }
  if (final_line && map[*final_line] != static_cast<int>(out.steps.size()) - 1) {
    // Lines after the final one in builder order were dropped, so the final
    // line is always last; this guards the invariant.
    throw Error(ErrorCode::kStructural, "final line is not last after pruning");
  }
  if (renumbering) *renumbering = std::move(map);
  return out;
}

std::optional<Clause> Resolve(const Clause& a, const Clause& b, VarId pivot) {
  const Literal pos{pivot, true};
  const Literal neg{pivot, false};
  const Clause* p = nullptr;
  const Clause* n = nullptr;
  if (a.Contains(pos) && b.Contains(neg)) {
    p = &a;
    n = &b;
  } else if (a.Contains(neg) && b.Contains(pos)) {
    p = &b;
    n = &a;
  } else {
    return std::nullopt;
  }
  std::vector<Literal> lits = p->Without(pos).literals();
  const Clause rest = n->Without(neg);
  lits.insert(lits.end(), rest.literals().begin(), rest.literals().end());
  try {
    return Clause(std::move(lits));
  } catch (const Error&) {
    return std::nullopt;
  }
}

namespace {

template <typename Sink>
ResReport RunResolution(const ResolutionProof& proof, const Cnf& cnf,
                        bool require_refutation, Sink&& sink) {
  ResReport report;
  std::vector<Clause> lines;
  lines.reserve(proof.steps.size());
  const int count = static_cast<int>(proof.steps.size());
  report.lines = count;
  auto fail = [&](int k, std::string message) {
    report.first_bad_line = k;
    report.message = std::move(message);
    return report;
  };
  for (int k = 0; k < count; ++k) {
    const ResStep& s = proof.steps[k];
    if (s.kind == ResKind::kInput) {
      if (s.clause < 0 || s.clause >= static_cast<int>(cnf.clauses.size())) {
        return fail(k, LineName(k) + " uses missing clause " +
                           std::to_string(s.clause + 1));
      }
      lines.push_back(cnf.clauses[s.clause]);
    } else {
      if (s.lhs < 0 || s.lhs >= k || s.rhs < 0 || s.rhs >= k) {
        return fail(k, LineName(k) + " references a line that does not precede it");
      }
      std::optional<Clause> r = Resolve(lines[s.lhs], lines[s.rhs], s.pivot);
      if (!r) {
        return fail(k, LineName(k) + ": " + s.pivot.ToString() +
                           " is not a complementary pivot of " + LineName(s.lhs) +
                           " and " + LineName(s.rhs) +
                           " (or the resolvent is tautological)");
      }
      ++report.resolutions;
      report.max_negative = std::max(report.max_negative, r->NegativeCount());
      lines.push_back(std::move(*r));
    }
    report.max_width = std::max(report.max_width, lines.back().width());
  }
  report.refutation = count > 0 && lines.back().empty();
  if (require_refutation && !report.refutation) {
    return fail(std::max(count - 1, 0),
                count == 0 ? "empty proof" : "final clause is not empty");
  }
  report.valid = true;
  sink(std::move(lines));
  return report;
}

}  // namespace

ResReport CheckResolution(const ResolutionProof& proof, const Cnf& cnf,
                          bool require_refutation) {
  return RunResolution(proof, cnf, require_refutation, [](auto&&) {});
}

std::vector<Clause> MaterializeClauses(const ResolutionProof& proof,
                                       const Cnf& cnf) {
  std::vector<Clause> out;
  ResReport r = RunResolution(proof, cnf, false,
                              [&](std::vector<Clause> lines) { out = std::move(lines); });
  if (!r.valid) throw Error(ErrorCode::kStructural, r.message);
  return out;
}

bool TermPairLess::operator()(const TermPair& a, const TermPair& b) const {
  if (auto c = CompareGrlex(a.first, b.first); c != 0) return c < 0;
  return CompareGrlex(a.second, b.second) < 0;
}

namespace {

void RequireFourier(const std::vector<Polynomial>& lines) {
  for (const Polynomial& p : lines) {
    if (p.basis() != Basis::kFourier) {
      throw Error(ErrorCode::kInvalidArgument,
                  "quadratic terms are defined over the Fourier basis only");
    }
  }
}

}  // namespace

std::set<TermPair, TermPairLess> QuadraticPairs(
    const std::vector<Polynomial>& lines) {
  RequireFourier(lines);
  std::set<TermPair, TermPairLess> pairs;
  for (const Polynomial& p : lines) {
    const auto& ms = p.monomials();
    for (size_t a = 0; a < ms.size(); ++a) {
      for (size_t b = a; b < ms.size(); ++b) {
        // Stored with the smaller term first.
        pairs.emplace(ms[a].term, ms[b].term);
      }
    }
  }
  return pairs;
}

TermSet QuadraticTerms(const std::vector<Polynomial>& lines) {
  RequireFourier(lines);
  TermSet out;
  for (const Polynomial& p : lines) {
    const auto& ms = p.monomials();
    for (size_t a = 0; a < ms.size(); ++a) {
      for (size_t b = a; b < ms.size(); ++b) {
        out.insert(MulTerms(ms[a].term, ms[b].term, Basis::kFourier));
      }
    }
  }
  return out;
}

TermSet QuadraticTermsFromPairs(const std::set<TermPair, TermPairLess>& pairs) {
  TermSet out;
  for (const auto& [a, b] : pairs) out.insert(MulTerms(a, b, Basis::kFourier));
  return out;
}

TermSet QuadraticTermsWith(const TermSet& qt, VarId x) {
  TermSet out;
  for (const Term& t : qt) {
    if (t.Contains(x)) out.insert(t);
  }
  return out;
}

int QuadraticDegree(const std::vector<Polynomial>& lines) {
  RequireFourier(lines);
  int best = 0;
  for (const Polynomial& p : lines) {
    const auto& ms = p.monomials();
    for (size_t a = 0; a < ms.size(); ++a) {
      // Degree of a symmetric difference: |A| + |B| - 2|A and B|.
      for (size_t b = a + 1; b < ms.size(); ++b) {
        const auto& x = ms[a].term.vars();
        const auto& y = ms[b].term.vars();
        if (static_cast<int>(x.size() + y.size()) <= best) continue;
        size_t common = 0;
        auto i = x.begin();
        auto j = y.begin();
        while (i != x.end() && j != y.end()) {
          if (*i == *j) {
            ++common;
            ++i;
            ++j;
          } else if (*i < *j) {
            ++i;
          } else {
            ++j;
          }
        }
        best = std::max(best, static_cast<int>(x.size() + y.size() - 2 * common));
      }
    }
  }
  return best;
}

int MaxDegree(const std::vector<Polynomial>& lines) {
  int d = 0;
  for (const Polynomial& p : lines) d = std::max(d, p.Degree());
  return d;
}

TouchReport Touched(const Term& t, int n, int ell) {
  std::vector<char> strong(n + 1, 0), light(n + 1, 0);
  // Gadget copies present per ordered pair, split by variable kind.
  std::map<std::tuple<int, int, int>, std::set<int>> copies;
  auto check_vertex = [&](int v) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }
  };
  for (const VarId& raw : t.vars()) {
    const VarId v = raw.Base();
    switch (v.kind()) {
      case VarKind::kPointer:
        check_vertex(v.vertex());
        strong[v.vertex()] = 1;
        break;
      case VarKind::kEdge:
      case VarKind::kCluster: {
        check_vertex(v.from());
        check_vertex(v.to());
        strong[v.to()] = 1;
        const int kind = v.IsEdge() ? 0 : 1;
        copies[{v.from(), v.to(), kind}].insert(v.gadget());
        break;
      }
      case VarKind::kPlain:
        throw Error(ErrorCode::kInvalidArgument,
                    "touched vertices undefined for " + v.ToString());
    }
  }
  for (const auto& [key, gadgets] : copies) {
    const int from = std::get<0>(key);
    bool full = gadgets.contains(0);
    if (!full && ell >= 1) {
      full = true;
      for (int l = 1; l <= ell && full; ++l) full = gadgets.contains(l);
    }
    if (full) light[from] = 1;
  }
  TouchReport r;
  for (int v = 1; v <= n; ++v) {
    if (strong[v]) r.strong.push_back(v);
    if (light[v]) r.light.push_back(v);
    if (strong[v] || light[v]) r.tau.push_back(v);
  }
  return r;
}

int SpecialDegree(const std::vector<Polynomial>& lines, int n, int ell) {
  int best = 0;
  for (const Polynomial& p : lines) {
    for (const Monomial& m : p.monomials()) {
      best = std::max(best, static_cast<int>(Touched(m.term, n, ell).tau.size()));
    }
  }
  return best;
}

PcProof RandomDerivation(const AxiomSystem& axioms,
                         const RandomDerivationOptions& options, uint64_t seed) {
  Rng rng(seed);
  std::vector<VarId> pool = axioms.universe;
  for (const VarId& v : options.extra_vars) pool.push_back(v);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "random derivation needs variables");
  }
  const PrimeField& f = axioms.field;
  std::vector<Step> steps;
  std::vector<Polynomial> lines;
  for (int a = 0; a < static_cast<int>(axioms.axioms.size()); ++a) {
    steps.push_back(Step::Axiom(a));
    lines.push_back(axioms.axioms[a]);
  }
  auto small_scalar = [&] {
    // Mostly small integers so proofs stay readable; occasionally any element.
    if (rng.Below(4) == 0) return FieldElement(1 + rng.Below(f.prime() - 1));
    return f.FromInt(rng.Range(-3, 3));
  };
  int attempts = 0;
  while (static_cast<int>(steps.size()) <
         static_cast<int>(axioms.axioms.size()) + options.steps) {
    if (++attempts > 100 * (options.steps + 1)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "random derivation could not respect its size caps");
    }
    const int k = static_cast<int>(lines.size());
    const uint64_t choice = rng.Below(10);
    Step step;
    Polynomial poly(axioms.basis, f);
    if (k == 0 || (choice == 0 && !options.twin_vars.empty())) {
      if (options.twin_vars.empty()) {
        step = Step::Square(pool[rng.Below(pool.size())]);
      } else {
        step = Step::Twin(options.twin_vars[rng.Below(options.twin_vars.size())]);
        poly = TwinAxiom(step.var, axioms.basis, f);
      }
    } else if (choice <= 4) {
      // Bias toward recent lines so derivations build on each other.
      const int a = static_cast<int>(k - 1 - rng.Below(std::min(k, 6)));
      step = Step::MulVar(pool[rng.Below(pool.size())], a);
      poly = MulVar(lines[a], step.var);
    } else {
      const int a = static_cast<int>(rng.Below(k));
      const int b = static_cast<int>(k - 1 - rng.Below(std::min(k, 6)));
      step = Step::LinComb(small_scalar(), a, small_scalar(), b);
      poly = LinearCombination(step.alpha, lines[a], step.beta, lines[b]);
    }
    if (poly.monomial_count() > options.max_monomials ||
        poly.Degree() > options.max_degree) {
      continue;
    }
    steps.push_back(step);
    lines.push_back(std::move(poly));
  }
  PcProof proof;
  proof.basis = axioms.basis;
  proof.field = f;
  proof.steps = std::move(steps);
  return proof;
}

PcProof WithDetours(const PcProof& proof, VarId x, int count, uint64_t seed) {
  if (proof.basis != Basis::kFourier) {
    throw Error(ErrorCode::kInvalidArgument, "detours need x^2 = 1");
  }
  const int n = static_cast<int>(proof.steps.size());
  if (n == 0 || count <= 0) return proof;
  Rng rng(seed);
  std::vector<char> detour(n, 0);
  for (int c = 0; c < count; ++c) detour[rng.Below(n)] = 1;
  PcProof out = proof;
  out.steps.clear();
  // Old line -> line that later steps should reference.
  std::vector<int> alias(n, -1);
  for (int k = 0; k < n; ++k) {
    Step s = proof.steps[k];
    if (s.lhs >= 0 && s.lhs < k) s.lhs = alias[s.lhs];
    if (s.rhs >= 0 && s.rhs < k) s.rhs = alias[s.rhs];
    out.steps.push_back(s);
    int current = static_cast<int>(out.steps.size()) - 1;
    if (detour[k] && k + 1 < n) {
      out.steps.push_back(Step::MulVar(x, current));
      out.steps.push_back(Step::MulVar(x, current + 1));
      current += 2;
    }
    alias[k] = current;
  }
  return out;
}

}  // namespace pclab
