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


#include "pclab/degree_lab.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "pclab/errors.h"
#include "pclab/parallel.h"
#include "pclab/proofs.h"
#include "pclab/random.h"

namespace pclab {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool IsSubset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string VertexSet(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t k = 0; k < v.size(); ++k) {
    out += (k ? "," : "") + std::to_string(v[k]);
  }
  return out + "}";
}

// Records outcomes of independent cases; keeps the lowest-index failure so
// reports do not depend on scheduling.
class CaseLog {
 public:
  explicit CaseLog(size_t count) : failures_(count) {}

  void Fail(size_t k, std::string what) { failures_[k] = std::move(what); }

  void Fill(LemmaReport& r) const {
    for (const std::string& f : failures_) {
      if (f.empty()) continue;
      if (r.counterexamples++ == 0) r.first_counterexample = f;
    }
  }

 private:
  std::vector<std::string> failures_;
};

LemmaReport NewReport(const char* lemma, int n, int ell) {
  LemmaReport r;
  r.lemma = lemma;
  r.n = n;
  r.ell = ell;
  return r;
}

}  // namespace

bool MaskGrlexLess(uint32_t a, uint32_t b) {
  const int da = std::popcount(a);
  const int db = std::popcount(b);
  if (da != db) return da < db;
  if (a == b) return false;
  return (b & std::bit_floor(a ^ b)) != 0;
}

SpanBasis::SpanBasis(std::span<const Polynomial> generators,
                     std::vector<VarId> universe, const PrimeField& field)
    : field_(field), universe_(std::move(universe)) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()),
                  universe_.end());
  if (universe_.size() > static_cast<size_t>(kMaxVariables)) {
    throw Error(ErrorCode::kScaleLimit,
                "span basis limited to " + std::to_string(kMaxVariables) +
                    " variables, got " + std::to_string(universe_.size()));
  }
  std::set<VarId> mentioned;
  for (const Polynomial& g : generators) {
    if (g.basis() != Basis::kBoolean || !(g.field() == field_)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "span basis needs Boolean generators over the given field");
    }
    for (const VarId& v : g.Variables()) {
      if (v.negated()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "span basis works over base variables, got " + v.ToString());
      }
      if (!std::binary_search(universe_.begin(), universe_.end(), v)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "generator variable outside universe: " + v.ToString());
      }
      mentioned.insert(v);
    }
  }
  constrained_.assign(mentioned.begin(), mentioned.end());
  const int k = static_cast<int>(constrained_.size());
  PointEvaluator eval(generators, constrained_);
  for (uint32_t point = 0; point < (uint32_t{1} << k); ++point) {
    if (eval.AllVanish(point)) zeros_.push_back(point);
  }
  const size_t z = zeros_.size();
  if (z == 0) return;
  std::vector<uint32_t> monomials(size_t{1} << k);
  std::iota(monomials.begin(), monomials.end(), 0u);
  std::sort(monomials.begin(), monomials.end(), MaskGrlexLess);
  // Column echelon form of the evaluation matrix, smallest monomials first.
  std::vector<std::vector<FieldElement>> echelon;
  std::vector<size_t> pivot_row;
  for (uint32_t m : monomials) {
    if (standard_.size() == z) break;
    std::vector<FieldElement> col(z);
    for (size_t a = 0; a < z; ++a) {
      col[a] = FieldElement((zeros_[a] & m) == m ? 1 : 0);
    }
    for (size_t r = 0; r < echelon.size(); ++r) {
      const FieldElement c = col[pivot_row[r]];
      if (c.IsZero()) continue;
      for (size_t a = 0; a < z; ++a) {
        col[a] = field_.Sub(col[a], field_.Mul(c, echelon[r][a]));
      }
    }
    size_t pivot = 0;
    while (pivot < z && col[pivot].IsZero()) ++pivot;
    if (pivot == z) continue;
    const FieldElement inv = field_.Inv(col[pivot]);
    for (FieldElement& c : col) c = field_.Mul(c, inv);
    echelon.push_back(std::move(col));
    pivot_row.push_back(pivot);
    standard_.push_back(m);
  }
  // Invert the square evaluation matrix E[a][r] = [standard_r divides zero_a]
  // by Gauss-Jordan; inverse_ = E^-1 so that coefficients = E^-1 * values.
  std::vector<std::vector<FieldElement>> e(z, std::vector<FieldElement>(2 * z));
  for (size_t a = 0; a < z; ++a) {
    for (size_t r = 0; r < z; ++r) {
      e[a][r] = FieldElement((zeros_[a] & standard_[r]) == standard_[r] ? 1 : 0);
    }
    e[a][z + a] = field_.One();
  }
  for (size_t c = 0; c < z; ++c) {
    size_t p = c;
    while (e[p][c].IsZero()) ++p;  // E is invertible
    std::swap(e[p], e[c]);
    const FieldElement inv = field_.Inv(e[c][c]);
    for (FieldElement& x : e[c]) x = field_.Mul(x, inv);
    for (size_t a = 0; a < z; ++a) {
      if (a == c || e[a][c].IsZero()) continue;
      const FieldElement f = e[a][c];
      for (size_t col = c; col < 2 * z; ++col) {
        e[a][col] = field_.Sub(e[a][col], field_.Mul(f, e[c][col]));
      }
    }
  }
  inverse_.assign(z, std::vector<FieldElement>(z));
  for (size_t r = 0; r < z; ++r) {
    for (size_t a = 0; a < z; ++a) inverse_[r][a] = e[r][z + a];
  }
}

std::vector<FieldElement> SpanBasis::NormalForm(uint32_t mask) const {
  const size_t z = zeros_.size();
  std::vector<FieldElement> out(z);
  for (size_t r = 0; r < z; ++r) {
    FieldElement acc;
    for (size_t a = 0; a < z; ++a) {
      if ((zeros_[a] & mask) == mask) acc = field_.Add(acc, inverse_[r][a]);
    }
    out[r] = acc;
  }
  return out;
}

Term SpanBasis::LocalTerm(uint32_t mask) const {
  std::vector<VarId> vars;
  for (size_t k = 0; k < constrained_.size(); ++k) {
    if ((mask >> k) & 1) vars.push_back(constrained_[k]);
  }
  return Term::FromSorted(std::move(vars));
}

Polynomial SpanBasis::Reduce(const Polynomial& p) const {
  if (p.basis() != Basis::kBoolean || !(p.field() == field_)) {
    throw Error(ErrorCode::kInvalidArgument, "reduce needs a Boolean polynomial");
  }
  std::unordered_map<VarId, int, VarIdHash> position;
  for (size_t k = 0; k < constrained_.size(); ++k) {
    position.emplace(constrained_[k], static_cast<int>(k));
  }
  std::vector<Monomial> out;
  for (const Monomial& m : p.monomials()) {
    uint32_t mask = 0;
    std::vector<VarId> free;
    for (const VarId& v : m.term.vars()) {
      if (v.negated() || !std::binary_search(universe_.begin(), universe_.end(), v)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "variable outside span universe: " + v.ToString());
      }
      auto it = position.find(v);
      if (it == position.end()) {
        free.push_back(v);
      } else {
        mask |= uint32_t{1} << it->second;
      }
    }
    if (zeros_.empty()) continue;
    const std::vector<FieldElement> coef = NormalForm(mask);
    for (size_t r = 0; r < coef.size(); ++r) {
      if (coef[r].IsZero()) continue;
      std::vector<VarId> vars = LocalTerm(standard_[r]).vars();
      vars.insert(vars.end(), free.begin(), free.end());
      out.push_back({Term(std::move(vars)), field_.Mul(coef[r], m.coef)});
    }
  }
  return Polynomial::FromMonomials(Basis::kBoolean, field_, std::move(out));
}

std::vector<Polynomial> SpanBasis::Elements() const {
  std::vector<Polynomial> out;
  const size_t u = universe_.size();
  for (uint32_t mask = 0; mask < (uint32_t{1} << u); ++mask) {
    std::vector<VarId> vars;
    for (size_t k = 0; k < u; ++k) {
      if ((mask >> k) & 1) vars.push_back(universe_[k]);
    }
    const Polynomial m = Polynomial::FromTerm(
        Basis::kBoolean, field_, Term::FromSorted(std::move(vars)), field_.One());
    Polynomial element = Sub(m, Reduce(m));
    if (!element.IsZero()) out.push_back(std::move(element));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return CompareGrlex(b.LeadingTerm(), a.LeadingTerm()) < 0;
  });
  return out;
}

Polynomial Residue(const Polynomial& p, std::span<const Polynomial> family) {
  std::set<VarId> vars;
  for (const VarId& v : p.Variables()) vars.insert(v);
  for (const Polynomial& f : family) {
    for (const VarId& v : f.Variables()) vars.insert(v);
  }
  return SpanBasis(family, {vars.begin(), vars.end()}, p.field()).Reduce(p);
}

ResidueOracle::ResidueOracle(int n, int ell, const PrimeField& field)
    : n_(n),
      ell_(ell),
      axioms_(CnfToAxioms(GenerateBopLifted(n, ell), Basis::kBoolean, field,
                          BooleanEncoding::kTwinFree)) {}

std::vector<int> ResidueOracle::Tau(const Term& t) const {
  return Touched(t, n_, ell_).tau;
}

SpanBasis ResidueOracle::Uncached(const std::vector<int>& vertices) const {
  std::vector<Polynomial> family;
  for (size_t k = 0; k < axioms_.axioms.size(); ++k) {
    const ClauseGroup& g = axioms_.groups[k];
    const bool keep =
        g.kind == GroupKind::kOrdering ||
        (g.kind == GroupKind::kVertex &&
         std::binary_search(vertices.begin(), vertices.end(), g.vertex));
    if (keep) family.push_back(axioms_.axioms[k]);
  }
  return SpanBasis(family, axioms_.universe, axioms_.field);
}

std::shared_ptr<const SpanBasis> ResidueOracle::BasisFor(
    std::vector<int> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(vertices);
    if (it != cache_.end()) return it->second;
  }
  // Built outside the lock; a racing builder produces the same basis and
  // the first insertion wins.
  auto basis = std::make_shared<const SpanBasis>(Uncached(vertices));
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.try_emplace(vertices, std::move(basis)).first->second;
}

size_t ResidueOracle::cached_bases() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

Polynomial ResidueOracle::Residue(const Polynomial& p,
                                  std::vector<int> vertices) const {
  return BasisFor(std::move(vertices))->Reduce(p);
}

Polynomial ResidueOracle::Residue(const Term& t, std::vector<int> vertices) const {
  const PrimeField& f = axioms_.field;
  return Residue(Polynomial::FromTerm(Basis::kBoolean, f, t, f.One()),
                 std::move(vertices));
}

Polynomial ResidueOracle::R(const Term& t) const { return Residue(t, Tau(t)); }

Polynomial ResidueOracle::R(const Polynomial& p) const {
  const PrimeField& f = axioms_.field;
  Polynomial out(Basis::kBoolean, f);
  for (const Monomial& m : p.monomials()) {
    out = Add(out, Scale(m.coef, R(m.term)));
  }
  return out;
}

std::vector<Term> EnumerateTerms(const std::vector<VarId>& universe,
                                 int max_degree) {
  std::vector<Term> out;
  std::vector<VarId> current;
  auto rec = [&](auto&& self, size_t start) -> void {
    out.push_back(Term(current));
    if (static_cast<int>(current.size()) == max_degree) return;
    for (size_t k = start; k < universe.size(); ++k) {
      current.push_back(universe[k]);
      self(self, k + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), GrlexLess());
  return out;
}

LemmaReport VerifyRdrop(const ResidueOracle& oracle, int max_degree, int jobs) {
  const auto start = Clock::now();
  LemmaReport r = NewReport("rdrop", oracle.n(), oracle.ell());
  const std::vector<Term> terms = EnumerateTerms(oracle.universe(), max_degree);
  const std::vector<VarId>& vars = oracle.universe();
  CaseLog log(terms.size());
  std::vector<uint64_t> cases(terms.size(), 0);
  ParallelFor(terms.size(), jobs, [&](size_t k) {
    const Term& t = terms[k];
    const std::vector<int> tau = oracle.Tau(t);
    const Polynomial base = oracle.Residue(t, tau);
    for (const VarId& w : vars) {
      const Term wt = MulTermByVar(t, w, Basis::kBoolean).term;
      const std::vector<int> tau_wt = oracle.Tau(wt);
      if (static_cast<int>(tau_wt.size()) >= oracle.n()) continue;
      ++cases[k];
      if (!(oracle.Residue(t, tau_wt) == base)) {
        log.Fail(k, "t=" + t.ToString() + " w=" + w.ToString());
        return;
      }
    }
  });
  r.cases = std::accumulate(cases.begin(), cases.end(), uint64_t{0});
  log.Fill(r);
  r.seconds = SecondsSince(start);
  return r;
}

LemmaReport VerifyRdrop2(const ResidueOracle& oracle, int max_degree, int jobs) {
  const auto start = Clock::now();
  LemmaReport r = NewReport("rdrop2", oracle.n(), oracle.ell());
  const std::vector<Term> terms = EnumerateTerms(oracle.universe(), max_degree);
  const int n = oracle.n();
  CaseLog log(terms.size());
  std::vector<uint64_t> cases(terms.size(), 0);
  ParallelFor(terms.size(), jobs, [&](size_t k) {
    const Term& t = terms[k];
    const std::vector<int> tau = oracle.Tau(t);
    if (static_cast<int>(tau.size()) >= n) return;
    const Polynomial base = oracle.Residue(t, tau);
    for (uint32_t set = 0; set < (uint32_t{1} << n); ++set) {
      if (std::popcount(set) >= n) continue;
      std::vector<int> vertices;
      for (int v = 1; v <= n; ++v) {
        if ((set >> (v - 1)) & 1) vertices.push_back(v);
      }
      if (!IsSubset(tau, vertices)) continue;
      ++cases[k];
      if (!(oracle.Residue(t, vertices) == base)) {
        log.Fail(k, "t=" + t.ToString() + " I=" + VertexSet(vertices));
        return;
      }
    }
  });
  r.cases = std::accumulate(cases.begin(), cases.end(), uint64_t{0});
  log.Fill(r);
  r.seconds = SecondsSince(start);
  return r;
}

LemmaReport VerifyRtech(const ResidueOracle& oracle, int max_degree, int jobs) {
  const auto start = Clock::now();
  LemmaReport r = NewReport("rtech", oracle.n(), oracle.ell());
  const std::vector<Term> terms = EnumerateTerms(oracle.universe(), max_degree);
  CaseLog log(terms.size());
  ParallelFor(terms.size(), jobs, [&](size_t k) {
    const Term& t = terms[k];
    const std::vector<int> tau = oracle.Tau(t);
    const Polynomial image = oracle.R(t);
    for (const Monomial& m : image.monomials()) {
      if (!IsSubset(oracle.Tau(m.term), tau)) {
        log.Fail(k, "t=" + t.ToString() + " t'=" + m.term.ToString());
        return;
      }
    }
  });
  r.cases = terms.size();
  log.Fill(r);
  r.seconds = SecondsSince(start);
  return r;
}

LemmaReport VerifyRopCondition2(const ResidueOracle& oracle, int samples,
                                uint64_t seed, int jobs) {
  const auto start = Clock::now();
  LemmaReport r = NewReport("rop-condition-2", oracle.n(), oracle.ell());
  const std::vector<VarId>& vars = oracle.universe();
  const PrimeField& f = oracle.axioms().field;
  const int n = oracle.n();
  CaseLog log(samples);
  ParallelFor(samples, jobs, [&](size_t k) {
    Rng rng(DeriveSeed(seed, "rop-sample", k));
    // Redraw until every term of wP touches fewer than n vertices.
    for (int attempt = 0;; ++attempt) {
      if (attempt == 1000) {
        log.Fail(k, "no admissible sample after 1000 draws");
        return;
      }
      std::vector<Monomial> ms;
      const int terms = static_cast<int>(rng.Range(0, 5));
      for (int c = 0; c < terms; ++c) {
        std::vector<VarId> pool = vars;
        rng.Shuffle(pool);
        pool.resize(rng.Range(0, 3));
        ms.push_back({Term(std::move(pool)), FieldElement(rng.Range(1, f.prime() - 1))});
      }
      const Polynomial p =
          Polynomial::FromMonomials(Basis::kBoolean, f, std::move(ms));
      const VarId w = vars[rng.Below(vars.size())];
      bool admissible = true;
      for (const Monomial& m : p.monomials()) {
        const Term wt = MulTermByVar(m.term, w, Basis::kBoolean).term;
        admissible = admissible && static_cast<int>(oracle.Tau(wt).size()) < n;
      }
      if (!admissible) continue;
      const Polynomial lhs = oracle.R(MulVar(p, w));
      const Polynomial rhs = oracle.R(MulVar(oracle.R(p), w));
      if (!(lhs == rhs)) {
        log.Fail(k, "P=" + FormatPolynomial(p) + " w=" + w.ToString());
      }
      return;
    }
  });
  r.cases = samples;
  log.Fill(r);
  r.seconds = SecondsSince(start);
  return r;
}

LemmaReport VerifyRopAxioms(const ResidueOracle& oracle) {
  const auto start = Clock::now();
  LemmaReport r = NewReport("rop-axioms", oracle.n(), oracle.ell());
  const AxiomSystem& axioms = oracle.axioms();
  for (size_t k = 0; k < axioms.axioms.size(); ++k) {
    ++r.cases;
    if (!oracle.R(axioms.axioms[k]).IsZero() && r.counterexamples++ == 0) {
      r.first_counterexample = "R(A) != 0 for axiom " + std::to_string(k + 1);
    }
  }
  ++r.cases;
  const Polynomial one = Polynomial::Constant(Basis::kBoolean, axioms.field, 1);
  if (!(oracle.R(one) == one) && r.counterexamples++ == 0) {
    r.first_counterexample = "R(1) != 1";
  }
  r.seconds = SecondsSince(start);
  return r;
}

LemmaReport VerifyResidueProperties(const std::vector<Polynomial>& generators,
                                    const std::vector<VarId>& universe,
                                    int pairs, uint64_t seed,
                                    int exhaustive_degree,
                                    const PrimeField& field) {
  const auto start = Clock::now();
  LemmaReport r = NewReport("residue-properties", 0, 0);
  const SpanBasis span(generators, universe, field);
  const std::vector<VarId>& vars = span.universe();
  auto fail = [&r](const std::string& what) {
    if (r.counterexamples++ == 0) r.first_counterexample = what;
  };
  auto check = [&](const Polynomial& p, const Polynomial& q, Rng& rng) {
    ++r.cases;
    const Polynomial rp = span.Reduce(p);
    const Polynomial rq = span.Reduce(q);
    const std::string tag = "P=" + FormatPolynomial(p) + " Q=" + FormatPolynomial(q);
    if (CompareSupport(rp, p) > 0) fail("item 1: " + tag);
    // Item 2: Q' = P + sum g_k f_k with random multipliers.
    Polynomial shifted = p;
    for (const Polynomial& g : generators) {
      if (rng.Coin()) {
        std::vector<VarId> pool = vars;
        rng.Shuffle(pool);
        pool.resize(rng.Range(0, std::min<int64_t>(2, pool.size())));
        shifted = Add(shifted, Scale(FieldElement(rng.Range(1, field.prime() - 1)),
                                     MulTerm(g, Term(std::move(pool)))));
      }
    }
    if (!(span.Reduce(shifted) == rp)) fail("item 2: " + tag);
    const FieldElement a(rng.Range(0, field.prime() - 1));
    const FieldElement b(rng.Range(0, field.prime() - 1));
    const Polynomial lin = span.Reduce(Add(Scale(a, p), Scale(b, q)));
    if (!(lin == Add(Scale(a, rp), Scale(b, rq)))) fail("item 3: " + tag);
    if (!(span.Reduce(Mul(p, q)) == span.Reduce(Mul(p, rq)))) fail("item 4: " + tag);
  };
  Rng rng(DeriveSeed(seed, "residue-properties"));
  auto random_poly = [&]() {
    std::vector<Monomial> ms;
    const int terms = static_cast<int>(rng.Range(0, 5));
    for (int c = 0; c < terms; ++c) {
      std::vector<VarId> pool = vars;
      rng.Shuffle(pool);
      pool.resize(rng.Range(0, std::min<int64_t>(3, pool.size())));
      ms.push_back({Term(std::move(pool)), FieldElement(rng.Range(1, field.prime() - 1))});
    }
    return Polynomial::FromMonomials(Basis::kBoolean, field, std::move(ms));
  };
  for (int k = 0; k < pairs; ++k) {
    const Polynomial p = random_poly();
    const Polynomial q = random_poly();
    check(p, q, rng);
  }
  const std::vector<Term> terms = EnumerateTerms(vars, exhaustive_degree);
  for (const Term& s : terms) {
    for (const Term& t : terms) {
      check(Polynomial::FromTerm(Basis::kBoolean, field, s, field.One()),
            Polynomial::FromTerm(Basis::kBoolean, field, t, field.One()), rng);
    }
  }
  r.seconds = SecondsSince(start);
  return r;
}

}  // namespace pclab
