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
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pclab/errors.h"
#include "pclab/formulas.h"
#include "text_util.h"

namespace pclab {
namespace {

using internal::ParseInt;
using internal::SplitWs;
using internal::StartsWith;
using internal::Trim;

bool SkipLine(std::string_view line) {
  return line.empty() || line.front() == '#' || line.front() == 'c';
}

}  // namespace

void WriteDimacs(std::ostream& out, const Cnf& cnf) {
  std::unordered_map<VarId, int, VarIdHash> index;
  for (size_t k = 0; k < cnf.universe.size(); ++k) {
    index.emplace(cnf.universe[k], static_cast<int>(k) + 1);
  }
  out << "p cnf " << cnf.universe.size() << ' ' << cnf.clauses.size() << '\n';
  for (const Clause& c : cnf.clauses) {
    for (const Literal& lit : c.literals()) {
      auto it = index.find(lit.var);
      if (it == index.end()) {
        throw Error(ErrorCode::kStructural,
                    "clause variable outside universe: " + lit.var.ToString());
      }
      out << (lit.positive ? it->second : -it->second) << ' ';
    }
    out << "0\n";
  }
}

void WriteNameMap(std::ostream& out, const Cnf& cnf) {
  out << "n=" << cnf.n << " ell=" << cnf.ell << '\n';
  for (size_t k = 0; k < cnf.universe.size(); ++k) {
    out << "var " << k + 1 << " = " << cnf.universe[k].ToString() << '\n';
  }
  for (size_t c = 0; c < cnf.groups.size(); ++c) {
    if (cnf.groups[c].kind == GroupKind::kNone) continue;
    out << "group " << c + 1 << ' ' << cnf.groups[c].ToString() << '\n';
  }
}

Cnf ReadCnf(std::istream& dimacs, std::istream& name_map) {
  Cnf cnf;
  std::map<int, VarId> names;
  std::map<int, ClauseGroup> groups;
  std::string raw;
  while (std::getline(name_map, raw)) {
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> tok = SplitWs(line);
    if (tok[0] == "var") {
      if (tok.size() != 4 || tok[2] != "=") {
        throw Error(ErrorCode::kParse, "bad map line '" + raw + "'");
      }
      VarId v = VarId::Parse(tok[3]);
      if (v.negated()) {
        throw Error(ErrorCode::kParse, "map names a twin: '" + raw + "'");
      }
      names[ParseInt<int>(tok[1], "variable index")] = v;
    } else if (tok[0] == "group") {
      if (tok.size() != 3) {
        throw Error(ErrorCode::kParse, "bad group line '" + raw + "'");
      }
      groups[ParseInt<int>(tok[1], "clause index")] = ClauseGroup::Parse(tok[2]);
    } else {
      for (const auto& [k, v] : ParseKeyValues(line)) {
        if (k == "n") cnf.n = ParseInt<int>(v, "n");
        if (k == "ell") cnf.ell = ParseInt<int>(v, "ell");
      }
    }
  }
  int declared_vars = -1;
  int declared_clauses = -1;
  std::vector<Literal> pending;
  while (std::getline(dimacs, raw)) {
    std::string_view line = Trim(raw);
    if (SkipLine(line)) continue;
    if (StartsWith(line, "p ")) {
      std::vector<std::string_view> tok = SplitWs(line);
      if (tok.size() != 4 || tok[1] != "cnf") {
        throw Error(ErrorCode::kParse, "bad problem line '" + raw + "'");
      }
      declared_vars = ParseInt<int>(tok[2], "variable count");
      declared_clauses = ParseInt<int>(tok[3], "clause count");
      continue;
    }
    for (std::string_view tok : SplitWs(line)) {
      const int lit = ParseInt<int>(tok, "literal");
      if (lit == 0) {
        cnf.clauses.emplace_back(std::move(pending));
        pending.clear();
        continue;
      }
      const int var = lit < 0 ? -lit : lit;
      if (declared_vars >= 0 && var > declared_vars) {
        throw Error(ErrorCode::kParse, "literal beyond declared variable count");
      }
      auto it = names.find(var);
      if (it == names.end()) {
        throw Error(ErrorCode::kParse,
                    "variable " + std::to_string(var) + " has no name");
      }
      pending.push_back({it->second, lit > 0});
    }
  }
  if (!pending.empty()) {
    throw Error(ErrorCode::kParse, "unterminated final clause");
  }
  if (declared_clauses >= 0 &&
      declared_clauses != static_cast<int>(cnf.clauses.size())) {
    throw Error(ErrorCode::kParse, "clause count differs from problem line");
  }
  cnf.groups.assign(cnf.clauses.size(), ClauseGroup());
  for (const auto& [c, g] : groups) {
    if (c < 1 || c > static_cast<int>(cnf.clauses.size())) {
      throw Error(ErrorCode::kParse, "group for missing clause " + std::to_string(c));
    }
    cnf.groups[c - 1] = g;
  }
  for (const auto& [k, v] : names) cnf.universe.push_back(v);
  std::sort(cnf.universe.begin(), cnf.universe.end());
  return cnf;
}

void WriteAxioms(std::ostream& out, const AxiomSystem& system) {
  PolynomialHeader header{system.field, system.basis, {}};
  header.extra.emplace_back("n", std::to_string(system.n));
  header.extra.emplace_back("ell", std::to_string(system.ell));
  out << FormatHeader(header) << '\n';
  out << "vars";
  for (const VarId& v : system.universe) out << ' ' << v.ToString();
  out << '\n';
  ClauseGroup current;
  for (size_t k = 0; k < system.axioms.size(); ++k) {
    const ClauseGroup g =
        k < system.groups.size() ? system.groups[k] : ClauseGroup();
    if (!(g == current)) {
      out << "group " << g.ToString() << '\n';
      current = g;
    }
    out << FormatPolynomial(system.axioms[k]) << '\n';
  }
}

AxiomSystem ReadAxioms(std::istream& in) {
  AxiomSystem system;
  std::string raw;
  bool have_header = false;
  ClauseGroup current;
  while (std::getline(in, raw)) {
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      PolynomialHeader header = ParseHeader(line);
      system.field = header.field;
      system.basis = header.basis;
      for (const auto& [k, v] : header.extra) {
        if (k == "n") system.n = ParseInt<int>(v, "n");
        if (k == "ell") system.ell = ParseInt<int>(v, "ell");
      }
      have_header = true;
      continue;
    }
    if (StartsWith(line, "vars")) {
      std::vector<std::string_view> tok = SplitWs(line);
      for (size_t k = 1; k < tok.size(); ++k) {
        system.universe.push_back(VarId::Parse(tok[k]));
      }
      continue;
    }
    if (StartsWith(line, "group ")) {
      current = ClauseGroup::Parse(Trim(line.substr(6)));
      continue;
    }
    system.axioms.push_back(ParsePolynomial(line, system.basis, system.field));
    system.groups.push_back(current);
  }
  if (!have_header) throw Error(ErrorCode::kParse, "axiom file has no header");
  if (system.universe.empty()) {
    std::set<VarId> vars;
    for (const Polynomial& p : system.axioms) {
      for (const VarId& v : p.Variables()) vars.insert(v.Base());
    }
    system.universe.assign(vars.begin(), vars.end());
  }
  std::sort(system.universe.begin(), system.universe.end());
  return system;
}

}  // namespace pclab
