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


#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "pclab/errors.h"
#include "pclab/proofs.h"
#include "text_util.h"

namespace pclab {
namespace {

using internal::ParseInt;
using internal::SplitWs;
using internal::StartsWith;
using internal::Trim;

int ParseLineRef(std::string_view tok) {
  if (tok.size() < 2 || tok.front() != 'L') {
    throw Error(ErrorCode::kParse, "expected line reference, got '" +
                                       std::string(tok) + "'");
  }
  return ParseInt<int>(tok.substr(1), "line reference") - 1;
}

std::string Ref(int k) { return "L" + std::to_string(k + 1); }

// Reads non-comment lines; the first is returned through *header.
std::vector<std::string> ReadBody(std::istream& in, std::string* header) {
  std::vector<std::string> body;
  std::string raw;
  bool have_header = false;
  while (std::getline(in, raw)) {
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      *header = std::string(line);
      have_header = true;
    } else {
      body.emplace_back(line);
    }
  }
  if (!have_header) throw Error(ErrorCode::kParse, "proof file is empty");
  return body;
}

void CheckNumbering(std::string_view tok, size_t expected, const std::string& line) {
  if (ParseLineRef(tok) != static_cast<int>(expected)) {
    throw Error(ErrorCode::kParse, "lines must be numbered consecutively: '" +
                                       line + "'");
  }
}

}  // namespace

void WritePcProof(std::ostream& out, const PcProof& proof) {
  const PrimeField& f = proof.field;
  out << "pcproof v1 basis=" << BasisName(proof.basis) << " field=" << f.prime()
      << " axioms=" << proof.axioms_path << '\n';
  for (size_t k = 0; k < proof.steps.size(); ++k) {
    const Step& s = proof.steps[k];
    out << Ref(static_cast<int>(k)) << ' ';
    switch (s.kind) {
      case StepKind::kAxiom:
        out << "AX " << s.axiom + 1;
        break;
      case StepKind::kSquare:
        out << "SQ " << s.var.ToString();
        break;
      case StepKind::kTwin:
        out << "TW " << s.var.ToString();
        break;
      case StepKind::kLinComb:
        out << "LIN " << f.Format(s.alpha) << ' ' << Ref(s.lhs) << ' '
            << f.Format(s.beta) << ' ' << Ref(s.rhs);
        break;
      case StepKind::kMulVar:
        out << "MUL " << s.var.ToString() << ' ' << Ref(s.lhs);
        break;
    }
    out << '\n';
  }
}

PcProof ReadPcProof(std::istream& in) {
  std::string header;
  std::vector<std::string> body = ReadBody(in, &header);
  if (!StartsWith(header, "pcproof v1")) {
    throw Error(ErrorCode::kParse, "not a pcproof v1 file");
  }
  PcProof proof;
  bool saw_basis = false;
  for (const auto& [k, v] : ParseKeyValues(std::string_view(header).substr(10))) {
    if (k == "basis") {
      proof.basis = ParseBasis(v);
      saw_basis = true;
    } else if (k == "field") {
      proof.field = PrimeField(ParseInt<uint64_t>(v, "field"));
    } else if (k == "axioms") {
      proof.axioms_path = v;
    }
  }
  if (!saw_basis) throw Error(ErrorCode::kParse, "proof header lacks basis=");
  const PrimeField& f = proof.field;
  for (const std::string& line : body) {
    std::vector<std::string_view> tok = SplitWs(line);
    auto need = [&](size_t count) {
      if (tok.size() != count) {
        throw Error(ErrorCode::kParse, "malformed proof line '" + line + "'");
      }
    };
    if (tok.size() < 2) need(2);
    CheckNumbering(tok[0], proof.steps.size(), line);
    const std::string_view op = tok[1];
    if (op == "AX") {
      need(3);
      proof.steps.push_back(Step::Axiom(ParseInt<int>(tok[2], "axiom index") - 1));
    } else if (op == "SQ") {
      need(3);
      proof.steps.push_back(Step::Square(VarId::Parse(tok[2])));
    } else if (op == "TW") {
      need(3);
      proof.steps.push_back(Step::Twin(VarId::Parse(tok[2])));
    } else if (op == "LIN") {
      need(6);
      proof.steps.push_back(Step::LinComb(
          f.FromInt(ParseInt<int64_t>(tok[2], "coefficient")), ParseLineRef(tok[3]),
          f.FromInt(ParseInt<int64_t>(tok[4], "coefficient")), ParseLineRef(tok[5])));
    } else if (op == "MUL") {
      need(4);
      proof.steps.push_back(Step::MulVar(VarId::Parse(tok[2]), ParseLineRef(tok[3])));
    } else {
      throw Error(ErrorCode::kParse, "unknown rule '" + std::string(op) + "'");
    }
  }
  return proof;
}

void WriteResolutionProof(std::ostream& out, const ResolutionProof& proof) {
  out << "resproof v1 cnf=" << proof.cnf_path << '\n';
  for (size_t k = 0; k < proof.steps.size(); ++k) {
    const ResStep& s = proof.steps[k];
    out << Ref(static_cast<int>(k)) << ' ';
    if (s.kind == ResKind::kInput) {
      out << "IN " << s.clause + 1;
    } else {
      out << "RES " << Ref(s.lhs) << ' ' << Ref(s.rhs) << ' ' << s.pivot.ToString();
    }
    out << '\n';
  }
}

ResolutionProof ReadResolutionProof(std::istream& in) {
  std::string header;
  std::vector<std::string> body = ReadBody(in, &header);
  if (!StartsWith(header, "resproof v1")) {
    throw Error(ErrorCode::kParse, "not a resproof v1 file");
  }
  ResolutionProof proof;
  for (const auto& [k, v] : ParseKeyValues(std::string_view(header).substr(11))) {
    if (k == "cnf") proof.cnf_path = v;
  }
  for (const std::string& line : body) {
    std::vector<std::string_view> tok = SplitWs(line);
    if (tok.size() < 3) throw Error(ErrorCode::kParse, "malformed line '" + line + "'");
    CheckNumbering(tok[0], proof.steps.size(), line);
    if (tok[1] == "IN" && tok.size() == 3) {
      proof.steps.push_back(ResStep::Input(ParseInt<int>(tok[2], "clause index") - 1));
    } else if (tok[1] == "RES" && tok.size() == 5) {
      proof.steps.push_back(ResStep::Resolve(ParseLineRef(tok[2]), ParseLineRef(tok[3]),
                                             VarId::Parse(tok[4])));
    } else {
      throw Error(ErrorCode::kParse, "malformed line '" + line + "'");
    }
  }
  return proof;
}

}  // namespace pclab
