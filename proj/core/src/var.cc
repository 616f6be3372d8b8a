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

#include "pclab/var.h"

#include <cctype>
#include <charconv>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pclab/errors.h"

namespace pclab {
namespace {

class NameTable {
 public:
  int32_t Intern(std::string_view name) {
    {
      std::shared_lock lock(mu_);
      auto it = index_.find(std::string(name));
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    auto [it, inserted] =
        index_.emplace(std::string(name), static_cast<int32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  std::string_view Name(int32_t id) const {
    std::shared_lock lock(mu_);
    return names_[static_cast<size_t>(id)];
  }

 private:
  mutable std::shared_mutex mu_;
  // deque keeps element addresses stable across growth.
  std::deque<std::string> names_;
  std::unordered_map<std::string, int32_t> index_;
};

NameTable& Names() {
  static NameTable* table = new NameTable();
  return *table;
}

// "x2" < "x10": compare the non-digit prefix, then the numeric suffix.
std::strong_ordering NaturalCompare(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::pair(s.substr(0, k), s.substr(k));
  };
  auto [pa, da] = split(a);
  auto [pb, db] = split(b);
  if (auto c = pa.compare(pb); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Strip leading zeros so numeric magnitude decides, then fall back to text.
  auto strip = [](std::string_view d) {
    size_t k = 0;
    while (k + 1 < d.size() && d[k] == '0') ++k;
    return d.substr(k);
  };
  std::string_view sa = strip(da), sb = strip(db);
  if (sa.size() != sb.size()) return sa.size() <=> sb.size();
  if (auto c = sa.compare(sb); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = a.compare(b);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
      return false;
    }
  }
  return true;
}

std::vector<int> ParseIndexList(std::string_view inside, std::string_view text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= inside.size()) {
    size_t comma = inside.find(',', pos);
    if (comma == std::string_view::npos) comma = inside.size();
    std::string_view item = inside.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::kParse,
                  "bad index in variable '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int PointerWidth(int n) {
  int b = 0;
  while ((1 << b) < n) ++b;
  return b < 1 ? 1 : b;
}

VarId VarId::Edge(int i, int j, int l) {
  if (i < 1 || j < 1 || l < 0 || i == j) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge variable needs distinct vertices >= 1 and gadget >= 0: x(" +
                    std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(l) + ")");
  }
  VarId v;
  v.kind_ = VarKind::kEdge;
  v.a_ = i;
  v.b_ = j;
  v.c_ = l;
  return v;
}

VarId VarId::Pointer(int j, int a) {
  if (j < 1 || a < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "pointer variable needs vertex >= 1 and bit >= 1");
  }
  VarId v;
  v.kind_ = VarKind::kPointer;
  v.a_ = j;
  v.b_ = a;
  return v;
}

VarId VarId::Cluster(int i, int j, int p) {
  if (i < 1 || j < 1 || p < 1 || i == j) {
    throw Error(ErrorCode::kInvalidArgument,
                "cluster variable needs distinct vertices and index >= 1");
  }
  VarId v;
  v.kind_ = VarKind::kCluster;
  v.a_ = i;
  v.b_ = j;
  v.c_ = p;
  return v;
}

VarId VarId::Plain(std::string_view name) {
  if (!IsIdentifier(name)) {
    throw Error(ErrorCode::kInvalidArgument,
                "not an identifier: '" + std::string(name) + "'");
  }
  VarId v;
  v.kind_ = VarKind::kPlain;
  v.a_ = Names().Intern(name);
  return v;
}

std::string_view VarId::name() const {
  if (kind_ != VarKind::kPlain) return {};
  return Names().Name(a_);
}

VarId VarId::Parse(std::string_view text) {
  std::string_view s = text;
  bool twin = false;
  if (!s.empty() && s.front() == '~') {
    twin = true;
    s.remove_prefix(1);
  }
  VarId v;
  size_t open = s.find('(');
  if (open == std::string_view::npos) {
    v = Plain(s);
  } else {
    if (open != 1 || s.back() != ')') {
      throw Error(ErrorCode::kParse, "malformed variable '" + std::string(text) + "'");
    }
    std::vector<int> idx =
        ParseIndexList(s.substr(open + 1, s.size() - open - 2), text);
    switch (s[0]) {
      case 'x':
        if (idx.size() == 2) {
          v = Edge(idx[0], idx[1], 0);
        } else if (idx.size() == 3 && idx[2] >= 1) {
          v = Edge(idx[0], idx[1], idx[2]);
        } else {
          throw Error(ErrorCode::kParse, "bad edge variable '" + std::string(text) + "'");
        }
        break;
      case 'y':
        if (idx.size() != 2) {
          throw Error(ErrorCode::kParse, "bad pointer variable '" + std::string(text) + "'");
        }
        v = Pointer(idx[0], idx[1]);
        break;
      case 'z':
        if (idx.size() != 3) {
          throw Error(ErrorCode::kParse, "bad cluster variable '" + std::string(text) + "'");
        }
        v = Cluster(idx[0], idx[1], idx[2]);
        break;
      default:
        throw Error(ErrorCode::kParse, "unknown variable family '" + std::string(text) + "'");
    }
  }
  return twin ? v.Twin() : v;
}

std::string VarId::ToString() const {
  std::string out = negated_ ? "~" : "";
  auto idx = [](std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
      if (!first) s += ',';
      s += std::to_string(x);
      first = false;
    }
    return s + ")";
  };
  switch (kind_) {
    case VarKind::kEdge:
      out += "x" + (c_ == 0 ? idx({a_, b_}) : idx({a_, b_, c_}));
      break;
    case VarKind::kPointer:
      out += "y" + idx({a_, b_});
      break;
    case VarKind::kCluster:
      out += "z" + idx({a_, b_, c_});
      break;
    case VarKind::kPlain:
      out += name();
      break;
  }
  return out;
}

std::strong_ordering operator<=>(const VarId& x, const VarId& y) {
  if (auto c = x.kind_ <=> y.kind_; c != 0) return c;
  if (x.kind_ == VarKind::kPlain) {
    if (x.a_ != y.a_) return NaturalCompare(x.name(), y.name());
  } else {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    if (auto c = x.b_ <=> y.b_; c != 0) return c;
    if (auto c = x.c_ <=> y.c_; c != 0) return c;
  }
  return x.negated_ <=> y.negated_;
}

}  // namespace pclab
