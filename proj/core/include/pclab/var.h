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

// Structured variable identifiers for ordering-principle formulas.
//
//   x(i,j)     unlifted edge "i precedes j"       Edge(i, j, 0)
//   x(i,j,l)   OR-gadget copy l >= 1 of x(i,j)    Edge(i, j, l)
//   y(j,a)     bit a >= 1 of the pointer of j     Pointer(j, a)
//   z(i,j,p)   clustered gadget variable          Cluster(i, j, p)
//   name       free-form identifier               Plain(name)
//
// A leading '~' marks the twin. The total order used for graded-lex is:
// pointers, then edges, then cluster variables, then plain names; indices
// compare lexicographically and a variable precedes its twin.

#ifndef PCLAB_VAR_H_
#define PCLAB_VAR_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace pclab {

enum class VarKind : uint8_t { kPointer = 0, kEdge = 1, kCluster = 2, kPlain = 3 };

class VarId {
 public:
  VarId() = default;

  // Throws kInvalidArgument if i == j or any index is out of range.
  static VarId Edge(int i, int j, int l = 0);
  static VarId Pointer(int j, int a);
  static VarId Cluster(int i, int j, int p);
  static VarId Plain(std::string_view name);
  static VarId Parse(std::string_view text);

  VarKind kind() const { return kind_; }
  bool negated() const { return negated_; }
  VarId Twin() const {
    VarId v = *this;
    v.negated_ = !negated_;
    return v;
  }
  VarId Base() const {
    VarId v = *this;
    v.negated_ = false;
    return v;
  }

  bool IsEdge() const { return kind_ == VarKind::kEdge; }
  bool IsPointer() const { return kind_ == VarKind::kPointer; }
  bool IsCluster() const { return kind_ == VarKind::kCluster; }
  bool IsPlain() const { return kind_ == VarKind::kPlain; }

  // Edge/Cluster: (i, j, l). Pointer: vertex() == j, bit() == a.
  int from() const { return a_; }
  int to() const { return b_; }
  int gadget() const { return c_; }
  int vertex() const { return a_; }
  int bit() const { return b_; }
  std::string_view name() const;

  std::string ToString() const;

  friend bool operator==(const VarId& x, const VarId& y) {
    return x.kind_ == y.kind_ && x.negated_ == y.negated_ && x.a_ == y.a_ &&
           x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend std::strong_ordering operator<=>(const VarId& x, const VarId& y);

  size_t Hash() const {
    uint64_t h = static_cast<uint64_t>(kind_) | (uint64_t{negated_} << 2);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<uint32_t>(a_);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<uint32_t>(b_);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<uint32_t>(c_);
    return static_cast<size_t>(h ^ (h >> 29));
  }

 private:
  VarKind kind_ = VarKind::kPlain;
  bool negated_ = false;
  // For Plain, a_ indexes the process-wide name table.
  int32_t a_ = 0;
  int32_t b_ = 0;
  int32_t c_ = 0;
};

struct VarIdHash {
  size_t operator()(const VarId& v) const { return v.Hash(); }
};

// Number of pointer bits for n vertices: ceil(log2 n), at least 1.
int PointerWidth(int n);

}  // namespace pclab

template <>
struct std::hash<pclab::VarId> {
  size_t operator()(const pclab::VarId& v) const { return v.Hash(); }
};

#endif  // PCLAB_VAR_H_
