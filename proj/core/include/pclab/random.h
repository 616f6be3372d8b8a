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


// Seeded randomness. Every randomized routine takes an explicit seed; child
// streams are derived from a master seed by hashing (master, tag, index)
// through splitmix64, so results never depend on scheduling.

#ifndef PCLAB_RANDOM_H_
#define PCLAB_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace pclab {

uint64_t SplitMix64(uint64_t x);

// Seed of child stream `index` of the stream named `tag` under `master`.
uint64_t DeriveSeed(uint64_t master, std::string_view tag, uint64_t index = 0);

// mt19937_64 with bounded draws implemented here, since the standard
// distributions are not reproducible across library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound > 0. Lemire's rejection method.
  uint64_t Below(uint64_t bound);
  // Uniform in [lo, hi].
  int64_t Range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(Below(static_cast<uint64_t>(hi - lo) + 1));
  }
  bool Coin() { return (Next() >> 63) != 0; }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t k = v.size(); k > 1; --k) {
      std::swap(v[k - 1], v[Below(k)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pclab

#endif  // PCLAB_RANDOM_H_
