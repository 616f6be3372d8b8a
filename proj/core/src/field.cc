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

#include "pclab/field.h"

#include <string>

#include "pclab/errors.h"

namespace pclab {

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(uint64_t prime) : prime_(prime) {
  if (prime >= (uint64_t{1} << 32) || prime % 2 == 0 || !IsPrime(prime)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field modulus must be an odd prime below 2^32, got " +
                    std::to_string(prime));
  }
}

FieldElement PrimeField::FromInt(int64_t v) const {
  const int64_t p = static_cast<int64_t>(prime_);
  int64_t r = v % p;
  if (r < 0) r += p;
  return FieldElement(static_cast<uint64_t>(r));
}

FieldElement PrimeField::Pow(FieldElement a, uint64_t e) const {
  FieldElement result = One();
  while (e > 0) {
    if (e & 1) result = Mul(result, a);
    a = Mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement PrimeField::Inv(FieldElement a) const {
  if (a.IsZero()) {
    throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  }
  return Pow(a, prime_ - 2);
}

int64_t PrimeField::ToSigned(FieldElement a) const {
  if (a.value() > prime_ / 2) {
    return static_cast<int64_t>(a.value()) - static_cast<int64_t>(prime_);
  }
  return static_cast<int64_t>(a.value());
}

std::string PrimeField::Format(FieldElement a) const {
  return std::to_string(ToSigned(a));
}

}  // namespace pclab
