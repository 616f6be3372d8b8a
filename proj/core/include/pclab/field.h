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

#ifndef PCLAB_FIELD_H_
#define PCLAB_FIELD_H_

#include <compare>
#include <cstdint>
#include <string>

namespace pclab {

// A residue in [0, p). The modulus lives in PrimeField; elements of different
// fields must not be mixed.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(uint64_t value) : value_(value) {}

  constexpr uint64_t value() const { return value_; }
  constexpr bool IsZero() const { return value_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  uint64_t value_ = 0;
};

// Arithmetic modulo an odd prime p < 2^32. Two must be invertible for the
// Fourier basis, hence the odd requirement.
class PrimeField {
 public:
  static constexpr uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

  explicit PrimeField(uint64_t prime = kDefaultPrime);

  uint64_t prime() const { return prime_; }

  FieldElement Zero() const { return FieldElement(0); }
  FieldElement One() const { return FieldElement(1); }
  FieldElement FromInt(int64_t v) const;

  FieldElement Add(FieldElement a, FieldElement b) const {
    uint64_t s = a.value() + b.value();
    return FieldElement(s >= prime_ ? s - prime_ : s);
  }
  FieldElement Sub(FieldElement a, FieldElement b) const {
    return FieldElement(a.value() >= b.value() ? a.value() - b.value()
                                               : a.value() + prime_ - b.value());
  }
  FieldElement Neg(FieldElement a) const {
    return FieldElement(a.value() == 0 ? 0 : prime_ - a.value());
  }
  FieldElement Mul(FieldElement a, FieldElement b) const {
    return FieldElement((a.value() * b.value()) % prime_);
  }
  FieldElement Pow(FieldElement a, uint64_t e) const;
  // Throws kInvalidArgument on zero.
  FieldElement Inv(FieldElement a) const;

  // Representative in (-p/2, p/2], used for printing.
  int64_t ToSigned(FieldElement a) const;
  std::string Format(FieldElement a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  uint64_t prime_;
};

bool IsPrime(uint64_t n);

}  // namespace pclab

#endif  // PCLAB_FIELD_H_
