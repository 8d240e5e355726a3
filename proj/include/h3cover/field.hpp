/* Copyright 2026 The h3cover Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace h3cover {

/// Element of GF(2^k), stored as the coefficient vector of a polynomial
/// residue (bit i = coefficient of x^i).
///
/// Addition is XOR and needs no field context; everything else goes through
/// a Field.
struct Scalar {
  std::uint8_t bits = 0;

  constexpr Scalar() = default;
  constexpr explicit Scalar(unsigned b) : bits(static_cast<std::uint8_t>(b)) {}

  constexpr bool is_zero() const { return bits == 0; }

  friend constexpr Scalar operator+(Scalar a, Scalar b) {
    return Scalar(static_cast<unsigned>(a.bits ^ b.bits));
  }
  constexpr Scalar& operator+=(Scalar o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr bool operator==(Scalar, Scalar) = default;
  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

/// Carry-less product of two polynomials over F2 reduced modulo `modulus`
/// (a polynomial of degree `degree`). Slow path; used to build tables.
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus,
                          int degree);

/// Irreducibility over F2 by trial division with every polynomial of
/// degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

/// GF(2^k) for k in {1,2,3,4} with the fixed moduli
/// x, x^2+x+1, x^3+x+1, x^4+x+1.
///
/// Checked operations throw std::invalid_argument when an operand does not
/// belong to this field (the only observable symptom of mixing fields) and
/// std::domain_error for inv(0).
class Field {
 public:
  explicit Field(int degree);
  /// order in {2, 4, 8, 16}
  static Field from_order(int order);

  int degree() const noexcept { return degree_; }
  int order() const noexcept { return 1 << degree_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  bool contains(Scalar a) const noexcept { return a.bits < order(); }

  Scalar zero() const noexcept { return Scalar(0u); }
  Scalar one() const noexcept { return Scalar(1u); }
  /// The class of x. Outside F2 whenever degree() > 1.
  Scalar generator() const noexcept { return Scalar(degree_ == 1 ? 1u : 2u); }

  Scalar add(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar square(Scalar a) const { return mul(a, a); }
  Scalar pow(Scalar a, unsigned e) const;
  /// a^(2^k - 2).
  Scalar inv(Scalar a) const;

  /// All 2^k elements, zero first, ascending bit order.
  std::vector<Scalar> elements() const;
  /// Nonzero elements in ascending bit order.
  std::vector<Scalar> units() const;
  /// x^0, ..., x^(k-1): the F2 basis matching the bit layout.
  std::vector<Scalar> f2_basis() const;

  // Unchecked table lookups for inner loops. Operands must satisfy contains().
  Scalar mul_fast(Scalar a, Scalar b) const noexcept {
    return mul_table_[static_cast<std::size_t>(a.bits) << 4 | b.bits];
  }
  Scalar inv_fast(Scalar a) const noexcept { return inv_table_[a.bits]; }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.degree_ == b.degree_;
  }

 private:
  void check(Scalar a) const;

  int degree_;
  std::uint32_t modulus_;
  std::array<Scalar, 256> mul_table_{};
  std::array<Scalar, 16> inv_table_{};
};

}  // namespace h3cover
