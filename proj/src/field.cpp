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
#include "h3cover/field.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace h3cover {

namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

constexpr std::array<std::uint32_t, 5> kModuli = {0, 0b10, 0b111, 0b1011, 0b10011};

}  // namespace

std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus,
                          int degree) {
  std::uint32_t product = 0;
  for (int i = 0; i < 16; ++i)
    if (b >> i & 1u) product ^= a << i;
  // In degree 1 the modulus x would wipe out the constant term; F2 needs no
  // reduction since operands are already below 2.
  if (degree == 1) return product & 1u;
  return poly_mod(product, modulus);
}

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t q = 2; poly_degree(q) <= d / 2; ++q)
    if (poly_mod(poly, q) == 0) return false;
  return true;
}

Field::Field(int degree) : degree_(degree) {
  if (degree < 1 || degree > 4)
    throw std::invalid_argument("field degree must be in 1..4, got " + std::to_string(degree));
  modulus_ = kModuli[static_cast<std::size_t>(degree)];
  const unsigned q = 1u << degree;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      mul_table_[a << 4 | b] = Scalar(poly_mulmod(a, b, modulus_, degree));
  // Inverse as a^(q-2), square-and-multiply on the table.
  for (unsigned a = 1; a < q; ++a) {
    Scalar base(a);
    Scalar acc(1u);
    for (unsigned e = q - 2; e != 0; e >>= 1) {
      if (e & 1u) acc = mul_fast(acc, base);
      base = mul_fast(base, base);
    }
    inv_table_[a] = acc;
  }
}

Field Field::from_order(int order) {
  switch (order) {
    case 2: return Field(1);
    case 4: return Field(2);
    case 8: return Field(3);
    case 16: return Field(4);
    default:
      throw std::invalid_argument("field order must be one of 2, 4, 8, 16, got " +
                                  std::to_string(order));
  }
}

void Field::check(Scalar a) const {
  if (!contains(a))
    throw std::invalid_argument("scalar " + std::to_string(a.bits) +
                                " is not an element of GF(" + std::to_string(order()) + ")");
}

Scalar Field::add(Scalar a, Scalar b) const {
  check(a);
  check(b);
  return a + b;
}

Scalar Field::mul(Scalar a, Scalar b) const {
  check(a);
  check(b);
  return mul_fast(a, b);
}

Scalar Field::pow(Scalar a, unsigned e) const {
  check(a);
  Scalar acc = one();
  for (; e != 0; e >>= 1) {
    if (e & 1u) acc = mul_fast(acc, a);
    a = mul_fast(a, a);
  }
  return acc;
}

Scalar Field::inv(Scalar a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return inv_table_[a.bits];
}

std::vector<Scalar> Field::elements() const {
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (int a = 0; a < order(); ++a) out.emplace_back(static_cast<unsigned>(a));
  return out;
}

std::vector<Scalar> Field::units() const {
  std::vector<Scalar> out;
  for (int a = 1; a < order(); ++a) out.emplace_back(static_cast<unsigned>(a));
  return out;
}

std::vector<Scalar> Field::f2_basis() const {
  std::vector<Scalar> out;
  for (int i = 0; i < degree_; ++i) out.emplace_back(1u << i);
  return out;
}

}  // namespace h3cover
