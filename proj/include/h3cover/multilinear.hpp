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

// W = Λ²V, its dual, the symmetric square S₂(W) and the quotient
// N = S₂(W) / <U>_F2, all in fixed coordinates:
//
//   W basis (slot 0..5):  w1=e1^e2  w2=e1^e3  w3=e1^e4  w4=e2^e3  w5=e2^e4  w6=e3^e4
//   Λ²V* uses f_i^f_j in the same slot order.
//   S₂(W) monomials w_i w_j (i <= j) in lexicographic order of (i, j):
//     0:w1w1 1:w1w2 ... 5:w1w6 6:w2w2 ... 10:w2w6 11:w3w3 ... 20:w6w6

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>

#include "h3cover/f2.hpp"
#include "h3cover/field.hpp"
#include "h3cover/linalg.hpp"

namespace h3cover {

inline constexpr std::size_t kWedgeDim = 6;
inline constexpr std::size_t kSymDim = 21;

/// Slot of e_i ^ e_j (0-based, i < j).
constexpr std::size_t wedge_slot(std::size_t i, std::size_t j) {
  return i == 0 ? j - 1 : (i == 1 ? j + 1 : 5);
}
/// Index of monomial w_a w_b (0-based slots, a <= b).
constexpr std::size_t sym_index(std::size_t a, std::size_t b) {
  return a * 6 - a * (a - 1) / 2 + (b - a);
}
/// (a, b) for a monomial index.
std::pair<std::size_t, std::size_t> sym_monomial(std::size_t index);

struct Bivector {
  std::array<Scalar, kWedgeDim> c{};

  bool is_zero() const;
  friend Bivector operator+(const Bivector& a, const Bivector& b);
  friend bool operator==(const Bivector&, const Bivector&) = default;
  friend auto operator<=>(const Bivector&, const Bivector&) = default;
};

struct DualBivector {
  std::array<Scalar, kWedgeDim> c{};

  friend DualBivector operator+(const DualBivector& a, const DualBivector& b);
  friend bool operator==(const DualBivector&, const DualBivector&) = default;
};

struct SymTensor {
  std::array<Scalar, kSymDim> c{};

  bool is_zero() const;
  friend SymTensor operator+(const SymTensor& a, const SymTensor& b);
  SymTensor& operator+=(const SymTensor& o);
  friend bool operator==(const SymTensor&, const SymTensor&) = default;
  /// Lexicographic on coordinates read as bit values.
  friend auto operator<=>(const SymTensor&, const SymTensor&) = default;
};

/// w1..w6 (1-based, matching the usual labels).
Bivector w(int i);
/// The monomial w_i w_j as a tensor (1-based).
SymTensor monomial(int i, int j);

Bivector scale(const Field& F, Scalar s, const Bivector& a);
SymTensor scale(const Field& F, Scalar s, const SymTensor& t);

Bivector wedge(const Field& F, const Vector& a, const Vector& b);
DualBivector wedge(const Field& F, const Covector& a, const Covector& b);

/// χ(a ^ b ^ c ^ d) with χ(e1^e2^e3^e4) = 1, i.e. the determinant of the rows.
Scalar wedge4(const Field& F, const Vector& a, const Vector& b, const Vector& c,
              const Vector& d);

/// The isomorphism Λ²V* -> Λ²V: f_i^f_j goes to the complementary basis
/// bivector (f3^f4 -> w1, f2^f4 -> w2, f2^f3 -> w3, f1^f4 -> w4,
/// f1^f3 -> w5, f1^f2 -> w6). Signs vanish in characteristic 2.
Bivector phi(const DualBivector& d);

/// B(f^, v^) = f1(v1) f2(v2) - f1(v2) f2(v1), bilinearly extended.
Scalar dual_pairing(const Field& F, const DualBivector& fh, const Bivector& vh);
/// B(a, b) = χ(a ^ b) on Λ²V.
Scalar wedge_pairing(const Field& F, const Bivector& a, const Bivector& b);

/// Checks dual_pairing(f^, v^) == wedge_pairing(phi(f^), v^) on all 36
/// basis pairs, evaluating the left side through actual covector evaluations
/// and the right side through wedge4 on actual vectors.
bool phi_consistency_check(const Field& F);

/// Product in S₂(W): monomial (i,j) gets a_i b_j + a_j b_i, (i,i) gets a_i b_i.
SymTensor sym_mul(const Field& F, const Bivector& a, const Bivector& b);
SymTensor square(const Field& F, const Bivector& a);

/// (w^x)(y^z) + (w^y)(z^x) + (w^z)(x^y).
SymTensor delta(const Field& F, const Vector& w, const Vector& x, const Vector& y,
                const Vector& z);
/// U = delta(e1, e2, e3, e4) = w1w6 + w2w5 + w3w4.
SymTensor big_u(const Field& F);
/// Coefficients of U lie in F2, so the tensor does not depend on the field.
SymTensor big_u();

/// Support on the diagonal monomials only.
bool in_w2(const SymTensor& s);
bool in_w2_plus_u(const SymTensor& s);

// Restriction of scalars: coordinate i, bit j -> F2 index i*k + j.
Bits to_bits(const SymTensor& s, int degree);
SymTensor sym_from_bits(const Bits& b, int degree);
Bits to_bits(const Bivector& a, int degree);
Bivector bivector_from_bits(const Bits& b, int degree);

/// Coset {s, s + U} of <U>_F2, held by its lexicographically smaller member.
class NElement {
 public:
  NElement() = default;

  const SymTensor& rep() const noexcept { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend NElement project_n(const SymTensor& s);
  friend NElement operator+(const NElement& a, const NElement& b);
  friend bool operator==(const NElement&, const NElement&) = default;
  friend auto operator<=>(const NElement&, const NElement&) = default;

 private:
  explicit NElement(const SymTensor& canonical) : rep_(canonical) {}
  SymTensor rep_{};
};

NElement project_n(const SymTensor& s);
/// Both members of the coset.
std::array<SymTensor, 2> lift_n(const NElement& n);

/// Induced action of g on Λ²V: (v ^ w)^g = v^g ^ w^g.
Bivector act_w(const Field& F, const Matrix4& g, const Bivector& a);

/// The induced linear map of g on S₂(W), tabulated once per g.
class S2Action {
 public:
  S2Action(const Field& F, const Matrix4& g);

  const Matrix4& matrix() const noexcept { return g_; }
  const Bivector& image_w(std::size_t slot) const { return w_images_[slot]; }
  Bivector apply(const Bivector& a) const;
  SymTensor apply(const SymTensor& s) const;

 private:
  Field field_;
  Matrix4 g_;
  std::array<Bivector, kWedgeDim> w_images_;
  std::array<SymTensor, kSymDim> images_;
};

SymTensor act_s2(const Field& F, const Matrix4& g, const SymTensor& s);
/// Requires det g = 1 (otherwise U is not fixed and the action does not
/// descend to N); throws std::domain_error.
NElement act_n(const Field& F, const Matrix4& g, const NElement& n);

struct SymTensorHash {
  std::size_t operator()(const SymTensor& s) const noexcept;
};
struct NElementHash {
  std::size_t operator()(const NElement& n) const noexcept { return SymTensorHash{}(n.rep()); }
};

}  // namespace h3cover
