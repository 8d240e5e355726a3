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
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "h3cover/field.hpp"

namespace h3cover {

using Rng = std::mt19937_64;

/// Independent, reproducible stream for sample `index` of a run seeded by
/// `seed`. Lets parallel loops draw samples without sharing state.
Rng sample_rng(std::uint64_t seed, std::uint64_t index);

/// Element of V = F^4, coordinates over e1..e4. Row vector: groups act on the
/// right, v^g = v * M_g.
struct Vector {
  std::array<Scalar, 4> c{};

  Scalar& operator[](std::size_t i) { return c[i]; }
  Scalar operator[](std::size_t i) const { return c[i]; }
  bool is_zero() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend bool operator==(const Vector&, const Vector&) = default;
  friend auto operator<=>(const Vector&, const Vector&) = default;
};

/// Element of V*, coordinates over the dual basis f1..f4.
struct Covector {
  std::array<Scalar, 4> c{};

  Scalar& operator[](std::size_t i) { return c[i]; }
  Scalar operator[](std::size_t i) const { return c[i]; }
  bool is_zero() const;
  friend Covector operator+(const Covector& a, const Covector& b);
  friend bool operator==(const Covector&, const Covector&) = default;
  friend auto operator<=>(const Covector&, const Covector&) = default;
};

/// 4x4 matrix; row i is the image of e_(i+1).
struct Matrix4 {
  std::array<std::array<Scalar, 4>, 4> m{};

  static Matrix4 identity();
  static Matrix4 diagonal(Scalar a, Scalar b, Scalar c, Scalar d);
  Scalar& operator()(std::size_t r, std::size_t col) { return m[r][col]; }
  Scalar operator()(std::size_t r, std::size_t col) const { return m[r][col]; }
  friend bool operator==(const Matrix4&, const Matrix4&) = default;
};

// Standard bases, 1-based to match the usual e1..e4 / f1..f4 labels.
Vector e(int i);
Covector f(int i);

Vector scale(const Field& F, Scalar s, const Vector& v);
Covector scale(const Field& F, Scalar s, const Covector& h);

/// h(v) = sum h_i v_i.
Scalar eval(const Field& F, const Covector& h, const Vector& v);

/// First nonzero coordinate scaled to 1. Zero stays zero.
Vector normalize(const Field& F, const Vector& v);
Covector normalize(const Field& F, const Covector& h);

Matrix4 mul(const Field& F, const Matrix4& a, const Matrix4& b);
Matrix4 transpose(const Matrix4& a);
Scalar det(const Field& F, const Matrix4& a);
std::optional<Matrix4> inverse(const Field& F, const Matrix4& a);

/// v^g = v * g.
Vector apply(const Field& F, const Vector& v, const Matrix4& g);
/// Contragredient action h^g = h * (g^-1)^T, so eval(h^g, v^g) = eval(h, v).
/// Throws std::domain_error when g is singular.
Covector apply(const Field& F, const Covector& h, const Matrix4& g);

/// Rank of a list of 4-coordinate rows.
int rank(const Field& F, std::span<const Covector> rows);
int rank(const Field& F, std::span<const Vector> rows);

/// Basis of the common null space {v : h(v) = 0 for all h in hs}.
std::vector<Vector> kernel(const Field& F, std::span<const Covector> hs);
/// Basis of the annihilator {h : h(v) = 0 for all v in vs}.
std::vector<Covector> annihilator(const Field& F, std::span<const Vector> vs);

/// Identity times 20 random elementary transvections I + s E_ij (i != j).
Matrix4 random_sl4(const Field& F, Rng& rng);
Matrix4 random_sl4(const Field& F, std::uint64_t seed);
/// random_sl4 times a random invertible diagonal matrix; det is arbitrary
/// nonzero.
Matrix4 random_gl4(const Field& F, Rng& rng);

Scalar random_scalar(const Field& F, Rng& rng);
Scalar random_unit(const Field& F, Rng& rng);
/// Uniform nonzero element of the span of `basis` (which must be nonempty
/// and independent).
Vector random_nonzero_in(const Field& F, std::span<const Vector> basis, Rng& rng);
Covector random_nonzero_in(const Field& F, std::span<const Covector> basis, Rng& rng);

}  // namespace h3cover
