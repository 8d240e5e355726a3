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
#include "h3cover/linalg.hpp"

#include <stdexcept>

namespace h3cover {

namespace {

using Row = std::array<Scalar, 4>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const Field& F, std::vector<Row>& rows) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < 4 && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar s = F.inv(rows[r][col]);
    for (auto& x : rows[r]) x = F.mul(s, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Scalar t = rows[i][col];
      for (int j = 0; j < 4; ++j) rows[i][j] += F.mul(t, rows[r][j]);
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {x : <row, x> = 0 for every row}.
std::vector<Row> null_space(const Field& F, std::vector<Row> rows) {
  const auto pivots = rref(F, rows);
  std::vector<Row> basis;
  for (int free = 0; free < 4; ++free) {
    bool is_pivot = false;
    for (int p : pivots) is_pivot |= p == free;
    if (is_pivot) continue;
    Row x{};
    x[static_cast<std::size_t>(free)] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[static_cast<std::size_t>(pivots[i])] = rows[i][free];  // char 2: -a = a
    basis.push_back(x);
  }
  return basis;
}

template <class T>
std::vector<Row> as_rows(std::span<const T> xs) {
  std::vector<Row> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) rows.push_back(x.c);
  return rows;
}

template <class T>
T normalize_impl(const Field& F, const T& x) {
  for (const Scalar s : x.c) {
    if (s.is_zero()) continue;
    return scale(F, F.inv(s), x);
  }
  return x;
}

template <class T>
T random_nonzero_impl(const Field& F, std::span<const T> basis, Rng& rng) {
  if (basis.empty()) throw std::invalid_argument("random_nonzero_in: empty basis");
  for (;;) {
    T out{};
    for (const auto& b : basis) out = out + scale(F, random_scalar(F, rng), b);
    if (!out.is_zero()) return out;
  }
}

}  // namespace

Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t s = splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return Rng(seq);
}

bool Vector::is_zero() const {
  for (auto s : c)
    if (!s.is_zero()) return false;
  return true;
}

bool Covector::is_zero() const {
  for (auto s : c)
    if (!s.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out;
  for (std::size_t i = 0; i < 4; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

Covector operator+(const Covector& a, const Covector& b) {
  Covector out;
  for (std::size_t i = 0; i < 4; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

Matrix4 Matrix4::identity() { return diagonal(Scalar(1u), Scalar(1u), Scalar(1u), Scalar(1u)); }

Matrix4 Matrix4::diagonal(Scalar a, Scalar b, Scalar c, Scalar d) {
  Matrix4 out;
  out.m[0][0] = a;
  out.m[1][1] = b;
  out.m[2][2] = c;
  out.m[3][3] = d;
  return out;
}

Vector e(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("basis index must be in 1..4");
  Vector v;
  v.c[static_cast<std::size_t>(i - 1)] = Scalar(1u);
  return v;
}

Covector f(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("basis index must be in 1..4");
  Covector h;
  h.c[static_cast<std::size_t>(i - 1)] = Scalar(1u);
  return h;
}

Vector scale(const Field& F, Scalar s, const Vector& v) {
  Vector out;
  for (std::size_t i = 0; i < 4; ++i) out.c[i] = F.mul(s, v.c[i]);
  return out;
}

Covector scale(const Field& F, Scalar s, const Covector& h) {
  Covector out;
  for (std::size_t i = 0; i < 4; ++i) out.c[i] = F.mul(s, h.c[i]);
  return out;
}

Scalar eval(const Field& F, const Covector& h, const Vector& v) {
  Scalar acc;
  for (std::size_t i = 0; i < 4; ++i) acc += F.mul(h.c[i], v.c[i]);
  return acc;
}

Vector normalize(const Field& F, const Vector& v) { return normalize_impl(F, v); }
Covector normalize(const Field& F, const Covector& h) { return normalize_impl(F, h); }

Matrix4 mul(const Field& F, const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < 4; ++k) acc += F.mul(a.m[i][k], b.m[k][j]);
      out.m[i][j] = acc;
    }
  return out;
}

Matrix4 transpose(const Matrix4& a) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.m[i][j] = a.m[j][i];
  return out;
}

Scalar det(const Field& F, const Matrix4& a) {
  // Elimination; row swaps do not change the sign in characteristic 2.
  auto m = a.m;
  Scalar d(1u);
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t p = col;
    while (p < 4 && m[p][col].is_zero()) ++p;
    if (p == 4) return Scalar(0u);
    std::swap(m[p], m[col]);
    d = F.mul(d, m[col][col]);
    const Scalar s = F.inv(m[col][col]);
    for (std::size_t i = col + 1; i < 4; ++i) {
      if (m[i][col].is_zero()) continue;
      const Scalar t = F.mul(m[i][col], s);
      for (std::size_t j = col; j < 4; ++j) m[i][j] += F.mul(t, m[col][j]);
    }
  }
  return d;
}

std::optional<Matrix4> inverse(const Field& F, const Matrix4& a) {
  std::array<std::array<Scalar, 8>, 4> aug{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) aug[i][j] = a.m[i][j];
    aug[i][4 + i] = F.one();
  }
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t p = col;
    while (p < 4 && aug[p][col].is_zero()) ++p;
    if (p == 4) return std::nullopt;
    std::swap(aug[p], aug[col]);
    const Scalar s = F.inv(aug[col][col]);
    for (auto& x : aug[col]) x = F.mul(s, x);
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == col || aug[i][col].is_zero()) continue;
      const Scalar t = aug[i][col];
      for (std::size_t j = 0; j < 8; ++j) aug[i][j] += F.mul(t, aug[col][j]);
    }
  }
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.m[i][j] = aug[i][4 + j];
  return out;
}

Vector apply(const Field& F, const Vector& v, const Matrix4& g) {
  Vector out;
  for (std::size_t j = 0; j < 4; ++j) {
    Scalar acc;
    for (std::size_t i = 0; i < 4; ++i) acc += F.mul(v.c[i], g.m[i][j]);
    out.c[j] = acc;
  }
  return out;
}

Covector apply(const Field& F, const Covector& h, const Matrix4& g) {
  const auto ginv = inverse(F, g);
  if (!ginv) throw std::domain_error("contragredient action of a singular matrix");
  // h' = h * (g^-1)^T, i.e. h'_j = sum_i h_i ginv[j][i].
  Covector out;
  for (std::size_t j = 0; j < 4; ++j) {
    Scalar acc;
    for (std::size_t i = 0; i < 4; ++i) acc += F.mul(h.c[i], ginv->m[j][i]);
    out.c[j] = acc;
  }
  return out;
}

int rank(const Field& F, std::span<const Covector> rows) {
  auto r = as_rows(rows);
  return static_cast<int>(rref(F, r).size());
}

int rank(const Field& F, std::span<const Vector> rows) {
  auto r = as_rows(rows);
  return static_cast<int>(rref(F, r).size());
}

std::vector<Vector> kernel(const Field& F, std::span<const Covector> hs) {
  std::vector<Vector> out;
  for (const auto& row : null_space(F, as_rows(hs))) out.push_back(Vector{row});
  return out;
}

std::vector<Covector> annihilator(const Field& F, std::span<const Vector> vs) {
  std::vector<Covector> out;
  for (const auto& row : null_space(F, as_rows(vs))) out.push_back(Covector{row});
  return out;
}

Scalar random_scalar(const Field& F, Rng& rng) {
  return Scalar(static_cast<unsigned>(rng() % static_cast<std::uint64_t>(F.order())));
}

Scalar random_unit(const Field& F, Rng& rng) {
  return Scalar(static_cast<unsigned>(1 + rng() % static_cast<std::uint64_t>(F.order() - 1)));
}

Matrix4 random_sl4(const Field& F, Rng& rng) {
  Matrix4 g = Matrix4::identity();
  for (int step = 0; step < 20; ++step) {
    const auto i = static_cast<std::size_t>(rng() % 4);
    auto j = static_cast<std::size_t>(rng() % 3);
    if (j >= i) ++j;
    const Scalar s = random_scalar(F, rng);
    // Right-multiplying by I + s E_ij adds s * (column i) to column j.
    for (std::size_t r = 0; r < 4; ++r) g.m[r][j] += F.mul(s, g.m[r][i]);
  }
  return g;
}

Matrix4 random_sl4(const Field& F, std::uint64_t seed) {
  Rng rng = sample_rng(seed, 0);
  return random_sl4(F, rng);
}

Matrix4 random_gl4(const Field& F, Rng& rng) {
  const Matrix4 d = Matrix4::diagonal(random_unit(F, rng), random_unit(F, rng),
                                      random_unit(F, rng), random_unit(F, rng));
  return mul(F, random_sl4(F, rng), d);
}

Vector random_nonzero_in(const Field& F, std::span<const Vector> basis, Rng& rng) {
  return random_nonzero_impl(F, basis, rng);
}

Covector random_nonzero_in(const Field& F, std::span<const Covector> basis, Rng& rng) {
  return random_nonzero_impl(F, basis, rng);
}

}  // namespace h3cover
