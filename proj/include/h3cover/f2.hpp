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

// Linear algebra over F2. Spaces over GF(2^k) enter here by restriction of
// scalars: every GF(2^k) coordinate becomes k bits (bit j = coefficient of
// x^j), which is how the subgroups generated by voltages are measured.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace h3cover {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Incrementally built F2 subspace (echelon basis keyed by leading bit).
class F2Span {
 public:
  explicit F2Span(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Adds v; returns true when the rank grew.
  bool insert(Bits v);
  bool contains(Bits v) const;
  /// Reduced form of v modulo the span (zero iff contained).
  Bits reduce(Bits v) const;
  /// The current basis (not necessarily the inserted vectors).
  const std::vector<Bits>& basis() const noexcept { return basis_; }

 private:
  std::size_t dim_;
  std::vector<Bits> basis_;  // sorted by leading bit, descending
  std::vector<std::size_t> lead_;
};

/// Rank of a list of equal-length bit vectors.
std::size_t f2_rank(const std::vector<Bits>& vs);

/// Affine system A x = b over F2, one labelled equation per row.
class AffineSystemF2 {
 public:
  explicit AffineSystemF2(std::size_t unknowns) : unknowns_(unknowns) {}

  void add_equation(Bits coeffs, bool rhs, std::string label = {});

  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t equations() const noexcept { return rows_.size(); }
  const Bits& row(std::size_t i) const { return rows_[i]; }
  bool rhs(std::size_t i) const { return rhs_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  /// Every equation holds at x.
  bool satisfied_by(const Bits& x) const;

 private:
  std::size_t unknowns_;
  std::vector<Bits> rows_;
  std::vector<bool> rhs_;
  std::vector<std::string> labels_;
};

struct F2Solution {
  Bits particular;
  std::vector<Bits> kernel;  // basis of the homogeneous solution space
};

/// Equations whose sum is 0 = 1.
struct F2Inconsistency {
  std::vector<std::size_t> rows;
};

/// True when the listed rows really sum to the contradiction 0 = 1.
bool certifies(const AffineSystemF2& sys, const F2Inconsistency& cert);

/// Gaussian elimination with first-nonzero pivots, tracking row provenance
/// so an inconsistent system yields a certificate.
std::variant<F2Solution, F2Inconsistency> solve_affine_f2(const AffineSystemF2& sys);

/// Builds the system r(x) = 0 from an affine map r: F2^unknowns -> F2^outputs
/// by probing r at 0 and at every unit vector. `label(i)` names output bit i.
template <class Residual, class Label>
AffineSystemF2 restrict_scalars(std::size_t unknowns, std::size_t outputs,
                                Residual&& residual, Label&& label) {
  const Bits r0 = residual(Bits(unknowns));
  std::vector<Bits> columns;
  columns.reserve(unknowns);
  for (std::size_t j = 0; j < unknowns; ++j) {
    Bits unit(unknowns);
    unit.set(j);
    columns.push_back(residual(unit) ^ r0);
  }
  AffineSystemF2 sys(unknowns);
  for (std::size_t i = 0; i < outputs; ++i) {
    Bits row(unknowns);
    for (std::size_t j = 0; j < unknowns; ++j)
      if (columns[j].test(i)) row.set(j);
    sys.add_equation(std::move(row), r0.test(i), label(i));
  }
  return sys;
}

}  // namespace h3cover
