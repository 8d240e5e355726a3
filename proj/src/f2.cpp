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
#include "h3cover/f2.hpp"

#include <stdexcept>

namespace h3cover {

namespace {

std::size_t leading_bit(const Bits& v) {
  // dynamic_bitset has no find_last; scan blocks from the top.
  for (std::size_t i = v.size(); i-- > 0;)
    if (v.test(i)) return i;
  return Bits::npos;
}

}  // namespace

Bits F2Span::reduce(Bits v) const {
  if (v.size() != dim_) throw std::invalid_argument("F2Span: dimension mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.test(lead_[i])) v ^= basis_[i];
  return v;
}

bool F2Span::contains(Bits v) const { return reduce(std::move(v)).none(); }

bool F2Span::insert(Bits v) {
  v = reduce(std::move(v));
  const std::size_t lead = leading_bit(v);
  if (lead == Bits::npos) return false;
  // Keep the basis fully reduced on leading bits so reduce() is one pass.
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].test(lead)) basis_[i] ^= v;
  std::size_t pos = 0;
  while (pos < lead_.size() && lead_[pos] > lead) ++pos;
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  lead_.insert(lead_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

std::size_t f2_rank(const std::vector<Bits>& vs) {
  if (vs.empty()) return 0;
  F2Span span(vs.front().size());
  for (const auto& v : vs) span.insert(v);
  return span.rank();
}

void AffineSystemF2::add_equation(Bits coeffs, bool rhs, std::string label) {
  if (coeffs.size() != unknowns_)
    throw std::invalid_argument("AffineSystemF2: equation width mismatch");
  rows_.push_back(std::move(coeffs));
  rhs_.push_back(rhs);
  labels_.push_back(std::move(label));
}

bool AffineSystemF2::satisfied_by(const Bits& x) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (((rows_[i] & x).count() & 1u) != static_cast<std::size_t>(rhs_[i])) return false;
  return true;
}

bool certifies(const AffineSystemF2& sys, const F2Inconsistency& cert) {
  if (cert.rows.empty()) return false;
  Bits sum(sys.unknowns());
  bool rhs = false;
  for (std::size_t r : cert.rows) {
    if (r >= sys.equations()) return false;
    sum ^= sys.row(r);
    rhs ^= sys.rhs(r);
  }
  return sum.none() && rhs;
}

std::variant<F2Solution, F2Inconsistency> solve_affine_f2(const AffineSystemF2& sys) {
  const std::size_t n = sys.unknowns();
  const std::size_t m = sys.equations();
  std::vector<Bits> rows;
  std::vector<bool> rhs;
  std::vector<Bits> origin;  // which input equations were summed into each row
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    rows.push_back(sys.row(i));
    rhs.push_back(sys.rhs(i));
    Bits o(m);
    o.set(i);
    origin.push_back(std::move(o));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && !rows[p].test(col)) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(origin[p], origin[r]);
    {
      const bool tmp = rhs[p];
      rhs[p] = rhs[r];
      rhs[r] = tmp;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || !rows[i].test(col)) continue;
      rows[i] ^= rows[r];
      origin[i] ^= origin[r];
      rhs[i] = rhs[i] != rhs[r];
    }
    pivot_col.push_back(col);
    ++r;
  }

  for (std::size_t i = r; i < m; ++i) {
    if (!rhs[i]) continue;
    F2Inconsistency cert;
    for (std::size_t j = origin[i].find_first(); j != Bits::npos; j = origin[i].find_next(j))
      cert.rows.push_back(j);
    return cert;
  }

  F2Solution sol;
  sol.particular = Bits(n);
  for (std::size_t i = 0; i < r; ++i)
    if (rhs[i]) sol.particular.set(pivot_col[i]);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Bits k(n);
    k.set(free);
    for (std::size_t i = 0; i < r; ++i)
      if (rows[i].test(free)) k.set(pivot_col[i]);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace h3cover
