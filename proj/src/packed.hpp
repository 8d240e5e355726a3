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

// Tensors packed into machine words with the restriction-of-scalars layout
// of to_bits: coordinate i, bit j -> bit i * k + j. A SymTensor fits into
// 64 bits for k <= 3, a Bivector into 32 bits for every k <= 4.

#include <cstdint>
#include <stdexcept>

#include "h3cover/multilinear.hpp"

namespace h3cover {

inline std::uint64_t pack_word(const SymTensor& s, int k) {
  if (k > 3) throw std::invalid_argument("pack_word: degree > 3 does not fit a word");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < kSymDim; ++i)
    out |= static_cast<std::uint64_t>(s.c[i].bits) << (i * static_cast<std::size_t>(k));
  return out;
}

inline SymTensor unpack_word(std::uint64_t w, int k) {
  SymTensor s;
  const std::uint64_t mask = (1u << k) - 1;
  for (std::size_t i = 0; i < kSymDim; ++i)
    s.c[i] = Scalar(static_cast<unsigned>((w >> (i * static_cast<std::size_t>(k))) & mask));
  return s;
}

inline std::uint32_t pack_bivector(const Bivector& b, int k) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < kWedgeDim; ++i)
    out |= static_cast<std::uint32_t>(b.c[i].bits) << (i * static_cast<std::size_t>(k));
  return out;
}

inline Bivector unpack_bivector(std::uint32_t w, int k) {
  Bivector b;
  const std::uint32_t mask = (1u << k) - 1;
  for (std::size_t i = 0; i < kWedgeDim; ++i)
    b.c[i] = Scalar((w >> (i * static_cast<std::size_t>(k))) & mask);
  return b;
}

/// Bits of the off-diagonal monomials.
inline std::uint64_t offdiag_mask(int k) {
  std::uint64_t m = 0;
  const std::uint64_t coord = (1u << k) - 1;
  for (std::size_t a = 0; a < kWedgeDim; ++a)
    for (std::size_t b = a + 1; b < kWedgeDim; ++b)
      m |= coord << (sym_index(a, b) * static_cast<std::size_t>(k));
  return m;
}

}  // namespace h3cover
