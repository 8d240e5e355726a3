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
#include <doctest.h>

#include <random>
#include <variant>

#include "h3cover/f2.hpp"

using namespace h3cover;

namespace {

Bits random_bits(std::size_t n, std::mt19937_64& rng) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1u) b.set(i);
  return b;
}

Bits from_int(std::size_t n, std::uint64_t x) { return Bits(n, x); }

// Number of distinct vectors reachable as XORs of subsets.
std::size_t span_size(const std::vector<Bits>& vs, std::size_t n) {
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    Bits acc(n);
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1u) acc ^= vs[i];
    seen[acc.to_ulong()] = true;
  }
  std::size_t c = 0;
  for (bool s : seen) c += s;
  return c;
}

}  // namespace

TEST_SUITE("f2") {

TEST_CASE("rank against brute-force span size") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 6);
    std::vector<Bits> vs;
    for (int i = 0; i < 1 + t % 7; ++i) vs.push_back(random_bits(n, rng));
    CHECK((std::size_t{1} << f2_rank(vs)) == span_size(vs, n));
    F2Span span(n);
    for (const auto& v : vs) span.insert(v);
    for (const auto& v : vs) CHECK(span.contains(v));
  }
}

TEST_CASE("insert reports growth") {
  F2Span s(4);
  CHECK(s.insert(from_int(4, 0b0011)));
  CHECK(s.insert(from_int(4, 0b0101)));
  CHECK_FALSE(s.insert(from_int(4, 0b0110)));
  CHECK_FALSE(s.insert(from_int(4, 0)));
  CHECK(s.rank() == 2);
  CHECK(s.contains(from_int(4, 0b0110)));
  CHECK_FALSE(s.contains(from_int(4, 0b1000)));
  CHECK_THROWS_AS(s.insert(from_int(5, 1)), std::invalid_argument);
}

TEST_CASE("affine solver against enumeration") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
    AffineSystemF2 sys(n);
    for (int i = 0; i < 1 + t % 9; ++i) sys.add_equation(random_bits(n, rng), rng() & 1u);
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) count += sys.satisfied_by(from_int(n, x));
    const auto res = solve_affine_f2(sys);
    if (const auto* s = std::get_if<F2Solution>(&res)) {
      CHECK(count == (std::size_t{1} << s->kernel.size()));
      CHECK(sys.satisfied_by(s->particular));
      for (const auto& k : s->kernel) CHECK(sys.satisfied_by(s->particular ^ k));
    } else {
      CHECK(count == 0);
      CHECK(certifies(sys, std::get<F2Inconsistency>(res)));
    }
  }
}

TEST_CASE("certificate of a small contradiction") {
  AffineSystemF2 sys(2);
  sys.add_equation(from_int(2, 0b01), true, "x0 = 1");
  sys.add_equation(from_int(2, 0b10), false, "x1 = 0");
  sys.add_equation(from_int(2, 0b11), false, "x0 + x1 = 0");
  const auto res = solve_affine_f2(sys);
  REQUIRE(std::holds_alternative<F2Inconsistency>(res));
  const auto& cert = std::get<F2Inconsistency>(res);
  CHECK(certifies(sys, cert));
  CHECK(cert.rows.size() == 3);
  CHECK_FALSE(certifies(sys, F2Inconsistency{{0}}));
  CHECK_FALSE(certifies(sys, F2Inconsistency{}));
  CHECK(sys.label(2) == "x0 + x1 = 0");
}

TEST_CASE("restrict_scalars recovers an affine map") {
  // r(x) = (x0 + x2 + 1, x1, x0 + x1)
  auto r = [](const Bits& x) {
    Bits out(3);
    out[0] = x[0] ^ x[2] ^ true;
    out[1] = x[1];
    out[2] = x[0] ^ x[1];
    return out;
  };
  const AffineSystemF2 sys = restrict_scalars(3, 3, r, [](std::size_t i) { return std::to_string(i); });
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(sys.satisfied_by(from_int(3, x)) == r(from_int(3, x)).none());
  const auto res = solve_affine_f2(sys);
  REQUIRE(std::holds_alternative<F2Solution>(res));
  CHECK(std::get<F2Solution>(res).kernel.empty());
  CHECK(std::get<F2Solution>(res).particular == from_int(3, 0b100));
}

}  // TEST_SUITE
