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
#include <stdexcept>
#include <variant>

#include "h3cover/construction.hpp"

namespace h3cover {

Matrix4 ax_matrix(const Field& F, Scalar x) {
  if (!F.contains(x)) throw std::invalid_argument("ax_matrix: scalar outside the field");
  Matrix4 a = Matrix4::identity();
  a.m[0][1] = x;
  a.m[2][3] = x;
  return a;
}

std::array<Bivector, 6> ax_action_table(const Field& F, Scalar x) {
  const Matrix4 a = ax_matrix(F, x);
  std::array<Bivector, 6> out;
  for (int i = 1; i <= 6; ++i) out[static_cast<std::size_t>(i - 1)] = act_w(F, a, w(i));
  return out;
}

std::array<Bivector, 6> ax_expected_table(const Field& F, Scalar x) {
  const Scalar x2 = F.square(x);
  return {w(1),
          w(2) + scale(F, x, w(3)) + scale(F, x, w(4)) + scale(F, x2, w(5)),
          w(3) + scale(F, x, w(5)),
          w(4) + scale(F, x, w(5)),
          w(5),
          w(6)};
}

std::array<Scalar, 4> subgroup_f(const Field& F, Scalar alpha) {
  if (!F.contains(alpha) || alpha.bits < 2)
    throw std::invalid_argument("subgroup_f: alpha must lie in the field and outside F2");
  return {F.zero(), F.one(), alpha, alpha + F.one()};
}

AffineVertex vertex_u() { return {e(3), f(3)}; }

AffineVertex vertex_vx(const Field& F, Scalar x) { return {e(1) + scale(F, x, e(2)), f(1)}; }

SymTensor lambda_ax(const CoverVoltage& ell, Scalar x) {
  const Field& F = ell.field();
  const std::array<AffineVertex, 3> path{vertex_vx(F, x), vertex_u(), vertex_vx(F, F.zero())};
  return walk_voltage(ell, path);
}

SymTensor cocycle_f(const CoverVoltage& ell, Scalar x, Scalar y) {
  const Field& F = ell.field();
  return lambda_ax(ell, x + y) + act_s2(F, ax_matrix(F, y), lambda_ax(ell, x)) + lambda_ax(ell, y);
}

namespace {

Report make(const char* check, const Field& F) {
  Report r;
  r.check = check;
  r.field = F.order();
  r.mode = Mode::exhaustive;
  return r;
}

Scalar default_alpha(const Field& F, std::optional<Scalar> alpha) {
  return alpha ? *alpha : F.generator();
}

SymTensor w_sq(const Field& F, Scalar s, int i) { return scale(F, s, square(F, w(i))); }

// [x, m] -> (A_x, lambda(A_x) + m).
ExtensionElement embed(const CoverVoltage& ell, Scalar x, const SymTensor& m) {
  return {ax_matrix(ell.field(), x), project_n(lambda_ax(ell, x) + m)};
}

}  // namespace

Report verify_dart_and_lambda(const Field& F) {
  Report r = make("dart-lambda", F);
  const CoverVoltage ell(F);
  const SymTensor w2w5 = monomial(2, 5);
  const SymTensor w4w5 = monomial(4, 5);
  for (Scalar x : F.elements()) {
    ++r.samples;
    const Matrix4 a = ax_matrix(F, x);
    const SymTensor dart = ell.ell(vertex_u(), vertex_vx(F, x));
    const SymTensor want = w2w5 + scale(F, x, w4w5);
    if (!(dart == want) || !(ell.ell(vertex_vx(F, x), vertex_u()) == want))
      r.violation({{"x", x.bits}, {"dart", to_json(dart)}, {"expected", to_json(want)}});
    const SymTensor lam = lambda_ax(ell, x);
    if (!(lam == scale(F, x, w4w5)))
      r.violation({{"x", x.bits}, {"lambda", to_json(lam)}, {"expected", to_json(scale(F, x, w4w5))}});
    if (!(act(F, vertex_vx(F, F.zero()), a) == vertex_vx(F, x)))
      r.violation({{"x", x.bits}, {"what", "A_x does not map v_0 to v_x"}});
    if (!(det(F, a) == F.one())) r.violation({{"x", x.bits}, {"what", "det A_x != 1"}});
    const auto got = ax_action_table(F, x);
    const auto expect = ax_expected_table(F, x);
    for (std::size_t i = 0; i < 6; ++i)
      if (!(got[i] == expect[i]))
        r.violation({{"x", x.bits}, {"w", i + 1}, {"image", to_json(got[i])},
                     {"expected", to_json(expect[i])}});
    for (Scalar y : F.elements())
      if (!(mul(F, a, ax_matrix(F, y)) == ax_matrix(F, x + y)))
        r.violation({{"x", x.bits}, {"y", y.bits}, {"what", "A_x A_y != A_(x+y)"}});
  }
  return r.finish();
}

Report verify_cocycle(const Field& F, std::optional<Scalar> alpha_opt) {
  if (F.order() == 2)
    return not_applicable("cocycle", 2, "the subgroup <1, alpha> needs alpha outside F2");
  Report r = make("cocycle", F);
  const CoverVoltage ell(F);
  const Scalar alpha = default_alpha(F, alpha_opt);
  const auto xs = subgroup_f(F, alpha);
  const SymTensor w5sq = square(F, w(5));
  for (Scalar x : xs)
    for (Scalar y : xs) {
      ++r.samples;
      const SymTensor c = cocycle_f(ell, x, y);
      const SymTensor want = scale(F, F.mul(x, y), w5sq);
      if (!(c == want))
        r.violation({{"x", x.bits}, {"y", y.bits}, {"cocycle", to_json(c)}, {"expected", to_json(want)}});
      if (!(c == cocycle_f(ell, y, x))) r.violation({{"x", x.bits}, {"y", y.bits}, {"what", "asymmetric"}});
    }
  // The product rule [x,m][y,n] = [x+y, xy w5^2 + m^(A_y) + n] agrees with
  // composition in the extension under [x, m] -> (A_x, lambda(A_x) + m).
  Rng rng = sample_rng(0xc0c, static_cast<std::uint64_t>(F.order()));
  std::size_t products = 0;
  for (Scalar x : xs)
    for (Scalar y : xs)
      for (int s = 0; s < 4; ++s) {
        SymTensor m, n;
        for (int i = 1; i <= 6; ++i) {
          m += w_sq(F, random_scalar(F, rng), i);
          n += w_sq(F, random_scalar(F, rng), i);
        }
        const ExtensionElement lhs = compose(F, embed(ell, x, m), embed(ell, y, n));
        const SymTensor prod = scale(F, F.mul(x, y), w5sq) + act_s2(F, ax_matrix(F, y), m) + n;
        const ExtensionElement rhs = embed(ell, x + y, prod);
        ++products;
        if (!(lhs == rhs))
          r.violation({{"x", x.bits}, {"y", y.bits}, {"what", "product rule disagrees with composition"}});
      }
  r.samples += products;
  r.details["alpha"] = alpha.bits;
  r.details["pairs"] = 16;
  r.details["product_rule_checks"] = products;
  return r.finish();
}

Bits diag_bits(const SymTensor& s, int degree) {
  const auto k = static_cast<std::size_t>(degree);
  Bits b(kWedgeDim * k);
  for (std::size_t i = 0; i < kWedgeDim; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (s.c[sym_index(i, i)].bits >> j & 1u) b.set(i * k + j);
  return b;
}

SymTensor diag_from_bits(const Bits& b, int degree) {
  const auto k = static_cast<std::size_t>(degree);
  SymTensor s;
  for (std::size_t i = 0; i < kWedgeDim; ++i) {
    unsigned v = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (b.test(i * k + j)) v |= 1u << j;
    s.c[sym_index(i, i)] = Scalar(v);
  }
  return s;
}

namespace {

std::string monomial_label(std::size_t bit, int k) {
  const auto [a, b] = sym_monomial(bit / static_cast<std::size_t>(k));
  return "w" + std::to_string(a + 1) + "w" + std::to_string(b + 1) + " bit " +
         std::to_string(bit % static_cast<std::size_t>(k));
}

}  // namespace

std::optional<AffineSubspaceF2> order2_solution_space(const Field& F, Scalar x) {
  const int k = F.degree();
  const S2Action ax(F, ax_matrix(F, x));
  const SymTensor rhs = scale(F, F.square(x), square(F, w(5)));
  const std::size_t unknowns = kWedgeDim * static_cast<std::size_t>(k);
  const std::size_t outputs = kSymDim * static_cast<std::size_t>(k);
  const AffineSystemF2 sys = restrict_scalars(
      unknowns, outputs,
      [&](const Bits& m) {
        const SymTensor t = diag_from_bits(m, k);
        return to_bits(ax.apply(t) + t + rhs, k);
      },
      [&](std::size_t i) { return monomial_label(i, k); });
  auto sol = solve_affine_f2(sys);
  if (std::holds_alternative<F2Inconsistency>(sol)) return std::nullopt;
  auto& s = std::get<F2Solution>(sol);
  return AffineSubspaceF2{std::move(s.particular), std::move(s.kernel)};
}

std::vector<Bits> subspace_s(const Field& F) {
  const int k = F.degree();
  std::vector<Bits> out;
  for (Scalar b : F.f2_basis()) {
    out.push_back(diag_bits(w_sq(F, b, 1), k));
    out.push_back(diag_bits(w_sq(F, b, 3) + w_sq(F, b, 4), k));
    out.push_back(diag_bits(w_sq(F, b, 5), k));
    out.push_back(diag_bits(w_sq(F, b, 6), k));
  }
  return out;
}

Report verify_order2(const Field& F, std::optional<Scalar> alpha_opt) {
  if (F.order() == 2) return not_applicable("order2", 2, "the subgroup <1, alpha> needs alpha outside F2");
  Report r = make("order2", F);
  const int k = F.degree();
  const Scalar alpha = default_alpha(F, alpha_opt);
  const auto xs = subgroup_f(F, alpha);
  const std::size_t dim = kWedgeDim * static_cast<std::size_t>(k);
  F2Span s(dim);
  for (const auto& b : subspace_s(F)) s.insert(b);
  const Bits w3sq = diag_bits(square(F, w(3)), k);
  if (s.rank() != 4 * static_cast<std::size_t>(k)) r.violation({{"what", "S has wrong F2 rank"}, {"rank", s.rank()}});
  if (s.contains(w3sq)) r.violation({{"what", "w3^2 lies in S"}});
  for (std::size_t i = 1; i < 4; ++i) {
    const Scalar x = xs[i];
    ++r.samples;
    const auto sol = order2_solution_space(F, x);
    if (!sol) {
      r.violation({{"x", x.bits}, {"what", "order-2 system inconsistent"}});
      continue;
    }
    // Same dimension, kernel inside S, particular solution in w3^2 + S.
    bool ok = sol->kernel.size() == s.rank();
    for (const auto& v : sol->kernel) ok = ok && s.contains(v);
    ok = ok && s.contains(sol->particular ^ w3sq);
    if (!ok)
      r.violation({{"x", x.bits}, {"kernel_dim", sol->kernel.size()},
                   {"particular", to_json(diag_from_bits(sol->particular, k))}});
  }
  // A-invariance of S.
  for (Scalar y : xs) {
    const S2Action ay(F, ax_matrix(F, y));
    for (const auto& b : subspace_s(F)) {
      ++r.samples;
      const SymTensor img = ay.apply(diag_from_bits(b, k));
      if (!in_w2(img) || !s.contains(diag_bits(img, k)))
        r.violation({{"y", y.bits}, {"what", "S not A-invariant"}, {"image", to_json(img)}});
    }
  }
  r.details["alpha"] = alpha.bits;
  r.details["s_rank"] = s.rank();
  return r.finish();
}

SplittingResult splitting_system(const Field& F, Scalar alpha) {
  const int k = F.degree();
  const auto kk = static_cast<std::size_t>(k);
  const auto xs = subgroup_f(F, alpha);
  const std::size_t half = kWedgeDim * kk;
  const std::size_t unknowns = 2 * half + 3;
  const std::size_t block = kSymDim * kk;
  const S2Action a1(F, ax_matrix(F, xs[1]));
  const S2Action aa(F, ax_matrix(F, xs[2]));
  const S2Action a3(F, ax_matrix(F, xs[3]));
  const SymTensor w5sq = square(F, w(5));
  const SymTensor u = big_u();
  const char* names[3] = {"1", "alpha", "alpha+1"};

  auto residual = [&](const Bits& z) {
    Bits c1(half), ca(half);
    for (std::size_t i = 0; i < half; ++i) {
      c1[i] = z[i];
      ca[i] = z[half + i];
    }
    const SymTensor m1 = diag_from_bits(c1, k);
    const SymTensor ma = diag_from_bits(ca, k);
    // [1, c1][alpha, ca] = [alpha + 1, alpha w5^2 + c1^(A_alpha) + ca].
    const SymTensor m3 = scale(F, alpha, w5sq) + aa.apply(m1) + ma;
    const std::array<const S2Action*, 3> acts{&a1, &aa, &a3};
    const std::array<SymTensor, 3> ms{m1, ma, m3};
    Bits out(3 * block);
    for (std::size_t e = 0; e < 3; ++e) {
      SymTensor r = acts[e]->apply(ms[e]) + ms[e] + scale(F, F.square(xs[e + 1]), w5sq);
      if (z[2 * half + e]) r += u;
      const Bits b = to_bits(r, k);
      for (std::size_t i = 0; i < block; ++i) out[e * block + i] = b[i];
    }
    return out;
  };
  SplittingResult res;
  res.system = restrict_scalars(unknowns, 3 * block, residual, [&](std::size_t i) {
    return std::string("order 2 of [") + names[i / block] + ", c] at " + monomial_label(i % block, k);
  });
  auto sol = solve_affine_f2(res.system);
  if (auto* cert = std::get_if<F2Inconsistency>(&sol)) res.certificate = *cert;
  return res;
}

std::uint64_t brute_force_lifts(const Field& F, Scalar alpha, bool parallel) {
  const int k = F.degree();
  const auto xs = subgroup_f(F, alpha);
  const CoverVoltage ell(F);
  const std::size_t count = std::size_t{1} << (6 * k);
  const S2Action a1(F, ax_matrix(F, xs[1]));
  const S2Action aa(F, ax_matrix(F, xs[2]));
  const S2Action a3(F, ax_matrix(F, xs[3]));
  auto elem = [&](Scalar x, std::size_t m) {
    Bits b(6 * static_cast<std::size_t>(k), m);
    return embed(ell, x, diag_from_bits(b, k));
  };
  // Composition with the action of the right factor tabulated.
  auto compose_with = [&](const S2Action& right, const ExtensionElement& a, const ExtensionElement& b) {
    return ExtensionElement{mul(F, a.g, b.g), project_n(right.apply(a.n.rep())) + b.n};
  };
  auto is_identity = [](const ExtensionElement& e) {
    return e.g == Matrix4::identity() && e.n.is_zero();
  };
  std::vector<ExtensionElement> e1(count), ea(count);
  std::vector<char> ok1(count), oka(count);
  for (std::size_t m = 0; m < count; ++m) {
    e1[m] = elem(xs[1], m);
    ea[m] = elem(xs[2], m);
    ok1[m] = is_identity(compose_with(a1, e1[m], e1[m]));
    oka[m] = is_identity(compose_with(aa, ea[m], ea[m]));
  }
  std::uint64_t found = 0;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for if (parallel) schedule(dynamic, 16) reduction(+ : found)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto m1 = static_cast<std::size_t>(i);
    for (std::size_t ma = 0; ma < count; ++ma) {
      if (!ok1[m1] || !oka[ma]) continue;
      const ExtensionElement p = compose_with(aa, e1[m1], ea[ma]);
      if (is_identity(compose_with(a3, p, p))) ++found;
    }
  }
  return found;
}

Report verify_nonsplit(const Field& F, const VerifyOptions& opt) {
  if (F.order() == 2)
    return not_applicable("nonsplit", 2, "the statement requires |F| > 2");
  Report r = make("nonsplit", F);
  std::vector<Scalar> alphas{F.generator()};
  if (F.order() == 16) alphas.push_back(Scalar(4u));
  json systems = json::array();
  for (Scalar alpha : alphas) {
    ++r.samples;
    const SplittingResult s = splitting_system(F, alpha);
    json entry{{"alpha", alpha.bits}, {"unknowns", s.system.unknowns()}, {"equations", s.system.equations()}};
    if (!s.certificate) {
      r.violation({{"alpha", alpha.bits}, {"what", "splitting system is consistent"}});
    } else {
      const bool valid = certifies(s.system, *s.certificate);
      json rows = json::array();
      for (std::size_t row : s.certificate->rows) rows.push_back(s.system.label(row));
      entry["certificate"] = {{"rows", s.certificate->rows}, {"labels", std::move(rows)}, {"valid", valid}};
      if (!valid) r.violation({{"alpha", alpha.bits}, {"what", "certificate does not certify"}});
    }
    systems.push_back(std::move(entry));
  }
  r.details["systems"] = std::move(systems);
  if (F.order() == 4) {
    const std::uint64_t pairs = std::uint64_t{1} << 24;
    const std::uint64_t lifts = brute_force_lifts(F, F.generator());
    r.samples += pairs;
    r.details["brute_force"] = {{"pairs", pairs}, {"lifts", lifts}};
    if (lifts) r.violation({{"what", "brute force found a subgroup lift"}, {"lifts", lifts}});
  }
  (void)opt;
  return r.finish();
}

}  // namespace h3cover
