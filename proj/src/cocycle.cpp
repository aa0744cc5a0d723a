#include "qqg/cocycle.hpp"

#include <memory>

namespace qqg {

CocycleParams::CocycleParams(AbGroup g, long a_, long b_, long d_)
    : group(g), a(a_), b(b_), d(d_) {
  long bmax = gcd_long(g.m, g.n);
  if (a < 0 || a >= g.m || b < 0 || b >= bmax || d < 0 || d >= g.n)
    fail("BadParameters", "cocycle parameters out of range for " + g.str() + ": (" +
                              std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(d) + ")");
}

std::vector<CocycleParams> CocycleParams::family(const AbGroup& g) {
  std::vector<CocycleParams> v;
  long bmax = gcd_long(g.m, g.n);
  for (long a = 0; a < g.m; ++a)
    for (long b = 0; b < bmax; ++b)
      for (long d = 0; d < g.n; ++d) v.emplace_back(g, a, b, d);
  return v;
}

RootExp phi_abd(const CocycleParams& p, const GroupElement& x, const GroupElement& y,
                const GroupElement& z) {
  const long m = p.group.m, n = p.group.n;
  // carries of the reduced exponent sums
  long c1 = (y.e1 + z.e1) / m;
  long c2 = (y.e2 + z.e2) / n;
  // zeta_m^{a c1 x1} * zeta_n^{b c1 x2} * zeta_n^{d c2 x2}, all inside zeta_n
  long e = (n / m) * ((p.a * c1 * x.e1) % m) + p.b * c1 * x.e2 + p.d * c2 * x.e2;
  return RootExp(n, e);
}

Cocycle3::Cocycle3(AbGroup g, long root_order, Eval eval)
    : group_(g), order_(root_order), eval_(std::move(eval)) {}

Cocycle3 Cocycle3::trivial(const AbGroup& g) {
  return Cocycle3(g, 1, [](const GroupElement&, const GroupElement&, const GroupElement&) {
    return RootExp(1, 0);
  });
}

Cocycle3 Cocycle3::from_params(const CocycleParams& p) { return from_params(p, p.group.n); }

Cocycle3 Cocycle3::from_params(const CocycleParams& p, long arena_order) {
  if (arena_order % p.group.n != 0)
    fail("OrderMismatch", "cocycle arena must be a multiple of the group exponent");
  return Cocycle3(p.group, arena_order,
                  [p, arena_order](const GroupElement& x, const GroupElement& y,
                                   const GroupElement& z) {
                    return phi_abd(p, x, y, z).embed(arena_order);
                  });
}

Cocycle3 Cocycle3::from_table(const AbGroup& g, long root_order, std::vector<long> exps) {
  long o = g.order();
  if (static_cast<long>(exps.size()) != o * o * o)
    fail("BadParameters", "cocycle table has wrong size");
  auto tbl = std::make_shared<std::vector<long>>(std::move(exps));
  return Cocycle3(g, root_order,
                  [g, root_order, tbl](const GroupElement& x, const GroupElement& y,
                                       const GroupElement& z) {
                    long o = g.order();
                    long idx = (element_index(g, x) * o + element_index(g, y)) * o +
                               element_index(g, z);
                    return RootExp(root_order, (*tbl)[idx]);
                  });
}

std::vector<long> Cocycle3::table() const {
  auto elems = all_elements(group_);
  std::vector<long> t;
  t.reserve(elems.size() * elems.size() * elems.size());
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems) t.push_back(eval_(x, y, z).exp);
  return t;
}

bool verify_3cocycle(const Cocycle3& phi) {
  const AbGroup& g = phi.group();
  if (g.order() > kMaxGroupOrder) fail("BadParameters", "verify_3cocycle capped at desk scale");
  auto elems = all_elements(g);
  const GroupElement id{0, 0};
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (!phi(id, x, y).is_one() || !phi(x, id, y).is_one() || !phi(x, y, id).is_one())
        return false;
    }
  }
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        for (const auto& w : elems) {
          RootExp lhs = phi(y, z, w) * phi(x, mul(g, y, z), w) * phi(x, y, z);
          RootExp rhs = phi(x, y, mul(g, z, w)) * phi(mul(g, x, y), z, w);
          if (lhs != rhs) return false;
        }
  return true;
}

Cocycle3 pullback(const Cocycle3& phi, const AbGroup& big) {
  AbGroup small = phi.group();
  if (big.m % small.m != 0 || big.n % small.n != 0)
    fail("BadParameters", "no canonical projection " + big.str() + " -> " + small.str());
  return Cocycle3(big, phi.root_order(),
                  [phi, small](const GroupElement& x, const GroupElement& y,
                               const GroupElement& z) {
                    auto red = [&](const GroupElement& e) {
                      return element(small, e.e1, e.e2);
                    };
                    return phi(red(x), red(y), red(z));
                  });
}

Cochain2::Cochain2(const CocycleParams& p)
    : Cochain2(p, lcm_long(lcm_long(p.group.m * p.group.m, p.group.n * p.group.n),
                           p.group.m * p.group.n)) {}

Cochain2::Cochain2(const CocycleParams& p, long arena_order) : params(p), arena(arena_order) {
  big = p.group.doubled();
  long need = lcm_long(lcm_long(big.m, big.n), p.group.m * p.group.n);
  if (arena % need != 0)
    fail("OrderMismatch", "cochain arena must contain zeta_{m^2}, zeta_{n^2}, zeta_{mn}");
}

RootExp eval_J(const Cochain2& j, const GroupElement& x, const GroupElement& y) {
  const long mm = j.params.group.m, nn = j.params.group.n;
  const long m = j.big.m, n = j.big.n, N = j.arena;
  long y1p = y.e1 % mm;   // remainder of y1 by m
  long y2pp = y.e2 % nn;  // remainder of y2 by n
  RootExp r = root_in(N, m, j.params.a * x.e1 * (y.e1 - y1p)) *
              root_in(N, mm * nn, j.params.b * x.e2 * (y.e1 - y1p)) *
              root_in(N, n, j.params.d * x.e2 * (y.e2 - y2pp));
  return r;
}

Cocycle3 coboundary(const Cochain2& j) {
  AbGroup g = j.big;
  return Cocycle3(g, j.arena,
                  [j, g](const GroupElement& x, const GroupElement& y, const GroupElement& z) {
                    RootExp num = eval_J(j, y, z) * eval_J(j, x, mul(g, y, z));
                    RootExp den = eval_J(j, mul(g, x, y), z) * eval_J(j, x, y);
                    return num * den.inverse();
                  });
}

std::pair<RootExp, RootExp> twisted_double_constants(const Cocycle3& phi, const GroupElement& g,
                                                     const GroupElement& x, const GroupElement& y) {
  // conjugation is trivial in an abelian group
  RootExp theta = phi(g, x, y) * phi(x, y, g) * phi(x, g, y).inverse();
  RootExp gamma = phi(x, y, g) * phi(g, x, y) * phi(x, g, y).inverse();
  return {theta, gamma};
}

bool is_abelian_cocycle(const Cocycle3& phi) {
  const AbGroup& g = phi.group();
  if (g.order() > kMaxGroupOrder) fail("BadParameters", "is_abelian_cocycle capped at desk scale");
  auto elems = all_elements(g);
  for (const auto& a : elems)
    for (const auto& x : elems)
      for (const auto& y : elems) {
        auto [txy, gxy] = twisted_double_constants(phi, a, x, y);
        auto [tyx, gyx] = twisted_double_constants(phi, a, y, x);
        if (txy != tyx) return false;
        (void)gxy;
        (void)gyx;
      }
  return true;
}

}  // namespace qqg
