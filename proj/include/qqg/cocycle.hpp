#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qqg/cyclotomic.hpp"
#include "qqg/group.hpp"

namespace qqg {

// Parameter triple (a, b, d) indexing the 3-cocycle family on Z_m x Z_n,
// with 0 <= a < m, 0 <= b < gcd(m, n) and 0 <= d < n. For cyclic groups
// (m = 1) both a and b are forced to zero.
struct CocycleParams {
  AbGroup group;
  long a = 0, b = 0, d = 0;

  CocycleParams() = default;
  CocycleParams(AbGroup g, long a_, long b_, long d_);

  // Number of family members for the group: m * gcd(m,n) * n.
  static long family_size(const AbGroup& g) { return g.m * gcd_long(g.m, g.n) * g.n; }
  static std::vector<CocycleParams> family(const AbGroup& g);
};

// Uniform carrier for normalized 3-cochains with root-of-unity values: either
// a closed form or a dense table (the table backend supports the corrupted
// entry tests).
class Cocycle3 {
 public:
  using Eval = std::function<RootExp(const GroupElement&, const GroupElement&, const GroupElement&)>;

  Cocycle3() = default;
  Cocycle3(AbGroup g, long root_order, Eval eval);

  static Cocycle3 trivial(const AbGroup& g);
  static Cocycle3 from_params(const CocycleParams& p);
  // arena_order must be a multiple of the natural order n of the family
  static Cocycle3 from_params(const CocycleParams& p, long arena_order);
  static Cocycle3 from_table(const AbGroup& g, long root_order, std::vector<long> exps);

  const AbGroup& group() const { return group_; }
  long root_order() const { return order_; }

  RootExp operator()(const GroupElement& x, const GroupElement& y, const GroupElement& z) const {
    return eval_(x, y, z);
  }

  // Dense exponent table (row-major over element triples), for mutation.
  std::vector<long> table() const;

 private:
  AbGroup group_;
  long order_ = 1;
  Eval eval_;
};

// The closed-form value of Phi_{a,b,d} at reduced exponent triples.
RootExp phi_abd(const CocycleParams& p, const GroupElement& x, const GroupElement& y,
                const GroupElement& z);

// Exhaustive pentagon (3-cocycle) identity plus normalization.
bool verify_3cocycle(const Cocycle3& phi);

// (x,y,z) -> phi(pi x, pi y, pi z) along the canonical projection from `big`
// onto phi's group (componentwise reduction).
Cocycle3 pullback(const Cocycle3& phi, const AbGroup& big);

// The resolving 2-cochain J_{a,b,d} on the squared group G = Z_{m^2} x Z_{n^2}.
struct Cochain2 {
  AbGroup big;           // G
  CocycleParams params;  // of the quotient group
  long arena = 1;        // root-of-unity arena order (multiple of lcm(m^2, n^2, m*n))

  Cochain2() = default;
  explicit Cochain2(const CocycleParams& p);
  Cochain2(const CocycleParams& p, long arena_order);
};

RootExp eval_J(const Cochain2& j, const GroupElement& x, const GroupElement& y);

// dJ(x,y,z) = J(y,z) J(x,yz) / (J(xy,z) J(x,y)) as a cocycle on j.big.
Cocycle3 coboundary(const Cochain2& j);

// theta_g(x,y) and gamma_g(x,y) of the twisted double, conjugation trivial.
std::pair<RootExp, RootExp> twisted_double_constants(const Cocycle3& phi, const GroupElement& g,
                                                     const GroupElement& x, const GroupElement& y);

// theta_g(x,y) = theta_g(y,x) for all g, x, y.
bool is_abelian_cocycle(const Cocycle3& phi);

}  // namespace qqg
