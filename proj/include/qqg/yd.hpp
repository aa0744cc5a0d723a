#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "qqg/cocycle.hpp"
#include "qqg/cyclotomic.hpp"
#include "qqg/group.hpp"

namespace qqg {

// Exponents of the action matrix with respect to the canonical generators:
// g1 acts on X_j by zeta_m^{x1j}, g2 by zeta_n^{x2j}.
struct ActionExponents {
  long x11 = 0, x12 = 0, x21 = 0, x22 = 0;
};

// A rank-2 diagonal Yetter-Drinfeld datum: degrees h1, h2 and the 2x2 action
// matrix q_ij (the action of h_i on X_j), all values roots of unity.
struct DiagonalYD {
  AbGroup group;
  GroupElement h1, h2;
  std::array<std::array<RootExp, 2>, 2> q;
  std::optional<ActionExponents> x_exponents;

  const RootExp& q11() const { return q[0][0]; }
  const RootExp& q12() const { return q[0][1]; }
  const RootExp& q21() const { return q[1][0]; }
  const RootExp& q22() const { return q[1][1]; }
};

// Datum with canonical-generator action exponents: q_ij derived from the
// product formulas q11 = zeta_m^{x11 a1} zeta_n^{x21 a2}, etc., where
// (a1, a2), (b1, b2) are the exponents of h1, h2.
DiagonalYD yd_from_exponents(const AbGroup& g, const GroupElement& h1, const GroupElement& h2,
                             const ActionExponents& x, long arena_order);

// The 2-cochain tilde-Phi_g: (e, f) -> Phi(g,e,f) Phi(e,f,g) / Phi(e,g,f).
std::function<RootExp(const GroupElement&, const GroupElement&)> phi_tilde(const Cocycle3& phi,
                                                                           const GroupElement& g);

// Check the 2-cocycle identity of a 2-cochain exhaustively.
bool verify_2cocycle(const AbGroup& g,
                     const std::function<RootExp(const GroupElement&, const GroupElement&)>& c);

// New datum with q_ij scaled by J(h_i, h_j) / J(h_j, h_i); degrees unchanged.
DiagonalYD twist_action(const DiagonalYD& yd, const Cochain2& j);

struct DynkinDiagram {
  RootExp v1, v2;                 // vertex labels q11, q22
  std::optional<RootExp> edge;    // label q12*q21 when != 1

  bool operator==(const DynkinDiagram& o) const;
};

DynkinDiagram dynkin(const DiagonalYD& yd);

bool dynkin_invariant_under_twist(const DiagonalYD& yd, const Cochain2& j);

// DOT rendering with exact root-of-unity labels.
std::string dynkin_dot(const DynkinDiagram& d);

}  // namespace qqg
