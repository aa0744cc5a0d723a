#include "qqg/yd.hpp"

#include <sstream>

namespace qqg {

DiagonalYD yd_from_exponents(const AbGroup& g, const GroupElement& h1, const GroupElement& h2,
                             const ActionExponents& x, long arena_order) {
  if (x.x11 < 0 || x.x11 >= g.m || x.x12 < 0 || x.x12 >= g.m || x.x21 < 0 || x.x21 >= g.n ||
      x.x22 < 0 || x.x22 >= g.n)
    fail("BadParameters", "action exponents out of range for " + g.str());
  DiagonalYD yd;
  yd.group = g;
  yd.h1 = h1;
  yd.h2 = h2;
  yd.x_exponents = x;
  const long N = arena_order;
  auto q_of = [&](const GroupElement& h, long xm, long xn) {
    // action of h = g1^{c1} g2^{c2}: zeta_m^{xm c1} zeta_n^{xn c2}
    return root_in(N, g.m, xm * h.e1) * root_in(N, g.n, xn * h.e2);
  };
  yd.q[0][0] = q_of(h1, x.x11, x.x21);
  yd.q[0][1] = q_of(h1, x.x12, x.x22);
  yd.q[1][0] = q_of(h2, x.x11, x.x21);
  yd.q[1][1] = q_of(h2, x.x12, x.x22);
  return yd;
}

std::function<RootExp(const GroupElement&, const GroupElement&)> phi_tilde(const Cocycle3& phi,
                                                                           const GroupElement& g) {
  return [phi, g](const GroupElement& e, const GroupElement& f) {
    return phi(g, e, f) * phi(e, f, g) * phi(e, g, f).inverse();
  };
}

bool verify_2cocycle(const AbGroup& g,
                     const std::function<RootExp(const GroupElement&, const GroupElement&)>& c) {
  auto elems = all_elements(g);
  for (const auto& e : elems)
    for (const auto& f : elems)
      for (const auto& h : elems) {
        RootExp lhs = c(e, f) * c(mul(g, e, f), h);
        RootExp rhs = c(f, h) * c(e, mul(g, f, h));
        if (lhs != rhs) return false;
      }
  return true;
}

DiagonalYD twist_action(const DiagonalYD& yd, const Cochain2& j) {
  if (!(yd.group == j.big))
    fail("BadParameters", "twisting cochain lives on " + j.big.str() + ", datum on " +
                              yd.group.str());
  DiagonalYD out = yd;
  const GroupElement hs[2] = {yd.h1, yd.h2};
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      RootExp ratio = eval_J(j, hs[i], hs[k]) * eval_J(j, hs[k], hs[i]).inverse();
      out.q[i][k] = ratio * yd.q[i][k];
    }
  return out;
}

bool DynkinDiagram::operator==(const DynkinDiagram& o) const {
  if (!(v1 == o.v1) || !(v2 == o.v2)) return false;
  if (edge.has_value() != o.edge.has_value()) return false;
  return !edge || *edge == *o.edge;
}

DynkinDiagram dynkin(const DiagonalYD& yd) {
  DynkinDiagram d;
  d.v1 = yd.q11();
  d.v2 = yd.q22();
  RootExp label = yd.q12() * yd.q21();
  if (!label.is_one()) d.edge = label;
  return d;
}

bool dynkin_invariant_under_twist(const DiagonalYD& yd, const Cochain2& j) {
  return dynkin(yd) == dynkin(twist_action(yd, j));
}

std::string dynkin_dot(const DynkinDiagram& d) {
  std::ostringstream os;
  os << "graph dynkin {\n";
  os << "  v1 [label=\"q11=" << d.v1.str() << "\"];\n";
  os << "  v2 [label=\"q22=" << d.v2.str() << "\"];\n";
  if (d.edge) os << "  v1 -- v2 [label=\"q12q21=" << d.edge->str() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qqg
