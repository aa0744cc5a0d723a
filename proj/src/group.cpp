#include "qqg/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qqg/cyclotomic.hpp"

namespace qqg {

AbGroup::AbGroup(long m_, long n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) fail("BadParameters", "group orders must be positive");
  if (n % m != 0) fail("BadParameters", "invariant factor condition m | n violated for " + str());
}

std::string AbGroup::str() const {
  std::ostringstream os;
  if (m == 1)
    os << "Z" << n;
  else
    os << "Z" << m << "xZ" << n;
  return os.str();
}

AbGroup AbGroup::parse(const std::string& s) {
  auto x = s.find('x');
  auto read = [](const std::string& part) -> long {
    if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z'))
      fail("BadParameters", "bad group literal: " + part);
    try {
      return std::stol(part.substr(1));
    } catch (const std::exception&) {
      fail("BadParameters", "bad group literal: " + part);
    }
  };
  if (x == std::string::npos) return AbGroup(1, read(s));
  return AbGroup(read(s.substr(0, x)), read(s.substr(x + 1)));
}

GroupElement element(const AbGroup& g, long i, long j) {
  GroupElement e;
  e.e1 = ((i % g.m) + g.m) % g.m;
  e.e2 = ((j % g.n) + g.n) % g.n;
  return e;
}

GroupElement mul(const AbGroup& g, const GroupElement& a, const GroupElement& b) {
  return element(g, a.e1 + b.e1, a.e2 + b.e2);
}

GroupElement inv(const AbGroup& g, const GroupElement& a) { return element(g, -a.e1, -a.e2); }

GroupElement pow(const AbGroup& g, const GroupElement& a, long k) {
  long k1 = ((k % g.m) + g.m) % g.m;
  long k2 = ((k % g.n) + g.n) % g.n;
  return element(g, a.e1 * k1, a.e2 * k2);
}

long element_order(const AbGroup& g, const GroupElement& a) {
  long o1 = g.m / std::gcd(g.m, a.e1);
  long o2 = g.n / std::gcd(g.n, a.e2);
  return std::lcm(o1, o2);
}

std::vector<GroupElement> all_elements(const AbGroup& g) {
  std::vector<GroupElement> v;
  v.reserve(g.order());
  for (long i = 0; i < g.m; ++i)
    for (long j = 0; j < g.n; ++j) v.push_back(GroupElement{i, j});
  return v;
}

long element_index(const AbGroup& g, const GroupElement& a) { return a.e1 * g.n + a.e2; }

namespace {

void check_desk_scale(const AbGroup& g, const char* op) {
  if (g.order() > kMaxGroupOrder)
    fail("BadParameters", std::string(op) + " capped at group order " +
                              std::to_string(kMaxGroupOrder) + ", got " + std::to_string(g.order()));
}

}  // namespace

bool generates(const AbGroup& g, const GroupElement& h1, const GroupElement& h2) {
  check_desk_scale(g, "generates");
  std::set<GroupElement> closure;
  std::vector<GroupElement> frontier{GroupElement{0, 0}};
  closure.insert(GroupElement{0, 0});
  while (!frontier.empty()) {
    GroupElement cur = frontier.back();
    frontier.pop_back();
    for (const auto& step : {h1, h2}) {
      GroupElement nxt = mul(g, cur, step);
      if (closure.insert(nxt).second) frontier.push_back(nxt);
    }
  }
  return static_cast<long>(closure.size()) == g.order();
}

DualExponents dual_exponents(const AbGroup& g, const GroupElement& h1, const GroupElement& h2) {
  check_desk_scale(g, "dual_exponents");
  if (!generates(g, h1, h2)) fail("NotGenerating", "pair does not generate " + g.str());
  const GroupElement g1 = element(g, 1, 0);
  const GroupElement g2 = element(g, 0, 1);
  DualExponents out;
  bool found_s = false, found_t = false;
  for (long s1 = 0; s1 < g.m && !found_s; ++s1)
    for (long s2 = 0; s2 < g.n && !found_s; ++s2)
      if (mul(g, pow(g, h1, s1), pow(g, h2, s2)) == g1) {
        out.s1 = s1;
        out.s2 = s2;
        found_s = true;
      }
  for (long t1 = 0; t1 < g.m && !found_t; ++t1)
    for (long t2 = 0; t2 < g.n && !found_t; ++t2)
      if (mul(g, pow(g, h1, t1), pow(g, h2, t2)) == g2) {
        out.t1 = t1;
        out.t2 = t2;
        found_t = true;
      }
  if (!found_s || !found_t)
    fail("InternalInconsistency", "generating pair admits no dual exponents");
  return out;
}

CyclicForm standardize_cyclic(const AbGroup& g, const GroupElement& h1, const GroupElement& h2) {
  if (!g.cyclic()) fail("NotCyclic", g.str() + " is not cyclic");
  check_desk_scale(g, "standardize_cyclic");
  if (!generates(g, h1, h2)) fail("NotGenerating", "pair does not generate " + g.str());
  long s0 = h1.e2, t0 = h2.e2;
  if (s0 == 0 && t0 == 0) {
    // only reachable for the trivial group
    return CyclicForm{element(g, 0, 0), 0, 1};
  }
  long d = std::gcd(s0, t0);
  // gcd(d, n) = 1 because the pair generates, so g^d is again a generator.
  CyclicForm out;
  out.gen = element(g, 0, d);
  out.s = s0 / d;
  out.t = t0 / d;
  return out;
}

namespace {

// (u, v) extends to an automorphism image of the canonical generators: the
// assignment is well-defined and the images still generate.
bool is_standard_pair(const AbGroup& g, const GroupElement& u, const GroupElement& v) {
  if (!pow(g, u, g.m).is_identity()) return false;
  if (!pow(g, v, g.n).is_identity()) return false;
  return generates(g, u, v);
}

// Subgroup generated by a single element, as a sorted set.
std::set<GroupElement> cyclic_subgroup(const AbGroup& g, const GroupElement& a) {
  std::set<GroupElement> s;
  GroupElement cur{0, 0};
  do {
    s.insert(cur);
    cur = mul(g, cur, a);
  } while (!cur.is_identity());
  return s;
}

// (u, v) generates an internal direct factor isomorphic to Z_a x Z_b with u,v
// as standard generators.
bool spans_factor(const AbGroup& g, const GroupElement& u, const GroupElement& v, long a, long b) {
  if (element_order(g, u) != a || element_order(g, v) != b) return false;
  auto cu = cyclic_subgroup(g, u);
  auto cv = cyclic_subgroup(g, v);
  std::vector<GroupElement> inter;
  std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(inter));
  return inter.size() == 1;  // trivial intersection
}

}  // namespace

StandardizeReport standardize_pair(const AbGroup& g, const GroupElement& h1,
                                   const GroupElement& h2) {
  check_desk_scale(g, "standardize_pair");
  if (!generates(g, h1, h2)) fail("NotGenerating", "pair does not generate " + g.str());

  StandardizeReport rep;
  if (element_order(g, h2) == g.n) {
    // h2 can serve as the big standard generator; peel off h1 = u * h2^a.
    for (long a = 0; a < g.m; ++a) {
      GroupElement u = mul(g, h1, pow(g, h2, -a));
      if (is_standard_pair(g, u, h2)) {
        rep.kind = StandardizeReport::Kind::OrderN;
        rep.u = u;
        rep.v = h2;
        rep.a = a;
        return rep;
      }
    }
    fail("InternalInconsistency", "order-n generator admits no standard completion");
  }

  // Split decomposition: exhaustive search, lexicographically first in
  // (m1, m2, n1, n2, a, b, witnesses). The decomposition is not unique; this
  // fixes a deterministic representative.
  if (g.order() > 256)
    fail("BadParameters", "standardize_pair split search capped at group order 256");
  auto elems = all_elements(g);
  auto factor_pairs = [&](long a, long b) {
    std::vector<std::pair<GroupElement, GroupElement>> out;
    for (const auto& u : elems)
      for (const auto& v : elems)
        if (spans_factor(g, u, v, a, b)) out.emplace_back(u, v);
    return out;
  };
  auto whole_group = [&](const GroupElement& a, const GroupElement& b, const GroupElement& c,
                         const GroupElement& d) {
    std::set<GroupElement> closure{GroupElement{0, 0}};
    std::vector<GroupElement> frontier{GroupElement{0, 0}};
    while (!frontier.empty()) {
      GroupElement cur = frontier.back();
      frontier.pop_back();
      for (const auto& step : {a, b, c, d}) {
        GroupElement nxt = mul(g, cur, step);
        if (closure.insert(nxt).second) frontier.push_back(nxt);
      }
    }
    return static_cast<long>(closure.size()) == g.order();
  };
  for (long m1 = 1; m1 <= g.m; ++m1) {
    if (g.m % m1 != 0) continue;
    long n1 = g.m / m1;
    for (long m2 = 1; m2 <= g.n; ++m2) {
      if (g.n % m2 != 0) continue;
      long n2 = g.n / m2;
      if (m2 % m1 != 0 || n2 % n1 != 0) continue;
      if (std::gcd(m2, n2) != 1) continue;
      auto qs = factor_pairs(m1, m2);
      auto ws = factor_pairs(n1, n2);
      if (qs.empty() || ws.empty()) continue;
      for (long a = 0; a < n2; ++a)
        for (long b = 0; b < m2; ++b)
          for (const auto& [q1, q2] : qs)
            for (const auto& [w1, w2] : ws) {
              // g = q2 w1 w2^a, h = q1 q2^b w2
              GroupElement lhs1 = mul(g, q2, mul(g, w1, pow(g, w2, a)));
              GroupElement lhs2 = mul(g, q1, mul(g, pow(g, q2, b), w2));
              if (!(lhs1 == h1 && lhs2 == h2)) continue;
              if (!whole_group(q1, q2, w1, w2)) continue;
              rep.kind = StandardizeReport::Kind::Split;
              rep.m1 = m1;
              rep.m2 = m2;
              rep.n1 = n1;
              rep.n2 = n2;
              rep.a = a;
              rep.b = b;
              rep.q1 = q1;
              rep.q2 = q2;
              rep.w1 = w1;
              rep.w2 = w2;
              return rep;
            }
    }
  }
  fail("InternalInconsistency", "no split decomposition found for generating pair");
}

}  // namespace qqg
