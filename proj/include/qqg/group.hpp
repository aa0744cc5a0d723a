#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qqg/errors.hpp"

namespace qqg {

// Z_m x Z_n with m | n; m = 1 encodes the cyclic group Z_n.
struct AbGroup {
  long m = 1;
  long n = 1;

  AbGroup() = default;
  AbGroup(long m_, long n_);

  long order() const { return m * n; }
  bool cyclic() const { return m == 1; }
  // The group of squared orders hosting cocycle resolutions.
  AbGroup doubled() const { return AbGroup(m * m, n * n); }

  bool operator==(const AbGroup& o) const { return m == o.m && n == o.n; }
  std::string str() const;

  // Parse "Z<n>" or "Z<m>xZ<n>" group literals.
  static AbGroup parse(const std::string& s);
};

struct GroupElement {
  long e1 = 0;
  long e2 = 0;

  bool operator==(const GroupElement& o) const { return e1 == o.e1 && e2 == o.e2; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const {
    return e1 != o.e1 ? e1 < o.e1 : e2 < o.e2;
  }
  bool is_identity() const { return e1 == 0 && e2 == 0; }
};

GroupElement element(const AbGroup& g, long i, long j);
GroupElement mul(const AbGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement inv(const AbGroup& g, const GroupElement& a);
GroupElement pow(const AbGroup& g, const GroupElement& a, long k);
long element_order(const AbGroup& g, const GroupElement& a);
std::vector<GroupElement> all_elements(const AbGroup& g);
// index of an element in the all_elements enumeration (row-major)
long element_index(const AbGroup& g, const GroupElement& a);

// Subgroup generated by {h1, h2} is the whole group, by closure enumeration.
bool generates(const AbGroup& g, const GroupElement& h1, const GroupElement& h2);

struct DualExponents {
  long s1 = 0, s2 = 0, t1 = 0, t2 = 0;
};

// Residues with g1 = h1^s1 h2^s2 and g2 = h1^t1 h2^t2, lexicographically
// first over (s1,s2) then (t1,t2) with 0 <= s1,t1 < m and 0 <= s2,t2 < n.
DualExponents dual_exponents(const AbGroup& g, const GroupElement& h1, const GroupElement& h2);

struct CyclicForm {
  GroupElement gen;
  long s = 0;
  long t = 0;
};

// For cyclic groups: a generator g and coprime exponents with h1 = g^s,
// h2 = g^t.
CyclicForm standardize_cyclic(const AbGroup& g, const GroupElement& h1, const GroupElement& h2);

// Normal form of a generating pair. Either the order-n form
// (h1 = u * v^a, h2 = v for a standard pair (u, v)), or the split
// decomposition with the factor data (m1, m2, n1, n2, a, b).
struct StandardizeReport {
  enum class Kind { OrderN, Split };
  Kind kind = Kind::OrderN;

  // OrderN: standard generators (u, v) with h1 = u v^a, h2 = v, 0 <= a < m.
  GroupElement u, v;
  long a = 0;

  // Split: m = m1 n1, n = m2 n2, m1 | m2, n1 | n2, gcd(m2, n2) = 1,
  // h1 = q2 w1 w2^a, h2 = q1 q2^b w2 with (q1, q2) standard in the
  // Z_{m1} x Z_{m2} factor and (w1, w2) standard in the Z_{n1} x Z_{n2}
  // factor.
  long m1 = 0, m2 = 0, n1 = 0, n2 = 0, b = 0;
  GroupElement q1, q2, w1, w2;
};

StandardizeReport standardize_pair(const AbGroup& g, const GroupElement& h1,
                                   const GroupElement& h2);

// Exhaustive routines reject groups above this order.
constexpr long kMaxGroupOrder = 10000;

}  // namespace qqg
