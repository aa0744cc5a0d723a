#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qqg/cocycle.hpp"
#include "qqg/cyclotomic.hpp"
#include "qqg/group.hpp"
#include "qqg/yd.hpp"

namespace qqg {

// One congruence problem: degrees (alpha, beta) of the generating pair inside
// the squared group G, the dual exponents (s, t), and the canonical action
// exponents x.
struct CongruenceInstance {
  AbGroup small;  // Z_m x Z_n, the target group
  AbGroup big;    // its square
  long alpha1 = 0, alpha2 = 0;  // h1 = g1^alpha1 g2^alpha2
  long beta1 = 0, beta2 = 0;    // h2 = g1^beta1 g2^beta2
  ActionExponents x;
  DualExponents dual;

  GroupElement h1() const { return GroupElement{alpha1, alpha2}; }
  GroupElement h2() const { return GroupElement{beta1, beta2}; }
};

// Instance built from a generating pair and action exponents; dual exponents
// found by exhaustive search.
CongruenceInstance make_instance(const AbGroup& small, const GroupElement& h1,
                                 const GroupElement& h2, const ActionExponents& x);

// The descent criterion: x22 a2 - x21 b2 = 0 (mod n).
bool majid_type(const CongruenceInstance& inst);

struct Abd {
  long a = 0, b = 0, d = 0;
  bool operator==(const Abd& o) const { return a == o.a && b == o.b && d == o.d; }
};

// The closed-form candidate solution; verifies the four congruences and
// returns nullopt when the instance is not of Majid type.
std::optional<Abd> solve_abd(const CongruenceInstance& inst);

// All parameter triples satisfying the four congruences, by exhaustive scan.
std::vector<Abd> brute_force_abd(const CongruenceInstance& inst);

// The four congruences themselves (shared by solver, oracle and tests).
bool congruences_hold(const CongruenceInstance& inst, const Abd& abd);

// The same condition expressed through exponentials of roots of unity.
bool exponential_equations_hold(const CongruenceInstance& inst, const Abd& abd);

bool is_genuine(const Abd& abd);

// --- catalogue matching ---------------------------------------------------

struct TableRow {
  int family = 0;    // 1..17
  int sub = 0;       // 0-based sub-row index
  int tree_id = 0;   // binary tree attached to the sub-row
  std::string condition;  // printable predicate
};

// All catalogue rows matched by the structure constants (q11, q12*q21, q22);
// inputs must be roots of unity. An empty result means the datum is outside
// the finite-dimensional catalogue.
std::vector<TableRow> match_table(const CycScalar& q11, const CycScalar& q12q21,
                                  const CycScalar& q22);

std::vector<TableRow> match_table(const RootExp& q11, const RootExp& q12q21, const RootExp& q22);

// --- enumerators ------------------------------------------------------------

struct StandardEntry {
  ActionExponents x;
  std::vector<TableRow> rows;
  Abd abd;
  bool genuine = false;
};

// All canonical-degree data over the squared group whose q-matrix matches the
// catalogue and which descend (q21^n = 1), in lexicographic x order.
std::vector<StandardEntry> enumerate_standard(long m_small, long n_small);

struct CyclicEntry {
  long s = 0, t = 0, alpha = 0, beta = 0;
  std::vector<TableRow> rows;
  long d = 0;
  bool genuine = false;
};

// Cyclic-group datum scan: h1 = g^s, h2 = g^t with gcd(s,t) = 1 over
// Z_{n^2}, action g * X1 = zeta^alpha X1, g * X2 = zeta^beta X2.
std::vector<CyclicEntry> enumerate_cyclic(long n_small);

}  // namespace qqg
