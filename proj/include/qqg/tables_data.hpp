#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qqg/yd.hpp"

namespace qqg {

// Hand-encoded admissibility families for the canonical-degree data over
// Z_{p^2} x Z_{p^2}: the per-prime condition lists, each paired with the
// catalogue row it specializes.
struct StandardFamily {
  int index = 0;            // 1-based row in the per-prime table
  std::string condition;    // printable predicate
  int tree = 0;
  int family = 0;           // catalogue row
  int sub = 0;              // catalogue sub-row
  std::function<bool(const ActionExponents&)> pred;
};

// p in {2, 3} use their explicit lists; any larger prime uses the generic
// four-family list.
std::vector<StandardFamily> standard_table_families(long p);

}  // namespace qqg
