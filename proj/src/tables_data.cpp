#include "qqg/tables_data.hpp"

namespace qqg {

namespace {

bool in(long v, std::initializer_list<long> set) {
  for (long s : set)
    if (v == s) return true;
  return false;
}

}  // namespace

std::vector<StandardFamily> standard_table_families(long p) {
  std::vector<StandardFamily> out;
  auto add = [&out](int idx, const std::string& cond, int tree, int fam, int sub, auto fn) {
    out.push_back({idx, cond, tree, fam, sub, fn});
  };
  if (p == 2) {
    add(1, "x12+x21=0 or 4, x11!=0, x22!=0, x21 even", 1, 1, 0, [](const ActionExponents& x) {
      return in(x.x12 + x.x21, {0, 4}) && x.x11 != 0 && x.x22 != 0 && x.x21 % 2 == 0;
    });
    add(2, "x12+x21+x11=4 or 8, x11=x22!=0, x21 even", 1, 2, 0, [](const ActionExponents& x) {
      return in(x.x12 + x.x21 + x.x11, {4, 8}) && x.x11 == x.x22 && x.x11 != 0 && x.x21 % 2 == 0;
    });
    add(3, "x12+x21+x11=4 or 8, x11!=0,2, x22=2, x21 even", 2, 3, 0, [](const ActionExponents& x) {
      return in(x.x12 + x.x21 + x.x11, {4, 8}) && !in(x.x11, {0, 2}) && x.x22 == 2 &&
             x.x21 % 2 == 0;
    });
    add(4, "x12+x21!=0,2,4,6, x11=x22=2, x21 even", 2, 3, 1, [](const ActionExponents& x) {
      return !in(x.x12 + x.x21, {0, 2, 4, 6}) && x.x11 == 2 && x.x22 == 2 && x.x21 % 2 == 0;
    });
    add(5, "x12+x21+2*x11=4, 8 or 12, x11!=0,2, x22=2, x21 even", 3, 4, 0,
        [](const ActionExponents& x) {
          return in(x.x12 + x.x21 + 2 * x.x11, {4, 8, 12}) && !in(x.x11, {0, 2}) && x.x22 == 2 &&
                 x.x21 % 2 == 0;
        });
    add(6, "x12+x21+3*x11=0 mod 4, x22-3*x11=0 mod 4, x11!=0,2, x21 even", 8, 11, 0,
        [](const ActionExponents& x) {
          return (x.x12 + x.x21 + 3 * x.x11) % 4 == 0 &&
                 (((x.x22 - 3 * x.x11) % 4) + 4) % 4 == 0 && !in(x.x11, {0, 2}) &&
                 x.x21 % 2 == 0;
        });
    return out;
  }
  if (p == 3) {
    add(1, "x12+x21=0 or 9, x11!=0, x22!=0, x21=0 mod 3", 1, 1, 0, [](const ActionExponents& x) {
      return in(x.x12 + x.x21, {0, 9}) && x.x11 != 0 && x.x22 != 0 && x.x21 % 3 == 0;
    });
    add(2, "x12+x21+x11=9 or 18, x11=x22!=0, x21=0 mod 3", 1, 2, 0, [](const ActionExponents& x) {
      return in(x.x12 + x.x21 + x.x11, {9, 18}) && x.x11 == x.x22 && x.x11 != 0 &&
             x.x21 % 3 == 0;
    });
    add(3, "x12+x21+2*x11=0 mod 9, x22-2*x11=0 mod 9, x11!=0, x21=0 mod 3", 3, 4, 0,
        [](const ActionExponents& x) {
          return (x.x12 + x.x21 + 2 * x.x11) % 9 == 0 &&
                 (((x.x22 - 2 * x.x11) % 9) + 9) % 9 == 0 && x.x11 != 0 && x.x21 % 3 == 0;
        });
    add(4, "x12+x21+x22=0 mod 9, x11=3 or 6, x22!=0,3,6, x21=0 mod 3", 3, 6, 0,
        [](const ActionExponents& x) {
          return (x.x12 + x.x21 + x.x22) % 9 == 0 && in(x.x11, {3, 6}) &&
                 !in(x.x22, {0, 3, 6}) && x.x21 % 3 == 0;
        });
    add(5, "x12+x21+3*x11=0 mod 9, x22-3*x11=0 mod 9, x11!=0,3,6, x21=0 mod 3", 8, 11, 0,
        [](const ActionExponents& x) {
          return (x.x12 + x.x21 + 3 * x.x11) % 9 == 0 &&
                 (((x.x22 - 3 * x.x11) % 9) + 9) % 9 == 0 && !in(x.x11, {0, 3, 6}) &&
                 x.x21 % 3 == 0;
        });
    return out;
  }
  // p > 3; the vertex labels must stay nontrivial, so x11 = 0 is excluded in
  // every family even where the compressed conditions leave it implicit.
  long p2 = p * p;
  add(1, "x12+x21=0 or p^2, x11!=0, x22!=0, x21=0 mod p", 1, 1, 0,
      [p, p2](const ActionExponents& x) {
        return in(x.x12 + x.x21, {0, p2}) && x.x11 != 0 && x.x22 != 0 && x.x21 % p == 0;
      });
  add(2, "x12+x21+x11=p^2 or 2p^2, x11=x22!=0, x21=0 mod p", 1, 2, 0,
      [p, p2](const ActionExponents& x) {
        return in(x.x12 + x.x21 + x.x11, {p2, 2 * p2}) && x.x11 == x.x22 && x.x11 != 0 &&
               x.x21 % p == 0;
      });
  add(3, "x12+x21+2*x11=0 mod p^2, x22-2*x11=0 mod p^2, x11!=0, x21=0 mod p", 3, 4, 0,
      [p, p2](const ActionExponents& x) {
        return (x.x12 + x.x21 + 2 * x.x11) % p2 == 0 &&
               (((x.x22 - 2 * x.x11) % p2) + p2) % p2 == 0 && x.x11 != 0 && x.x21 % p == 0;
      });
  add(4, "x12+x21+3*x11=0 mod p^2, x22-3*x11=0 mod p^2, x11!=0, x21=0 mod p", 8, 11, 0,
      [p, p2](const ActionExponents& x) {
        return (x.x12 + x.x21 + 3 * x.x11) % p2 == 0 &&
               (((x.x22 - 3 * x.x11) % p2) + p2) % p2 == 0 && x.x11 != 0 && x.x21 % p == 0;
      });
  return out;
}

}  // namespace qqg
