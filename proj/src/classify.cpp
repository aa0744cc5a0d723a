#include "qqg/classify.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace qqg {

CongruenceInstance make_instance(const AbGroup& small, const GroupElement& h1,
                                 const GroupElement& h2, const ActionExponents& x) {
  CongruenceInstance inst;
  inst.small = small;
  inst.big = small.doubled();
  if (x.x11 < 0 || x.x11 >= inst.big.m || x.x12 < 0 || x.x12 >= inst.big.m || x.x21 < 0 ||
      x.x21 >= inst.big.n || x.x22 < 0 || x.x22 >= inst.big.n)
    fail("BadParameters", "action exponents out of range");
  inst.alpha1 = h1.e1;
  inst.alpha2 = h1.e2;
  inst.beta1 = h2.e1;
  inst.beta2 = h2.e2;
  inst.x = x;
  inst.dual = dual_exponents(inst.big, h1, h2);
  return inst;
}

bool majid_type(const CongruenceInstance& inst) {
  long nn = inst.small.n;
  return ((inst.x.x22 * inst.alpha2 - inst.x.x21 * inst.beta2) % nn + nn) % nn == 0;
}

bool congruences_hold(const CongruenceInstance& inst, const Abd& abd) {
  const long mm = inst.small.m, nn = inst.small.n;
  const long r = nn / mm;
  auto cong = [nn](long lhs, long rhs) { return ((lhs - rhs) % nn + nn) % nn == 0; };
  return cong(abd.a * inst.alpha1 * r + abd.b * inst.alpha2, inst.x.x11 * r) &&
         cong(abd.a * inst.beta1 * r + abd.b * inst.beta2, inst.x.x12 * r) &&
         cong(abd.d * inst.alpha2, inst.x.x21) && cong(abd.d * inst.beta2, inst.x.x22);
}

bool exponential_equations_hold(const CongruenceInstance& inst, const Abd& abd) {
  const long mm = inst.small.m, nn = inst.small.n;
  const long m = inst.big.m, n = inst.big.n;
  const long N = lcm_long(lcm_long(m, n), mm * nn);
  auto zm = [&](long e) { return root_in(N, m, e); };
  auto zn = [&](long e) { return root_in(N, n, e); };
  auto zmn = [&](long e) { return root_in(N, mm * nn, e); };
  // structure constants from the action exponents
  RootExp q11 = zm(inst.x.x11 * inst.alpha1) * zn(inst.x.x21 * inst.alpha2);
  RootExp q12 = zm(inst.x.x12 * inst.alpha1) * zn(inst.x.x22 * inst.alpha2);
  RootExp q21 = zm(inst.x.x11 * inst.beta1) * zn(inst.x.x21 * inst.beta2);
  RootExp q22 = zm(inst.x.x12 * inst.beta1) * zn(inst.x.x22 * inst.beta2);
  const auto& du = inst.dual;
  bool e1 = zm(abd.a * inst.alpha1 * mm) * zmn(abd.b * inst.alpha2 * mm) ==
            q11.pow(mm * du.s1) * q21.pow(mm * du.s2);
  bool e2 = zm(abd.a * inst.beta1 * mm) * zmn(abd.b * inst.beta2 * mm) ==
            q12.pow(mm * du.s1) * q22.pow(mm * du.s2);
  bool e3 = zn(abd.d * inst.alpha2 * nn) == q11.pow(nn * du.t1) * q21.pow(nn * du.t2);
  bool e4 = zn(abd.d * inst.beta2 * nn) == q12.pow(nn * du.t1) * q22.pow(nn * du.t2);
  return e1 && e2 && e3 && e4;
}

std::optional<Abd> solve_abd(const CongruenceInstance& inst) {
  if (!majid_type(inst)) return std::nullopt;
  const long mm = inst.small.m, nn = inst.small.n;
  Abd abd;
  abd.a = ((inst.x.x11 * inst.dual.s1 + inst.x.x12 * inst.dual.s2) % mm + mm) % mm;
  abd.b = (((nn / mm) * (inst.x.x11 * inst.dual.t1 + inst.x.x12 * inst.dual.t2)) % mm + mm) % mm;
  abd.d = ((inst.dual.t1 * inst.x.x21 + inst.dual.t2 * inst.x.x22) % nn + nn) % nn;
  if (!congruences_hold(inst, abd))
    fail("InternalInconsistency", "closed-form parameters fail the congruences");
  return abd;
}

std::vector<Abd> brute_force_abd(const CongruenceInstance& inst) {
  std::vector<Abd> out;
  const long mm = inst.small.m, nn = inst.small.n;
  long bmax = gcd_long(mm, nn);
  for (long a = 0; a < mm; ++a)
    for (long b = 0; b < bmax; ++b)
      for (long d = 0; d < nn; ++d) {
        Abd abd{a, b, d};
        if (congruences_hold(inst, abd)) out.push_back(abd);
      }
  return out;
}

bool is_genuine(const Abd& abd) { return abd.a != 0 || abd.b != 0 || abd.d != 0; }

// --- catalogue --------------------------------------------------------------

namespace {

struct SubRowSpec {
  int family;
  int sub;
  int tree;
  long zeta_order;  // 0 = no quantifier
  const char* condition;
  // predicate over (q11, Q, q22, zeta, minus_one), all in a common arena
  std::function<bool(const RootExp&, const RootExp&, const RootExp&, const RootExp&,
                     const RootExp&)>
      pred;
};

const std::vector<SubRowSpec>& catalogue() {
  using R = RootExp;
  static const std::vector<SubRowSpec> rows = [] {
    std::vector<SubRowSpec> v;
    auto add = [&v](int fam, int sub, int tree, long z, const char* cond, auto fn) {
      v.push_back({fam, sub, tree, z, cond, fn});
    };
    add(1, 0, 1, 0, "q12q21=1",
        [](const R&, const R& Q, const R&, const R&, const R&) { return Q.is_one(); });
    add(2, 0, 1, 0, "q12q21=q11^-1, q11=q22",
        [](const R& q11, const R& Q, const R& q22, const R&, const R&) {
          return Q == q11.inverse() && q11 == q22;
        });
    add(3, 0, 2, 0, "q12q21=q11^-1, q11!=-1, q22=-1",
        [](const R& q11, const R& Q, const R& q22, const R&, const R& m1) {
          return Q == q11.inverse() && q11 != m1 && q22 == m1;
        });
    add(3, 1, 2, 0, "q12q21!=+-1, q11=q22=-1",
        [](const R& q11, const R& Q, const R& q22, const R&, const R& m1) {
          return !Q.is_one() && Q != m1 && q11 == m1 && q22 == m1;
        });
    add(4, 0, 3, 0, "q12q21=q11^-2, q22=q11^2, q11!=-1",
        [](const R& q11, const R& Q, const R& q22, const R&, const R& m1) {
          return Q == q11.pow(-2) && q22 == q11.pow(2) && q11 != m1;
        });
    add(5, 0, 3, 0, "q12q21=q11^-2, q11 not in R4, q11!=-1, q22=-1",
        [](const R& q11, const R& Q, const R& q22, const R&, const R& m1) {
          return Q == q11.pow(-2) && q11.ord() != 4 && q11 != m1 && q22 == m1;
        });
    add(6, 0, 3, 0, "q12q21=q22^-1, q11 in R3, q22 not in R3",
        [](const R& q11, const R& Q, const R& q22, const R&, const R&) {
          return Q == q22.inverse() && q11.ord() == 3 && q22.ord() != 3;
        });
    add(7, 0, 3, 0, "q12q21=-q11, q11 in R3, q22=-1",
        [](const R& q11, const R& Q, const R& q22, const R&, const R& m1) {
          return Q == m1 * q11 && q11.ord() == 3 && q22 == m1;
        });
    add(8, 0, 4, 12, "q12q21=-z^3, q11=-z^-2, q22=-z^2, z in R12",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(3) && q11 == m1 * z.pow(-2) && q22 == m1 * z.pow(2);
        });
    add(8, 1, 5, 12, "q12q21=z^-1, q11=-z^-2, q22=-1, z in R12",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(-1) && q11 == m1 * z.pow(-2) && q22 == m1;
        });
    add(8, 2, 7, 12, "q12q21=z, q11=-z^3, q22=-1, z in R12",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z && q11 == m1 * z.pow(3) && q22 == m1;
        });
    add(9, 0, 4, 12, "q12q21=z, q11=-z^2, q22=-z^2, z in R12",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z && q11 == m1 * z.pow(2) && q22 == m1 * z.pow(2);
        });
    add(9, 1, 5, 12, "q12q21=z^3, q11=-z^2, q22=-1, z in R12",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(3) && q11 == m1 * z.pow(2) && q22 == m1;
        });
    add(9, 2, 7, 12, "q12q21=-z^3, q11=-z^-1, q22=-1, z in R12",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(3) && q11 == m1 * z.pow(-1) && q22 == m1;
        });
    add(10, 0, 6, 9, "q12q21=z^-2, q11=-z, q22=z^3, z in R9",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(-2) && q11 == m1 * z && q22 == z.pow(3);
        });
    add(10, 1, 9, 9, "q12q21=z^-1, q11=z^3, q22=-1, z in R9",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(-1) && q11 == z.pow(3) && q22 == m1;
        });
    add(10, 2, 14, 9, "q12q21=z, q11=-z^2, q22=-1, z in R9",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z && q11 == m1 * z.pow(2) && q22 == m1;
        });
    add(11, 0, 8, 0, "q12q21=q11^-3, q22=q11^3, q11!=-1, q11 not in R3",
        [](const R& q11, const R& Q, const R& q22, const R&, const R& m1) {
          return Q == q11.pow(-3) && q22 == q11.pow(3) && q11 != m1 && q11.ord() != 3;
        });
    add(12, 0, 8, 8, "q12q21=z, q11=z^2, q22=z^-1, z in R8",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R&) {
          return Q == z && q11 == z.pow(2) && q22 == z.pow(-1);
        });
    add(12, 1, 8, 8, "q12q21=-z^-1, q11=z^2, q22=-1, z in R8",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(-1) && q11 == z.pow(2) && q22 == m1;
        });
    add(12, 2, 8, 8, "q12q21=z^-1, q11=z, q22=-1, z in R8",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(-1) && q11 == z && q22 == m1;
        });
    add(13, 0, 10, 24, "q12q21=-z^-1, q11=z^6, q22=z^-4, z in R24",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(-1) && q11 == z.pow(6) && q22 == z.pow(-4);
        });
    add(13, 1, 13, 24, "q12q21=z, q11=z^6, q22=z^-1, z in R24",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R&) {
          return Q == z && q11 == z.pow(6) && q22 == z.pow(-1);
        });
    add(13, 2, 17, 24, "q12q21=z^5, q11=-z^-4, q22=-1, z in R24",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(5) && q11 == m1 * z.pow(-4) && q22 == m1;
        });
    add(13, 3, 21, 24, "q12q21=z^-5, q11=z, q22=-1, z in R24",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(-5) && q11 == z && q22 == m1;
        });
    add(14, 0, 11, 5, "q12q21=z^2, q11=z, q22=-1, z in R5",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(2) && q11 == z && q22 == m1;
        });
    add(14, 1, 16, 5, "q12q21=z^-2, q11=-z^-2, q22=-1, z in R5",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(-2) && q11 == m1 * z.pow(-2) && q22 == m1;
        });
    add(15, 0, 11, 20, "q12q21=z^-3, q11=z, q22=-1, z in R20",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(-3) && q11 == z && q22 == m1;
        });
    add(15, 1, 16, 20, "q12q21=z^3, q11=-z^-2, q22=-1, z in R20",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == z.pow(3) && q11 == m1 * z.pow(-2) && q22 == m1;
        });
    add(16, 0, 12, 15, "q12q21=-z^-3, q11=-z, q22=z^5, z in R15",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(-3) && q11 == m1 * z && q22 == z.pow(5);
        });
    add(16, 1, 15, 15, "q12q21=-z^4, q11=z^3, q22=-z^-4, z in R15",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(4) && q11 == z.pow(3) && q22 == m1 * z.pow(-4);
        });
    add(16, 2, 18, 15, "q12q21=-z^-2, q11=z^5, q22=-1, z in R15",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(-2) && q11 == z.pow(5) && q22 == m1;
        });
    add(16, 3, 20, 15, "q12q21=-z^2, q11=z^3, q22=-1, z in R15",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(2) && q11 == z.pow(3) && q22 == m1;
        });
    add(17, 0, 19, 7, "q12q21=-z^-3, q11=-z, q22=-1, z in R7",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(-3) && q11 == m1 * z && q22 == m1;
        });
    add(17, 1, 22, 7, "q12q21=-z^3, q11=-z^-2, q22=-1, z in R7",
        [](const R& q11, const R& Q, const R& q22, const R& z, const R& m1) {
          return Q == m1 * z.pow(3) && q11 == m1 * z.pow(-2) && q22 == m1;
        });
    return v;
  }();
  return rows;
}

}  // namespace

std::vector<TableRow> match_table(const RootExp& q11_in, const RootExp& q_in,
                                  const RootExp& q22_in) {
  std::vector<TableRow> out;
  // vertices must be nontrivial roots of unity
  if (q11_in.ord() < 2 || q22_in.ord() < 2) return out;
  long base = lcm_long(lcm_long(q11_in.order, q_in.order), q22_in.order);
  for (const auto& row : catalogue()) {
    long arena = lcm_long(lcm_long(base, 2), row.zeta_order == 0 ? 1 : row.zeta_order);
    RootExp q11 = q11_in.embed(arena);
    RootExp q = q_in.embed(arena);
    RootExp q22 = q22_in.embed(arena);
    RootExp m1(arena, arena / 2);
    bool matched = false;
    if (row.zeta_order == 0) {
      matched = row.pred(q11, q, q22, RootExp(arena, 0), m1);
    } else {
      for (long k = 1; k < row.zeta_order && !matched; ++k) {
        if (gcd_long(k, row.zeta_order) != 1) continue;
        RootExp z = root_in(arena, row.zeta_order, k);
        matched = row.pred(q11, q, q22, z, m1);
      }
    }
    if (matched) out.push_back({row.family, row.sub, row.tree, row.condition});
  }
  return out;
}

namespace {

// Roots of unity in Q(zeta_N) are +-zeta_N^j; identify the exponent in the
// arena of order lcm(2, N).
std::optional<RootExp> as_root_of_unity(const CycScalar& s) {
  if (auto direct = s.to_root()) return direct;
  if (!s.ord()) return std::nullopt;
  long n = s.order();
  FieldPtr f = s.field();
  for (long j = 0; j < n; ++j) {
    CycScalar candidate = CycScalar::from_root(f, RootExp(n, j));
    if (s == candidate) return RootExp(n, j);
    if (s == -candidate) return RootExp(lcm_long(2, n), (lcm_long(2, n) / 2 + j * (lcm_long(2, n) / n)) % lcm_long(2, n));
  }
  return std::nullopt;
}

}  // namespace

std::vector<TableRow> match_table(const CycScalar& q11, const CycScalar& q12q21,
                                  const CycScalar& q22) {
  auto r11 = as_root_of_unity(q11);
  auto rq = as_root_of_unity(q12q21);
  auto r22 = as_root_of_unity(q22);
  if (!r11 || !rq || !r22)
    fail("BadParameters", "match_table inputs must be roots of unity");
  return match_table(*r11, *rq, *r22);
}

// --- enumerators ------------------------------------------------------------

std::vector<StandardEntry> enumerate_standard(long m_small, long n_small) {
  AbGroup small(m_small, n_small);
  AbGroup big = small.doubled();
  if (big.order() > kMaxGroupOrder) fail("BadParameters", "enumerate_standard beyond desk scale");
  const long m = big.m, n = big.n;
  const long N = lcm_long(m, n);
  std::vector<StandardEntry> out;
  CongruenceInstance inst;
  inst.small = small;
  inst.big = big;
  inst.alpha1 = 1;
  inst.alpha2 = 0;
  inst.beta1 = 0;
  inst.beta2 = 1;
  inst.dual = DualExponents{1, 0, 0, 1};
  for (long x11 = 0; x11 < m; ++x11)
    for (long x12 = 0; x12 < m; ++x12)
      for (long x21 = 0; x21 < n; ++x21)
        for (long x22 = 0; x22 < n; ++x22) {
          RootExp q11 = root_in(N, m, x11);
          RootExp q = root_in(N, m, x12) * root_in(N, n, x21);
          RootExp q22 = root_in(N, n, x22);
          // descent criterion in the standard case: q21^{n_small} = 1
          if (root_in(N, n, x21).pow(n_small).exp != 0) continue;
          auto rows = match_table(q11, q, q22);
          if (rows.empty()) continue;
          StandardEntry e;
          e.x = ActionExponents{x11, x12, x21, x22};
          e.rows = std::move(rows);
          inst.x = e.x;
          auto abd = solve_abd(inst);
          if (!abd) fail("InternalInconsistency", "standard descent instance not of Majid type");
          e.abd = *abd;
          e.genuine = is_genuine(e.abd);
          out.push_back(std::move(e));
        }
  return out;
}

std::vector<CyclicEntry> enumerate_cyclic(long n_small) {
  AbGroup small(1, n_small);
  AbGroup big = small.doubled();
  if (big.order() > kMaxGroupOrder) fail("BadParameters", "enumerate_cyclic beyond desk scale");
  const long n = big.n;
  std::vector<CyclicEntry> out;
  std::map<std::tuple<long, long, long>, std::vector<TableRow>> memo;
  for (long s = 0; s < n; ++s)
    for (long t = 0; t < n; ++t) {
      if (std::gcd(s, t) != 1) continue;
      // t1 s + t2 t = 1 via the extended euclidean algorithm
      long u = 0, v = 0;
      {
        long a = s, b = t, x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
          long q = a / b;
          std::tie(a, b) = std::make_tuple(b, a - q * b);
          std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
          std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
        }
        u = x0;
        v = y0;  // s*u + t*v = gcd(s,t) = 1
      }
      for (long alpha = 0; alpha < n; ++alpha)
        for (long beta = 0; beta < n; ++beta) {
          long e11 = (s * alpha) % n;
          long eq = (s * beta + t * alpha) % n;
          long e22 = (t * beta) % n;
          // solubility: alpha t = beta s (mod n_small)
          if (((alpha * t - beta * s) % n_small + n_small) % n_small != 0) continue;
          auto key = std::make_tuple(e11, eq, e22);
          auto it = memo.find(key);
          if (it == memo.end()) {
            auto rows = match_table(RootExp(n, e11), RootExp(n, eq), RootExp(n, e22));
            it = memo.emplace(key, std::move(rows)).first;
          }
          if (it->second.empty()) continue;
          CyclicEntry e;
          e.s = s;
          e.t = t;
          e.alpha = alpha;
          e.beta = beta;
          e.rows = it->second;
          e.d = (((u % n_small) * alpha + (v % n_small) * beta) % n_small + n_small) % n_small;
          e.genuine = e.d != 0;
          out.push_back(std::move(e));
        }
    }
  return out;
}

}  // namespace qqg
