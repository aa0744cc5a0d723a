#include "qqg/majid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qqg {

void sparse_add(SparseVec& acc, int idx, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(idx);
  if (it == acc.end()) {
    acc.emplace(idx, c);
    return;
  }
  CycScalar s = it->second + c;
  if (s.is_zero())
    acc.erase(it);
  else
    it->second = s;
}

void sparse_add(SparseVec& acc, const SparseVec& v, const CycScalar& c) {
  for (const auto& [i, x] : v) sparse_add(acc, i, x * c);
}

CycScalar MajidStructure::phi(int i, int j, int k) const {
  auto it = assoc.find({i, j, k});
  if (it == assoc.end()) return CycScalar::zero(field);
  return it->second;
}

CycScalar MajidStructure::phi_inv(int i, int j, int k) const {
  if (!grouplike[i] || !grouplike[j] || !grouplike[k]) return CycScalar::zero(field);
  CycScalar v = phi(i, j, k);
  if (v.is_zero()) return v;
  return v.inverse();
}

SparseVec MajidStructure::mul_elem(const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) sparse_add(out, mult[i][j], ca * cb);
  return out;
}

SparseVec MajidStructure::apply_antipode(const SparseVec& a) const {
  SparseVec out;
  for (const auto& [i, c] : a) sparse_add(out, antipode[i], c);
  return out;
}

std::vector<std::pair<std::vector<int>, CycScalar>> MajidStructure::sweedler(int idx,
                                                                             int legs) const {
  std::vector<std::pair<std::vector<int>, CycScalar>> cur{{{idx}, CycScalar::one(field)}};
  for (int step = 1; step < legs; ++step) {
    std::map<std::vector<int>, CycScalar> next;
    for (const auto& [vec, c] : cur) {
      for (const auto& [j, k, cc] : comult[vec[0]]) {
        std::vector<int> nv;
        nv.reserve(vec.size() + 1);
        nv.push_back(j);
        nv.push_back(k);
        nv.insert(nv.end(), vec.begin() + 1, vec.end());
        CycScalar v = c * cc;
        auto it = next.find(nv);
        if (it == next.end())
          next.emplace(std::move(nv), v);
        else {
          CycScalar s = it->second + v;
          if (s.is_zero())
            next.erase(it);
          else
            it->second = s;
        }
      }
    }
    cur.assign(next.begin(), next.end());
  }
  return cur;
}

bool AxiomReport::all_pass() const {
  for (const auto& [k, v] : checks)
    if (!v.pass) return false;
  return true;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& [k, v] : checks) {
    os << k << ": " << (v.pass ? "pass" : "FAIL") << (v.witness.empty() ? "" : " at " + v.witness)
       << "\n";
  }
  return os.str();
}

namespace {

bool sparse_eq(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  auto it = a.begin();
  auto jt = b.begin();
  for (; it != a.end(); ++it, ++jt) {
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  }
  return true;
}

// Names for witnesses.
std::string wname(const MajidStructure& m, int i) { return m.names[i]; }

}  // namespace

AxiomReport check_axioms(const MajidStructure& m) {
  AxiomReport rep;
  const int dim = m.dim();
  FieldPtr F = m.field;
  CycScalar zero = CycScalar::zero(F);
  CycScalar one = CycScalar::one(F);

  auto set = [&rep](const std::string& key, bool pass, const std::string& witness) {
    auto& slot = rep.checks[key];
    if (slot.pass && !pass) {
      slot.pass = false;
      slot.witness = witness;
    }
  };
  auto failed = [&rep](const std::string& key) { return !rep.checks[key].pass; };
  for (const char* k : {"2.1-quasi-assoc", "2.2-unit", "2.3-pentagon", "2.4-normalization",
                        "2.5-antipode", "2.6-compat", "coassoc", "counit",
                        "mult-coalgebra-morphism", "antipode-coalgebra-antimorphism",
                        "grouplike-comult"})
    rep.checks.emplace(k, AxiomCheck{});

  // grouplike structure
  for (int g = 0; g < dim; ++g) {
    if (!m.grouplike[g]) continue;
    bool ok = m.comult[g].size() == 1 && std::get<0>(m.comult[g][0]) == g &&
              std::get<1>(m.comult[g][0]) == g && std::get<2>(m.comult[g][0]) == one &&
              m.counit[g] == one;
    set("grouplike-comult", ok, wname(m, g));
  }

  // counit and coassociativity
  for (int i = 0; i < dim; ++i) {
    SparseVec left, right;
    for (const auto& [j, k, c] : m.comult[i]) {
      sparse_add(left, k, c * m.counit[j]);
      sparse_add(right, j, c * m.counit[k]);
    }
    SparseVec self;
    sparse_add(self, i, one);
    set("counit", sparse_eq(left, self) && sparse_eq(right, self), wname(m, i));

    std::map<std::vector<int>, CycScalar> lhs, rhs;
    for (const auto& [j, k, c] : m.comult[i]) {
      for (const auto& [a, b, c2] : m.comult[j]) {
        std::vector<int> key{a, b, k};
        CycScalar v = c * c2;
        auto it = lhs.find(key);
        if (it == lhs.end())
          lhs.emplace(key, v);
        else {
          it->second = it->second + v;
          if (it->second.is_zero()) lhs.erase(it);
        }
      }
      for (const auto& [a, b, c2] : m.comult[k]) {
        std::vector<int> key{j, a, b};
        CycScalar v = c * c2;
        auto it = rhs.find(key);
        if (it == rhs.end())
          rhs.emplace(key, v);
        else {
          it->second = it->second + v;
          if (it->second.is_zero()) rhs.erase(it);
        }
      }
    }
    set("coassoc", lhs == rhs, wname(m, i));
  }

  // multiplication is a coalgebra morphism
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::map<std::pair<int, int>, CycScalar> lhs, rhs;
      for (const auto& [u, cu] : m.mult[i][j])
        for (const auto& [a, b, c] : m.comult[u]) {
          auto key = std::make_pair(a, b);
          auto it = lhs.find(key);
          CycScalar v = cu * c;
          if (it == lhs.end())
            lhs.emplace(key, v);
          else {
            it->second = it->second + v;
            if (it->second.is_zero()) lhs.erase(it);
          }
        }
      for (const auto& [i1, i2, ci] : m.comult[i])
        for (const auto& [j1, j2, cj] : m.comult[j]) {
          for (const auto& [u, cu] : m.mult[i1][j1])
            for (const auto& [v, cv] : m.mult[i2][j2]) {
              auto key = std::make_pair(u, v);
              CycScalar val = ci * cj * cu * cv;
              auto it = rhs.find(key);
              if (it == rhs.end())
                rhs.emplace(key, val);
              else {
                it->second = it->second + val;
                if (it->second.is_zero()) rhs.erase(it);
              }
            }
        }
      bool ok = lhs == rhs;
      // counit multiplicativity
      CycScalar e;
      e = zero;
      for (const auto& [u, cu] : m.mult[i][j]) e = e + cu * m.counit[u];
      ok = ok && e == m.counit[i] * m.counit[j];
      set("mult-coalgebra-morphism", ok, wname(m, i) + "," + wname(m, j));
    }

  // (2.2) unit
  for (int i = 0; i < dim; ++i) {
    SparseVec self;
    sparse_add(self, i, one);
    set("2.2-unit", sparse_eq(m.mult[m.unit][i], self) && sparse_eq(m.mult[i][m.unit], self),
        wname(m, i));
  }

  // (2.4) normalization of the associator
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      set("2.4-normalization", m.phi(i, m.unit, j) == m.counit[i] * m.counit[j],
          wname(m, i) + ",1," + wname(m, j));
    }

  // (2.1) quasi-associativity
  for (int i = 0; i < dim && !failed("2.1-quasi-assoc"); ++i)
    for (int j = 0; j < dim && !failed("2.1-quasi-assoc"); ++j)
      for (int k = 0; k < dim; ++k) {
        SparseVec lhs, rhs;
        for (const auto& [i1, i2, ci] : m.comult[i])
          for (const auto& [j1, j2, cj] : m.comult[j])
            for (const auto& [k1, k2, ck] : m.comult[k]) {
              CycScalar c = ci * cj * ck;
              CycScalar f = m.phi(i2, j2, k2);
              if (!f.is_zero()) {
                // i1 (j1 k1) phi(i2,j2,k2)
                for (const auto& [u, cu] : m.mult[j1][k1])
                  sparse_add(lhs, m.mult[i1][u], cu * c * f);
              }
              CycScalar f2 = m.phi(i1, j1, k1);
              if (!f2.is_zero()) {
                for (const auto& [u, cu] : m.mult[i2][j2])
                  sparse_add(rhs, m.mult[u][k2], cu * c * f2);
              }
            }
        set("2.1-quasi-assoc", sparse_eq(lhs, rhs),
            wname(m, i) + "," + wname(m, j) + "," + wname(m, k));
        if (failed("2.1-quasi-assoc")) break;
      }

  // (2.3) pentagon; precompute the grouplike-filtered Sweedler data
  {
    struct Corner {
      int first, second;
      CycScalar c;
    };
    std::vector<std::vector<Corner>> corner_left(dim), corner_right(dim), corner_both(dim);
    std::vector<std::vector<std::pair<std::array<int, 3>, CycScalar>>> sw3gl(dim);
    for (int i = 0; i < dim; ++i) {
      for (const auto& [u, v, c] : m.comult[i]) {
        if (m.grouplike[u]) corner_left[i].push_back({u, v, c});
        if (m.grouplike[v]) corner_right[i].push_back({u, v, c});
        if (m.grouplike[u] && m.grouplike[v]) corner_both[i].push_back({u, v, c});
      }
      for (const auto& [legs, c] : m.sweedler(i, 3))
        if (m.grouplike[legs[0]] && m.grouplike[legs[2]])
          sw3gl[i].push_back({{legs[0], legs[1], legs[2]}, c});
    }
    for (int a = 0; a < dim && !failed("2.3-pentagon"); ++a)
      for (int b = 0; b < dim && !failed("2.3-pentagon"); ++b)
        for (int c = 0; c < dim && !failed("2.3-pentagon"); ++c)
          for (int d = 0; d < dim; ++d) {
            CycScalar lhs = zero, rhs = zero;
            // lhs: phi(a1,b1,c1 d1) * phi(a2 b2, c2, d2)
            for (const auto& ta : corner_left[a])
              for (const auto& tb : corner_left[b]) {
                const SparseVec& ab = m.mult[ta.second][tb.second];
                CycScalar cab = ta.c * tb.c;
                for (const auto& tc : corner_right[c]) {
                  for (const auto& td : corner_right[d]) {
                    CycScalar s2 = zero;
                    for (const auto& [v, cv] : ab) {
                      if (!m.grouplike[v]) continue;
                      s2 = s2 + cv * m.phi(v, tc.second, td.second);
                    }
                    if (s2.is_zero()) continue;
                    CycScalar s1 = zero;
                    for (const auto& [w, cw] : m.mult[tc.first][td.first]) {
                      if (!m.grouplike[w]) continue;
                      s1 = s1 + cw * m.phi(ta.first, tb.first, w);
                    }
                    if (s1.is_zero()) continue;
                    lhs = lhs + cab * tc.c * td.c * s1 * s2;
                  }
                }
              }
            // rhs: phi(b1,c1,d1) * phi(a1, b2 c2, d2) * phi(a2, b3, c3)
            for (const auto& [bl, cb] : sw3gl[b])
              for (const auto& [cl, cc] : sw3gl[c]) {
                const SparseVec& bc = m.mult[bl[1]][cl[1]];
                for (const auto& tA : corner_both[a]) {
                  for (const auto& tD : corner_both[d]) {
                    CycScalar f1 = m.phi(bl[0], cl[0], tD.first);
                    if (f1.is_zero()) continue;
                    CycScalar f3 = m.phi(tA.second, bl[2], cl[2]);
                    if (f3.is_zero()) continue;
                    CycScalar mid = zero;
                    for (const auto& [v, cv] : bc) {
                      if (!m.grouplike[v]) continue;
                      mid = mid + cv * m.phi(tA.first, v, tD.second);
                    }
                    if (mid.is_zero()) continue;
                    rhs = rhs + cb * cc * tA.c * tD.c * f1 * f3 * mid;
                  }
                }
              }
            set("2.3-pentagon", lhs == rhs,
                wname(m, a) + "," + wname(m, b) + "," + wname(m, c) + "," + wname(m, d));
            if (failed("2.3-pentagon")) break;
          }
  }

  // (2.5) quasi-antipode
  for (int i = 0; i < dim; ++i) {
    SparseVec lhs, rhs, expect_l, expect_r;
    for (const auto& [legs, c] : m.sweedler(i, 3)) {
      if (!m.alpha[legs[1]].is_zero()) {
        SparseVec s;
        sparse_add(s, m.antipode[legs[0]], c * m.alpha[legs[1]]);
        for (const auto& [u, cu] : s) sparse_add(lhs, m.mult[u][legs[2]], cu);
      }
      if (!m.beta[legs[1]].is_zero()) {
        for (const auto& [u, cu] : m.antipode[legs[2]])
          sparse_add(rhs, m.mult[legs[0]][u], cu * c * m.beta[legs[1]]);
      }
    }
    sparse_add(expect_l, m.unit, m.alpha[i]);
    sparse_add(expect_r, m.unit, m.beta[i]);
    set("2.5-antipode", sparse_eq(lhs, expect_l) && sparse_eq(rhs, expect_r), wname(m, i));
  }

  // antipode is a coalgebra antimorphism
  for (int i = 0; i < dim; ++i) {
    std::map<std::pair<int, int>, CycScalar> lhs, rhs;
    for (const auto& [u, cu] : m.antipode[i])
      for (const auto& [a, b, c] : m.comult[u]) {
        auto key = std::make_pair(a, b);
        CycScalar v = cu * c;
        auto it = lhs.find(key);
        if (it == lhs.end())
          lhs.emplace(key, v);
        else {
          it->second = it->second + v;
          if (it->second.is_zero()) lhs.erase(it);
        }
      }
    CycScalar es = zero;
    for (const auto& [a, b, c] : m.comult[i]) {
      for (const auto& [u, cu] : m.antipode[b])
        for (const auto& [v, cv] : m.antipode[a]) {
          auto key = std::make_pair(u, v);
          CycScalar val = c * cu * cv;
          auto it = rhs.find(key);
          if (it == rhs.end())
            rhs.emplace(key, val);
          else {
            it->second = it->second + val;
            if (it->second.is_zero()) rhs.erase(it);
          }
        }
    }
    for (const auto& [u, cu] : m.antipode[i]) es = es + cu * m.counit[u];
    set("antipode-coalgebra-antimorphism", lhs == rhs && es == m.counit[i], wname(m, i));
  }

  // (2.6) compatibility; first confirm phi_inv is a convolution inverse
  for (int i = 0; i < dim && rep.checks["2.6-compat"].pass; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        CycScalar conv = zero, vnoc = zero;
        for (const auto& [i1, i2, ci] : m.comult[i])
          for (const auto& [j1, j2, cj] : m.comult[j])
            for (const auto& [k1, k2, ck] : m.comult[k]) {
              conv = conv + ci * cj * ck * m.phi(i1, j1, k1) * m.phi_inv(i2, j2, k2);
              vnoc = vnoc + ci * cj * ck * m.phi_inv(i1, j1, k1) * m.phi(i2, j2, k2);
            }
        CycScalar expect = m.counit[i] * m.counit[j] * m.counit[k];
        set("2.6-compat", conv == expect && vnoc == expect,
            "convolution inverse at " + wname(m, i) + "," + wname(m, j) + "," + wname(m, k));
        if (!rep.checks["2.6-compat"].pass) break;
      }
  for (int i = 0; i < dim && rep.checks["2.6-compat"].pass; ++i) {
    CycScalar t1 = zero, t2 = zero;
    for (const auto& [legs, c] : m.sweedler(i, 5)) {
      CycScalar cb = m.beta[legs[1]];
      CycScalar ca = m.alpha[legs[3]];
      if (!cb.is_zero() && !ca.is_zero()) {
        // phi(a1, S(a3), a5)
        CycScalar f = zero;
        for (const auto& [u, cu] : m.antipode[legs[2]]) f = f + cu * m.phi(legs[0], u, legs[4]);
        t1 = t1 + c * cb * ca * f;
      }
      CycScalar ca2 = m.alpha[legs[1]];
      CycScalar cb2 = m.beta[legs[3]];
      if (!ca2.is_zero() && !cb2.is_zero()) {
        CycScalar f = zero;
        for (const auto& [u, cu] : m.antipode[legs[0]])
          for (const auto& [v, cv] : m.antipode[legs[4]])
            f = f + cu * cv * m.phi_inv(u, legs[2], v);
        t2 = t2 + c * ca2 * cb2 * f;
      }
    }
    set("2.6-compat", t1 == m.counit[i] && t2 == m.counit[i], wname(m, i));
  }

  return rep;
}

MajidStructure group_majid(const AbGroup& g, const Cocycle3& phi) {
  if (!verify_3cocycle(phi)) fail("NotACocycle", "associator input fails the cocycle identity");
  MajidStructure m;
  long N = phi.root_order();
  m.field = CycField::get(N);
  auto elems = all_elements(g);
  const int dim = static_cast<int>(elems.size());
  CycScalar one = CycScalar::one(m.field);
  m.names.reserve(dim);
  for (const auto& e : elems) {
    std::ostringstream os;
    os << "g(" << e.e1 << "," << e.e2 << ")";
    m.names.push_back(os.str());
  }
  m.unit = 0;
  m.grouplike.assign(dim, 1);
  m.degree.assign(dim, 0);
  m.mult.assign(dim, std::vector<SparseVec>(dim));
  m.comult.resize(dim);
  m.counit.assign(dim, one);
  m.antipode.resize(dim);
  m.alpha.assign(dim, one);
  m.beta.resize(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      int k = static_cast<int>(element_index(g, mul(g, elems[i], elems[j])));
      sparse_add(m.mult[i][j], k, one);
    }
    m.comult[i].emplace_back(i, i, one);
    int invi = static_cast<int>(element_index(g, inv(g, elems[i])));
    sparse_add(m.antipode[i], invi, one);
    m.beta[i] = CycScalar::from_root(m.field, phi(elems[i], inv(g, elems[i]), elems[i])).inverse();
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        RootExp v = phi(elems[i], elems[j], elems[k]);
        m.assoc[{i, j, k}] = CycScalar::from_root(m.field, v);
      }
  return m;
}

std::vector<std::vector<CycScalar>> convolution_inverse(
    const MajidStructure& m, const std::vector<std::vector<CycScalar>>& j) {
  const int dim = m.dim();
  FieldPtr F = m.field;
  CycScalar zero = CycScalar::zero(F);
  std::vector<std::vector<CycScalar>> inv(dim, std::vector<CycScalar>(dim, zero));
  // order pairs by total degree; the diagonal corner term is invertible
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) pairs.emplace_back(a, b);
  std::sort(pairs.begin(), pairs.end(), [&](auto p, auto q) {
    return m.degree[p.first] + m.degree[p.second] < m.degree[q.first] + m.degree[q.second];
  });
  std::vector<std::vector<char>> done(dim, std::vector<char>(dim, 0));
  for (auto [a, b] : pairs) {
    // sum over Delta a x Delta b of J(a1,b1) Jinv(a2,b2) = eps(a) eps(b)
    CycScalar corner = zero;
    CycScalar rest = zero;
    for (const auto& [a1, a2, ca] : m.comult[a])
      for (const auto& [b1, b2, cb] : m.comult[b]) {
        if (a2 == a && b2 == b) {
          corner = corner + ca * cb * j[a1][b1];
        } else {
          if (j[a1][b1].is_zero()) continue;
          if (!done[a2][b2])
            fail("NotInvertible",
                 "convolution inverse needs an entry outside the unitriangular order at " +
                     m.names[a] + "," + m.names[b]);
          rest = rest + ca * cb * j[a1][b1] * inv[a2][b2];
        }
      }
    if (corner.is_zero())
      fail("NotInvertible", "twisting has no invertible grouplike corner at " + m.names[a] + "," +
                                m.names[b]);
    inv[a][b] = (m.counit[a] * m.counit[b] - rest) / corner;
    done[a][b] = 1;
  }
  // verify both convolution identities
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      CycScalar s1 = zero, s2 = zero;
      for (const auto& [a1, a2, ca] : m.comult[a])
        for (const auto& [b1, b2, cb] : m.comult[b]) {
          s1 = s1 + ca * cb * j[a1][b1] * inv[a2][b2];
          s2 = s2 + ca * cb * inv[a1][b1] * j[a2][b2];
        }
      CycScalar expect = m.counit[a] * m.counit[b];
      if (!(s1 == expect) || !(s2 == expect))
        fail("NotInvertible", "convolution inverse verification failed");
    }
  return inv;
}

TwistTable make_twist_from_cochain(const MajidStructure& m,
                                   const std::function<RootExp(int, int)>& grouplike_values) {
  const int dim = m.dim();
  FieldPtr F = m.field;
  CycScalar zero = CycScalar::zero(F);
  TwistTable t;
  t.j.assign(dim, std::vector<CycScalar>(dim, zero));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      if (m.grouplike[a] && m.grouplike[b])
        t.j[a][b] = CycScalar::from_root(F, grouplike_values(a, b));
    }
  // twisting normalization J(h,1) = eps(h) = J(1,h)
  for (int a = 0; a < dim; ++a) {
    if (m.grouplike[a] &&
        (!(t.j[a][m.unit] == m.counit[a]) || !(t.j[m.unit][a] == m.counit[a])))
      fail("BadParameters", "cochain violates the twisting normalization");
  }
  t.jinv = convolution_inverse(m, t.j);
  return t;
}

MajidStructure twist(const MajidStructure& m, const TwistTable& t) {
  const int dim = m.dim();
  FieldPtr F = m.field;
  CycScalar zero = CycScalar::zero(F);
  MajidStructure out = m;  // names, comult, counit, antipode, grading survive

  // multiplication: J(a1,b1) a2 b2 Jinv(a3,b3)
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      SparseVec acc;
      auto sa = m.sweedler(a, 3);
      auto sb = m.sweedler(b, 3);
      for (const auto& [la, ca] : sa)
        for (const auto& [lb, cb] : sb) {
          CycScalar c = ca * cb * t.j[la[0]][lb[0]] * t.jinv[la[2]][lb[2]];
          if (c.is_zero()) continue;
          sparse_add(acc, m.mult[la[1]][lb[1]], c);
        }
      out.mult[a][b] = std::move(acc);
    }

  // associator: J(b1,c1) J(a1, b2 c2) phi(a2,b3,c3) Jinv(a3 b4, c4) Jinv(a4, b5)
  out.assoc.clear();
  for (int a = 0; a < dim; ++a) {
    auto sa = m.sweedler(a, 4);
    for (int b = 0; b < dim; ++b) {
      auto sb = m.sweedler(b, 5);
      for (int c = 0; c < dim; ++c) {
        auto sc = m.sweedler(c, 4);
        CycScalar acc = zero;
        for (const auto& [la, ca] : sa)
          for (const auto& [lb, cb] : sb) {
            for (const auto& [lc, cc] : sc) {
              CycScalar f = t.j[lb[0]][lc[0]];
              if (f.is_zero()) continue;
              // J(a1, b2 c2)
              CycScalar f2 = zero;
              for (const auto& [u, cu] : m.mult[lb[1]][lc[1]]) f2 = f2 + cu * t.j[la[0]][u];
              if (f2.is_zero()) continue;
              CycScalar f3 = m.phi(la[1], lb[2], lc[2]);
              if (f3.is_zero()) continue;
              CycScalar f4 = zero;
              for (const auto& [u, cu] : m.mult[la[2]][lb[3]]) f4 = f4 + cu * t.jinv[u][lc[3]];
              if (f4.is_zero()) continue;
              CycScalar f5 = t.jinv[la[3]][lb[4]];
              if (f5.is_zero()) continue;
              acc = acc + ca * cb * cc * f * f2 * f3 * f4 * f5;
            }
          }
        if (!acc.is_zero()) out.assoc[{a, b, c}] = acc;
      }
    }
  }

  // alpha^J(a) = Jinv(S(a1), a3) alpha(a2); beta^J(a) = J(a1, S(a3)) beta(a2)
  for (int a = 0; a < dim; ++a) {
    CycScalar na = zero, nb = zero;
    for (const auto& [legs, c] : m.sweedler(a, 3)) {
      if (!m.alpha[legs[1]].is_zero()) {
        CycScalar f = zero;
        for (const auto& [u, cu] : m.antipode[legs[0]]) f = f + cu * t.jinv[u][legs[2]];
        na = na + c * m.alpha[legs[1]] * f;
      }
      if (!m.beta[legs[1]].is_zero()) {
        CycScalar f = zero;
        for (const auto& [u, cu] : m.antipode[legs[2]]) f = f + cu * t.j[legs[0]][u];
        nb = nb + c * m.beta[legs[1]] * f;
      }
    }
    out.alpha[a] = na;
    out.beta[a] = nb;
  }
  return out;
}

MajidStructure m_nsq(long n, long s, long q_exp) {
  if (n < 2 || s < 0 || s >= n) fail("BadParameters", "m_nsq needs n >= 2 and 0 <= s < n");
  long n2 = n * n;
  if (gcd_long(q_exp, n2) != 1) fail("BadParameters", "q must be a primitive n^2-th root");
  long L = n2 / gcd_long(n2, s);
  MajidStructure m;
  m.field = CycField::get(n2);
  FieldPtr F = m.field;
  CycScalar zero = CycScalar::zero(F);
  CycScalar one = CycScalar::one(F);
  auto q = [&](long e) { return CycScalar::from_root(F, RootExp(n2, q_exp * e)); };
  auto qq = [&](long e) { return q(n * e); };  // the n-th power root

  const int dim = static_cast<int>(n * L);
  auto idx = [&](long i, long l) { return static_cast<int>((((i % n) + n) % n) * L + l); };
  m.names.resize(dim);
  for (long i = 0; i < n; ++i)
    for (long l = 0; l < L; ++l) {
      std::ostringstream os;
      os << "p" << i << "^" << l;
      m.names[idx(i, l)] = os.str();
    }
  m.unit = idx(0, 0);
  m.grouplike.assign(dim, 0);
  m.degree.assign(dim, 0);
  m.counit.assign(dim, zero);
  m.alpha.assign(dim, zero);
  m.beta.assign(dim, zero);
  m.mult.assign(dim, std::vector<SparseVec>(dim));
  m.comult.resize(dim);
  m.antipode.resize(dim);

  // phi_s on the vertex group
  auto phis = [&](long i, long j, long k) {
    long jj = ((j % n) + n) % n, kk = ((k % n) + n) % n, ii = ((i % n) + n) % n;
    return qq(s * ii * ((jj + kk) / n));
  };

  CycScalar h = qq(-s) * q(-s);
  for (long i = 0; i < n; ++i)
    for (long l = 0; l < L; ++l) {
      int me = idx(i, l);
      m.grouplike[me] = (l == 0);
      m.degree[me] = l;
      m.counit[me] = (l == 0) ? one : zero;
      m.alpha[me] = (l == 0) ? one : zero;
      m.beta[me] = (l == 0) ? phis(i, n - i, i).inverse() : zero;
      for (long v = 0; v <= l; ++v) m.comult[me].emplace_back(idx(i + v, l - v), idx(i, v), one);
    }

  for (long i = 0; i < n; ++i)
    for (long l = 0; l < L; ++l)
      for (long jv = 0; jv < n; ++jv)
        for (long mm = 0; mm < L; ++mm) {
          if (l + mm >= L) continue;  // the gaussian binomial vanishes there
          CycScalar binom = gauss_binom(l, mm, h);
          if (binom.is_zero()) continue;
          long lp = l % n;
          CycScalar coeff = qq(-s * jv * l) * q(-s * jv * l) *
                            qq(s * (i + lp) * ((mm + jv) / n)) * binom;
          sparse_add(m.mult[idx(i, l)][idx(jv, mm)], idx(i + jv, l + mm), coeff);
        }

  // associator: phi(p_i^l, p_j^m, p_k^t) = delta_{l+m+t,0} phi_s(i,j,k)
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k)
        m.assoc[{idx(i, 0), idx(j, 0), idx(k, 0)}] = phis(i, j, k);

  // antipode: S(g^i) = g^{-i}; longer paths from the left antipode equation,
  // peeling the invertible right multiplication by the start vertex.
  for (long i = 0; i < n; ++i) sparse_add(m.antipode[idx(i, 0)], idx(n - i, 0), one);
  for (long l = 1; l < L; ++l)
    for (long i = 0; i < n; ++i) {
      SparseVec rhs;
      for (long w = 1; w <= l; ++w) {
        const SparseVec& sv = m.antipode[idx(i + w, l - w)];
        for (const auto& [u, cu] : sv) sparse_add(rhs, m.mult[u][idx(i, w)], -cu);
      }
      // solve X * g^i = rhs; right multiplication by a vertex is monomial
      SparseVec sol;
      int gi = idx(i, 0);
      for (const auto& [target, value] : rhs) {
        long ti = target / L, tl = target % L;
        int src = idx(ti - i, tl);
        const SparseVec& row = m.mult[src][gi];
        if (row.size() != 1 || row.begin()->first != target)
          fail("InternalInconsistency", "vertex right-multiplication is not monomial");
        sparse_add(sol, src, value / row.begin()->second);
      }
      m.antipode[idx(i, l)] = std::move(sol);
    }
  return m;
}

// --- bosonization ------------------------------------------------------------

MajidStructure bosonize(const BraidedHopfData& h) {
  const AbGroup& gg = h.gsmall;
  auto gelems = all_elements(gg);
  const int ng = static_cast<int>(gelems.size());
  const int nb = static_cast<int>(h.basis.size());
  const int dim = nb * ng;
  if (dim > max_dim_guard())
    fail("DimensionTooLarge", "bosonization dimension " + std::to_string(dim) +
                                  " beyond QQG_MAX_DIM");
  MajidStructure m;
  m.field = h.field;
  FieldPtr F = h.field;
  CycScalar zero = CycScalar::zero(F);
  CycScalar one = CycScalar::one(F);
  auto phiv = [&](const GroupElement& x, const GroupElement& y, const GroupElement& z) {
    return CycScalar::from_root(F, h.phi(x, y, z));
  };
  auto bidx = [&](int w, int g) { return w * ng + g; };

  m.names.resize(dim);
  m.grouplike.assign(dim, 0);
  m.degree.assign(dim, 0);
  m.counit.assign(dim, zero);
  m.alpha.assign(dim, zero);
  m.beta.assign(dim, zero);
  m.mult.assign(dim, std::vector<SparseVec>(dim));
  m.comult.resize(dim);
  m.antipode.resize(dim);

  for (int w = 0; w < nb; ++w)
    for (int g = 0; g < ng; ++g) {
      int me = bidx(w, g);
      std::ostringstream os;
      os << (h.basis[w].len == 0 ? std::string("1") : "x" + h.basis[w].str()) << "#g("
         << gelems[g].e1 << "," << gelems[g].e2 << ")";
      m.names[me] = os.str();
      m.degree[me] = h.basis[w].len;
      bool gl = (h.basis[w].len == 0);
      m.grouplike[me] = gl;
      m.counit[me] = gl ? one : zero;
      m.alpha[me] = gl ? one : zero;
      if (gl)
        m.beta[me] = phiv(gelems[g], inv(gg, gelems[g]), gelems[g]).inverse();
    }
  m.unit = bidx(h.index.at(Word::empty()), static_cast<int>(element_index(gg, GroupElement{0, 0})));

  // product
  for (int w1 = 0; w1 < nb; ++w1)
    for (int g1 = 0; g1 < ng; ++g1)
      for (int w2 = 0; w2 < nb; ++w2)
        for (int g2 = 0; g2 < ng; ++g2) {
          const GroupElement& g = gelems[g1];
          const GroupElement& gh = gelems[g2];
          GroupElement x = h.gdeg[w1];
          GroupElement y = h.gdeg[w2];
          CycScalar factor = phiv(mul(gg, x, g), y, gh) * phiv(x, y, g) *
                             (phiv(x, g, y) * phiv(mul(gg, x, y), g, gh)).inverse();
          CycScalar act = h.action(g, w2);
          SparseVec prod = h.mul(w1, w2);
          int gtar = static_cast<int>(element_index(gg, mul(gg, g, gh)));
          for (const auto& [wt, c] : prod)
            sparse_add(m.mult[bidx(w1, g1)][bidx(w2, g2)], bidx(wt, gtar), factor * act * c);
        }

  // coproduct
  for (int w = 0; w < nb; ++w)
    for (int g = 0; g < ng; ++g) {
      int me = bidx(w, g);
      for (const auto& [w1, w2, c] : h.comult[w]) {
        GroupElement x1 = h.gdeg[w1];
        GroupElement x2 = h.gdeg[w2];
        CycScalar factor = phiv(x1, x2, gelems[g]).inverse();
        int gleft = static_cast<int>(element_index(gg, mul(gg, x2, gelems[g])));
        m.comult[me].emplace_back(bidx(w1, gleft), bidx(w2, g), factor * c);
      }
    }

  // antipode
  for (int w = 0; w < nb; ++w)
    for (int g = 0; g < ng; ++g) {
      GroupElement ge = gelems[g];
      GroupElement x = h.gdeg[w];
      GroupElement gi = inv(gg, ge);
      GroupElement xgi = inv(gg, mul(gg, x, ge));
      CycScalar factor = phiv(gi, ge, gi) *
                         (phiv(xgi, mul(gg, x, ge), gi) * phiv(x, ge, gi)).inverse();
      // (1 # x^-1 g^-1) (S_H(w) # 1)
      int left = bidx(h.index.at(Word::empty()), static_cast<int>(element_index(gg, xgi)));
      SparseVec acc;
      int gone = static_cast<int>(element_index(gg, GroupElement{0, 0}));
      for (const auto& [wt, c] : h.antipode[w]) {
        for (const auto& [tt, cc] : m.mult[left][bidx(wt, gone)]) sparse_add(acc, tt, cc * c);
      }
      for (auto& [k, v] : acc) sparse_add(m.antipode[bidx(w, g)], k, v * factor);
    }
  return m;
}

long max_dim_guard() {
  if (const char* env = std::getenv("QQG_MAX_DIM")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 512;
}

// --- assembled pipeline -------------------------------------------------------

bool centrality_check(const CongruenceInstance& inst, const Abd& abd) {
  const AbGroup big = inst.big;
  const long N = lcm_long(lcm_long(big.m, big.n), inst.small.m * inst.small.n);
  Cochain2 j(CocycleParams(inst.small, abd.a, abd.b, abd.d), N);
  GroupElement hs[2] = {inst.h1(), inst.h2()};
  long xm[2] = {inst.x.x11, inst.x.x12};
  long xn[2] = {inst.x.x21, inst.x.x22};
  GroupElement zs[2] = {pow(big, element(big, 1, 0), inst.small.m),
                        pow(big, element(big, 0, 1), inst.small.n)};
  for (const auto& z : zs)
    for (int i = 0; i < 2; ++i) {
      // untwisted action scalar of z on X_i, then the cochain correction
      RootExp act = root_in(N, big.m, xm[i] * z.e1) * root_in(N, big.n, xn[i] * z.e2);
      RootExp corr = eval_J(j, z, hs[i]) * eval_J(j, hs[i], z).inverse();
      if (!(corr * act).is_one()) return false;
    }
  return true;
}

namespace {

TwistedNicholsData twisted_nichols_impl(const CongruenceInstance& inst, long max_degree,
                                        const RelationSet* plain_override,
                                        const RelationSet* twisted_override, int tree_id) {
  auto abd = solve_abd(inst);
  if (!abd) fail("NotMajidType", "instance fails the descent criterion");
  const AbGroup big = inst.big;
  const long N = lcm_long(lcm_long(big.m, big.n), inst.small.m * inst.small.n);
  FieldPtr F = CycField::get(N);
  DiagonalYD yd = yd_from_exponents(big, inst.h1(), inst.h2(), inst.x, N);
  Cochain2 j(CocycleParams(inst.small, abd->a, abd->b, abd->d), N);
  Braiding br(yd, F);
  if (max_degree <= 0) max_degree = default_max_degree(br);
  RelationSet plain_rels, twist_rels;
  if (plain_override) {
    plain_rels = *plain_override;
    twist_rels = *twisted_override;
  } else {
    FullBinaryTree t = tree(tree_id);
    plain_rels = relations(t, br);
    twist_rels = relations_twisted(t, br, j);
  }
  GradedQuotient plain(F, plain_rels, plain_scale(F), max_degree);
  GradedQuotient twisted(F, twist_rels, twisted_scale(br, j), max_degree);
  return TwistedNicholsData{F, yd, j, std::move(plain), std::move(twisted)};
}

}  // namespace

TwistedNicholsData twisted_nichols(const CongruenceInstance& inst, int tree_id, long max_degree) {
  return twisted_nichols_impl(inst, max_degree, nullptr, nullptr, tree_id);
}

namespace {

MvgResult assemble_mvg(const CongruenceInstance& inst, TwistedNicholsData nd, long max_dim) {
  auto abd = solve_abd(inst);
  if (!abd) fail("NotMajidType", "instance fails the descent criterion");
  if (max_dim <= 0) max_dim = max_dim_guard();
  const GradedQuotient& Q0 = nd.plain;
  const GradedQuotient& QJ = nd.twisted;
  if (Q0.truncated() || QJ.truncated())
    fail("NotClassified", "quotient did not truncate within the degree bound");
  if (Q0.dims() != QJ.dims() || Q0.basis() != QJ.basis())
    fail("InternalInconsistency", "twisted and plain quotients disagree");
  if (!centrality_check(inst, *abd))
    fail("InternalInconsistency", "descent parameters fail the centrality guard");

  const AbGroup big = inst.big;
  const AbGroup small = inst.small;
  FieldPtr F = nd.field;
  const Braiding br(nd.yd, F);
  const Cochain2& j = nd.j;
  long bd = QJ.total_dim();
  if (bd * small.order() > max_dim)
    fail("DimensionTooLarge", "total dimension " + std::to_string(bd * small.order()) +
                                  " beyond the guard");

  const std::vector<Word>& basis = QJ.basis();
  const int nb = static_cast<int>(basis.size());
  std::map<Word, int> index;
  for (int i = 0; i < nb; ++i) index[basis[i]] = i;

  // big-group degrees and their projections
  std::vector<GroupElement> bigdeg(nb), smalldeg(nb);
  for (int i = 0; i < nb; ++i) {
    bigdeg[i] = br.gdeg(basis[i]);
    smalldeg[i] = element(small, bigdeg[i].e1, bigdeg[i].e2);
  }

  // untwisted shuffle comultiplication on the plain quotient
  auto reduce_to = [&](const FreeWordPoly& p, const GradedQuotient& q) {
    return q.reduce(p);
  };
  std::vector<std::vector<std::tuple<int, int, CycScalar>>> comult0(nb);
  for (int u = 0; u < nb; ++u) {
    const Word& w = basis[u];
    std::map<std::pair<Word, Word>, CycScalar> legs;
    for (uint64_t mask = 0; mask < (1ull << w.len); ++mask) {
      Word left, right;
      CycScalar c = CycScalar::one(F);
      std::pair<long, long> rightdeg{0, 0};
      for (uint32_t p = 0; p < w.len; ++p) {
        int ell = w.at(p);
        std::pair<long, long> ed = (ell == 1) ? std::make_pair(1L, 0L) : std::make_pair(0L, 1L);
        if (mask & (1ull << p)) {
          // letter joins the left leg, crossing the right letters before it
          c = c * br.chi(rightdeg, ed);
          left = left.concat(Word::letter(ell));
        } else {
          right = right.concat(Word::letter(ell));
          rightdeg.first += ed.first;
          rightdeg.second += ed.second;
        }
      }
      auto key = std::make_pair(left, right);
      auto it = legs.find(key);
      if (it == legs.end())
        legs.emplace(key, c);
      else
        it->second = it->second + c;
    }
    std::map<std::pair<int, int>, CycScalar> agg0;
    for (const auto& [lw, c] : legs) {
      FreeWordPoly lp = reduce_to(FreeWordPoly::monomial(F, lw.first, c), Q0);
      FreeWordPoly rp = reduce_to(FreeWordPoly::monomial(F, lw.second, CycScalar::one(F)), Q0);
      for (const auto& [v, cv] : lp.terms())
        for (const auto& [x, cx] : rp.terms()) {
          auto key = std::make_pair(index.at(v), index.at(x));
          auto it = agg0.find(key);
          if (it == agg0.end())
            agg0.emplace(key, cv * cx);
          else
            it->second = it->second + cv * cx;
        }
    }
    for (const auto& [k, v] : agg0)
      if (!v.is_zero()) comult0[u].emplace_back(k.first, k.second, v);
  }

  auto jval = [&](const GroupElement& a, const GroupElement& b) {
    return CycScalar::from_root(F, eval_J(j, a, b));
  };
  auto psi_c = [&](const Word& w) { return psi_factor(br, j, w); };

  // transported comultiplication of the twisted quotient
  std::vector<std::vector<std::tuple<int, int, CycScalar>>> comultJ(nb);
  for (int u = 0; u < nb; ++u) {
    std::map<std::pair<int, int>, CycScalar> agg;
    CycScalar cu = psi_c(basis[u]);
    for (const auto& [v, x, c] : comult0[u]) {
      CycScalar val = cu * c * jval(bigdeg[v], bigdeg[x]).inverse() * psi_c(basis[v]).inverse() *
                      psi_c(basis[x]).inverse();
      auto key = std::make_pair(v, x);
      auto it = agg.find(key);
      if (it == agg.end())
        agg.emplace(key, val);
      else
        it->second = it->second + val;
    }
    for (const auto& [k, v] : agg)
      if (!v.is_zero()) comultJ[u].emplace_back(k.first, k.second, v);
  }

  // twisted braided antipode, recursively over prefixes
  std::map<Word, SparseVec> smemo;
  std::function<SparseVec(const Word&)> s_of = [&](const Word& w) -> SparseVec {
    auto it = smemo.find(w);
    if (it != smemo.end()) return it->second;
    SparseVec out;
    if (w.len == 0) {
      sparse_add(out, index.at(Word::empty()), CycScalar::one(F));
    } else {
      Word pre = w.prefix(w.len - 1);
      int ell = w.at(w.len - 1);
      Word lw = Word::letter(ell);
      // S(E o F) = sigma(E, F) S(F) o S(E) with the twisted braiding
      GroupElement de = br.gdeg(pre);
      GroupElement df = br.gdeg(lw);
      CycScalar sigma = jval(de, df) * jval(df, de).inverse() * br.chi(pre.z2deg(), lw.z2deg());
      SparseVec spre = s_of(pre);
      // (-X_ell) o spre through the twisted quotient
      FreeWordPoly acc(F);
      for (const auto& [iu, cu] : spre) {
        FreeWordPoly term(F);
        term.add_term(lw.concat(basis[iu]), QJ.scale()(lw, basis[iu]) * cu);
        acc = acc + term;
      }
      FreeWordPoly red = QJ.reduce(acc);
      for (const auto& [wv, cv] : red.terms())
        sparse_add(out, index.at(wv), -sigma * cv);
    }
    smemo.emplace(w, out);
    return out;
  };
  std::vector<SparseVec> antipodeJ(nb);
  for (int u = 0; u < nb; ++u) antipodeJ[u] = s_of(basis[u]);

  // small-group action through the section, with the cochain correction
  auto action = [&, F](const GroupElement& gs, int wi) -> CycScalar {
    GroupElement g{gs.e1, gs.e2};  // section into the big group
    auto d = basis[wi].z2deg();
    RootExp untw = root_in(F->order(), big.m, inst.x.x11 * g.e1 * d.first +
                                                  inst.x.x12 * g.e1 * d.second) *
                   root_in(F->order(), big.n,
                           inst.x.x21 * g.e2 * d.first + inst.x.x22 * g.e2 * d.second);
    RootExp corr = eval_J(j, g, bigdeg[wi]) * eval_J(j, bigdeg[wi], g).inverse();
    return CycScalar::from_root(F, corr * untw);
  };

  BraidedHopfData hd;
  hd.field = F;
  hd.gsmall = small;
  hd.phi = Cocycle3::from_params(CocycleParams(small, abd->a, abd->b, abd->d), F->order());
  hd.basis = basis;
  hd.index = index;
  hd.gdeg = smalldeg;
  hd.action = action;
  hd.mul = [&QJ, &basis, &index](int a, int b) {
    SparseVec out;
    FreeWordPoly p = QJ.mul_basis(basis[a], basis[b]);
    for (const auto& [w, c] : p.terms()) sparse_add(out, index.at(w), c);
    return out;
  };
  hd.comult = comultJ;
  hd.antipode = antipodeJ;

  MvgResult res;
  res.abd = *abd;
  res.genuine = is_genuine(*abd);
  res.nichols_dim = QJ.total_dim();
  res.nichols_dims = QJ.dims();
  res.structure = bosonize(hd);
  return res;
}

}  // namespace

MvgResult build_mvg(const CongruenceInstance& inst, int tree_id, long max_degree, long max_dim) {
  return assemble_mvg(inst, twisted_nichols_impl(inst, max_degree, nullptr, nullptr, tree_id),
                      max_dim);
}

MvgResult build_mvg_custom(const CongruenceInstance& inst, const RelationSet& plain_rels,
                           const RelationSet& twisted_rels, long max_degree, long max_dim) {
  return assemble_mvg(inst,
                      twisted_nichols_impl(inst, max_degree, &plain_rels, &twisted_rels, 0),
                      max_dim);
}

}  // namespace qqg
