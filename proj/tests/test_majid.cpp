#include "doctest.h"
#include "qqg/json_io.hpp"
#include "qqg/majid.hpp"

using namespace qqg;

namespace {

TwistTable family_twist(const MajidStructure& m, const Cochain2& j, bool invert) {
  const AbGroup g = j.big;
  auto elems = all_elements(g);
  return make_twist_from_cochain(m, [&, invert](int a, int b) {
    RootExp v = eval_J(j, elems[a], elems[b]).embed(m.field->order());
    return invert ? v.inverse() : v;
  });
}

bool structures_equal(const MajidStructure& a, const MajidStructure& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (a.mult[i][j] != b.mult[i][j]) return false;
    }
    if (!(a.alpha[i] == b.alpha[i]) || !(a.beta[i] == b.beta[i])) return false;
    if (a.antipode[i] != b.antipode[i]) return false;
  }
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (!(a.phi(i, j, k) == b.phi(i, j, k))) return false;
  return true;
}

}  // namespace

TEST_CASE("group algebras satisfy the axioms") {
  SUBCASE("trivial associator") {
    AbGroup g(2, 2);
    MajidStructure m = group_majid(g, Cocycle3::trivial(g));
    AxiomReport rep = check_axioms(m);
    CHECK_MESSAGE(rep.all_pass(), rep.summary());
  }
  SUBCASE("family associators over Z2xZ2") {
    AbGroup g(2, 2);
    for (const auto& p : CocycleParams::family(g)) {
      MajidStructure m = group_majid(g, Cocycle3::from_params(p));
      AxiomReport rep = check_axioms(m);
      CHECK_MESSAGE(rep.all_pass(), rep.summary());
    }
  }
  SUBCASE("beta values") {
    AbGroup g(2, 2);
    MajidStructure m = group_majid(g, Cocycle3::from_params(CocycleParams(g, 1, 0, 0)));
    long g1 = element_index(g, element(g, 1, 0));
    CHECK(m.beta[g1] == -CycScalar::one(m.field));
  }
  SUBCASE("a non-cocycle is rejected") {
    AbGroup g(2, 2);
    std::vector<long> bad(64, 0);
    bad[21] = 1;
    CHECK_THROWS_AS(group_majid(g, Cocycle3::from_table(g, 2, bad)), Error);
  }
}

TEST_CASE("mutation sensitivity") {
  AbGroup g(2, 2);
  MajidStructure m = group_majid(g, Cocycle3::from_params(CocycleParams(g, 1, 0, 1)));
  REQUIRE(check_axioms(m).all_pass());
  SUBCASE("corrupted associator entry") {
    MajidStructure bad = m;
    bad.assoc[{1, 1, 1}] = bad.assoc[{1, 1, 1}] * -CycScalar::one(m.field);
    AxiomReport rep = check_axioms(bad);
    CHECK_FALSE(rep.all_pass());
    bool witnessed = false;
    for (const auto& [k, v] : rep.checks) witnessed = witnessed || (!v.pass && !v.witness.empty());
    CHECK(witnessed);
  }
  SUBCASE("corrupted multiplication entry") {
    MajidStructure bad = m;
    bad.mult[1][2].begin()->second = bad.mult[1][2].begin()->second * -CycScalar::one(m.field);
    CHECK_FALSE(check_axioms(bad).all_pass());
  }
}

TEST_CASE("rank one structures") {
  MajidStructure m = m_nsq(2, 1);
  CHECK(m.dim() == 8);
  // unit acts as identity
  long p01 = 0;  // index of p0^1: i = 0, l = 1 with L = 4
  p01 = 1;
  SparseVec unitvec;
  sparse_add(unitvec, m.unit, CycScalar::one(m.field));
  CHECK(m.mult[m.unit][p01].size() == 1);
  CHECK(m.mult[m.unit][p01].begin()->first == p01);
  CHECK(m.mult[m.unit][p01].begin()->second == CycScalar::one(m.field));

  // p0^1 * p0^1 = (1 + qq^-1 q^-1) p0^2
  CycScalar h = CycScalar::from_root(m.field, RootExp(4, 1)).pow(-3);  // (qq*q)^{-s}
  const SparseVec& sq = m.mult[p01][p01];
  REQUIRE(sq.size() == 1);
  CHECK(sq.begin()->first == 2);  // p0^2
  CHECK(sq.begin()->second == CycScalar::one(m.field) + h);

  // S(p0^1) = qq^{-s} p_{n-1}^1
  const SparseVec& s01 = m.antipode[p01];
  REQUIRE(s01.size() == 1);
  CHECK(s01.begin()->first == 1 * 4 + 1);  // p1^1
  CHECK(s01.begin()->second == CycScalar::from_root(m.field, RootExp(2, 1)));

  AxiomReport rep = check_axioms(m);
  CHECK_MESSAGE(rep.all_pass(), rep.summary());

  MajidStructure m31 = m_nsq(3, 1);
  CHECK(m31.dim() == 27);
  MajidStructure m32 = m_nsq(3, 2);
  CHECK(m32.dim() == 27);
  CHECK_THROWS_AS(m_nsq(2, 1, 2), Error);
}

TEST_CASE("twisting group algebras") {
  AbGroup small(2, 2);
  for (long d = 0; d < 2; ++d) {
    CocycleParams p(small, 1, 0, d);
    Cochain2 j(p);
    AbGroup big = j.big;
    // the big group algebra with the pulled-back associator
    Cocycle3 pb = pullback(Cocycle3::from_params(p, j.arena), big);
    MajidStructure m = group_majid(big, pb);
    REQUIRE(check_axioms(m).all_pass());

    TwistTable tw = family_twist(m, j, false);
    TwistTable twinv = family_twist(m, j, true);

    SUBCASE("round trip restores the structure") {
      MajidStructure once = twist(m, tw);
      MajidStructure back = twist(once, twinv);
      CHECK(structures_equal(back, m));
    }
    SUBCASE("untwisting the pullback trivializes the associator") {
      MajidStructure flat = twist(m, twinv);
      for (int a = 0; a < flat.dim(); ++a)
        for (int b = 0; b < flat.dim(); ++b)
          for (int c = 0; c < flat.dim(); ++c)
            CHECK(flat.phi(a, b, c) == CycScalar::one(m.field));
      CHECK(check_axioms(flat).all_pass());
    }
  }
}

TEST_CASE("bosonization of the sign line gives the four dimensional structure") {
  // trivial associator over Z2, H = k[X]/(X^2) with the sign action
  AbGroup z2(1, 2);
  FieldPtr F = CycField::get(4);
  BraidedHopfData h;
  h.field = F;
  h.gsmall = z2;
  h.phi = Cocycle3::trivial(z2);
  Word one = Word::empty(), x = Word::letter(1);
  h.basis = {one, x};
  h.index[one] = 0;
  h.index[x] = 1;
  h.gdeg = {element(z2, 0, 0), element(z2, 0, 1)};
  h.action = [F](const GroupElement& g, int w) {
    if (w == 1 && g.e2 == 1) return -CycScalar::one(F);
    return CycScalar::one(F);
  };
  h.mul = [F](int a, int b) {
    SparseVec out;
    if (a == 0 && b == 0) sparse_add(out, 0, CycScalar::one(F));
    if (a == 0 && b == 1) sparse_add(out, 1, CycScalar::one(F));
    if (a == 1 && b == 0) sparse_add(out, 1, CycScalar::one(F));
    // X * X = 0
    return out;
  };
  h.comult.resize(2);
  h.comult[0].emplace_back(0, 0, CycScalar::one(F));
  h.comult[1].emplace_back(1, 0, CycScalar::one(F));
  h.comult[1].emplace_back(0, 1, CycScalar::one(F));
  h.antipode.resize(2);
  sparse_add(h.antipode[0], 0, CycScalar::one(F));
  sparse_add(h.antipode[1], 1, -CycScalar::one(F));

  MajidStructure m = bosonize(h);
  CHECK(m.dim() == 4);
  AxiomReport rep = check_axioms(m);
  CHECK_MESSAGE(rep.all_pass(), rep.summary());
  // gx = -xg in the bosonized algebra
  int gx = -1, xg = -1;
  for (int i = 0; i < 4; ++i) {
    if (m.names[i] == "1#g(0,1)") gx = i;
    if (m.names[i] == "1#g(0,0)") CHECK(i == m.unit);
  }
  REQUIRE(gx >= 0);
  (void)xg;
}

TEST_CASE("assembled quotient structures") {
  SUBCASE("non-genuine quantum plane instance") {
    AbGroup small(2, 2), big = small.doubled();
    CongruenceInstance inst = make_instance(small, element(big, 1, 0), element(big, 0, 1),
                                            ActionExponents{2, 2, 2, 2});
    MvgResult res = build_mvg(inst, 1);
    CHECK(res.abd == (Abd{0, 0, 0}));
    CHECK_FALSE(res.genuine);
    CHECK(res.nichols_dim == 4);
    CHECK(res.structure.dim() == 16);
    AxiomReport rep = check_axioms(res.structure);
    CHECK_MESSAGE(rep.all_pass(), rep.summary());
  }
  SUBCASE("genuine instance over Z2xZ2") {
    AbGroup small(2, 2), big = small.doubled();
    CongruenceInstance inst = make_instance(small, element(big, 1, 0), element(big, 0, 1),
                                            ActionExponents{2, 2, 2, 1});
    MvgResult res = build_mvg(inst, 1);
    CHECK(res.abd == (Abd{0, 0, 1}));
    CHECK(res.genuine);
    CHECK(res.nichols_dim == 8);
    CHECK(res.structure.dim() == 32);
    AxiomReport rep = check_axioms(res.structure);
    CHECK_MESSAGE(rep.all_pass(), rep.summary());
  }
  SUBCASE("non-majid-type instances are rejected") {
    AbGroup small(2, 2), big = small.doubled();
    CongruenceInstance inst = make_instance(small, element(big, 1, 1), element(big, 0, 1),
                                            ActionExponents{0, 0, 0, 1});
    CHECK_THROWS_AS(build_mvg(inst, 1), Error);
  }
}

TEST_CASE("the rank one catalogue structure matches the assembled one") {
  // the cyclic instance whose twisted line bosonizes to the path structure
  AbGroup small(1, 2), big = small.doubled();
  CongruenceInstance inst =
      make_instance(small, element(big, 0, 1), element(big, 0, 1), ActionExponents{0, 0, 3, 3});
  FieldPtr F = CycField::get(4);

  // the braided line: X2 dies, X1 spans k[X]/(X^4)
  RelationSet line;
  line.relations.push_back({FreeWordPoly::generator(F, 2), RelTag::LeafTau, 0});
  FreeWordPoly x14(F);
  x14.add_term(Word::parse("1111"), CycScalar::one(F));
  line.relations.push_back({x14, RelTag::PowerTau, 0});

  MvgResult res = build_mvg_custom(inst, line, line, 8);
  CHECK(res.abd == (Abd{0, 0, 1}));
  CHECK(res.structure.dim() == 8);
  AxiomReport rep = check_axioms(res.structure);
  CHECK_MESSAGE(rep.all_pass(), rep.summary());

  // compare with the path-coalgebra construction through the diagonal
  // identification p_i^l = lambda_{il} * (X^l # g^i), lambda = (qq q)^{sil} / l!_h
  MajidStructure cat = m_nsq(2, 1);
  REQUIRE(cat.dim() == 8);
  CycScalar qqq = CycScalar::from_root(F, RootExp(4, 3));  // qq * q
  CycScalar h = CycScalar::from_root(F, RootExp(4, 1));    // qq^{-s} q^{-s} = q^{-3}
  std::vector<int> to_bos(8);
  std::vector<CycScalar> lam(8, CycScalar::one(F));
  for (long i = 0; i < 2; ++i)
    for (long l = 0; l < 4; ++l) {
      int cat_idx = static_cast<int>(i * 4 + l);
      Word w;
      for (long k = 0; k < l; ++k) w = w.concat(Word::letter(1));
      std::string target =
          (l == 0 ? std::string("1") : "x" + w.str()) + "#g(0," + std::to_string(i) + ")";
      int bos_idx = -1;
      for (int t = 0; t < 8; ++t)
        if (res.structure.names[t] == target) bos_idx = t;
      REQUIRE(bos_idx >= 0);
      to_bos[cat_idx] = bos_idx;
      lam[cat_idx] = qqq.pow(i * l) / gauss_factorial(l, h);
    }
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      // c * lam_k = c' * lam_a * lam_b for matching product entries
      SparseVec lhs, rhs;
      for (const auto& [k, c] : cat.mult[a][b]) sparse_add(lhs, to_bos[k], c * lam[k]);
      for (const auto& [k, c] : res.structure.mult[to_bos[a]][to_bos[b]])
        sparse_add(rhs, k, c * lam[a] * lam[b]);
      CHECK(lhs == rhs);
    }
    // comultiplication: c * lam_u * lam_v = c' * lam_a
    std::map<std::pair<int, int>, CycScalar> clhs, crhs;
    for (const auto& [u, v, c] : cat.comult[a])
      clhs[{to_bos[u], to_bos[v]}] = c * lam[u] * lam[v];
    for (const auto& [u, v, c] : res.structure.comult[to_bos[a]]) crhs[{u, v}] = c * lam[a];
    CHECK(clhs == crhs);
    // antipode: c * lam_k = c' * lam_a
    SparseVec slhs, srhs;
    for (const auto& [k, c] : cat.antipode[a]) sparse_add(slhs, to_bos[k], c * lam[k]);
    for (const auto& [k, c] : res.structure.antipode[to_bos[a]])
      sparse_add(srhs, k, c * lam[a]);
    CHECK(slhs == srhs);
    // functionals pick up lam_a, which is one on the grouplike support
    CHECK(cat.counit[a] == res.structure.counit[to_bos[a]] * lam[a]);
    CHECK(cat.alpha[a] == res.structure.alpha[to_bos[a]] * lam[a]);
    CHECK(cat.beta[a] == res.structure.beta[to_bos[a]] * lam[a]);
  }
  // the associators agree on the grouplike support
  for (long i = 0; i < 2; ++i)
    for (long j2 = 0; j2 < 2; ++j2)
      for (long k = 0; k < 2; ++k)
        CHECK(cat.phi(static_cast<int>(i * 4), static_cast<int>(j2 * 4),
                      static_cast<int>(k * 4)) ==
              res.structure.phi(to_bos[i * 4], to_bos[j2 * 4], to_bos[k * 4]));
}

TEST_CASE("structure dumps round trip") {
  AbGroup g(2, 2);
  MajidStructure m = group_majid(g, Cocycle3::from_params(CocycleParams(g, 1, 0, 1)));
  Json j = structure_to_json(m);
  MajidStructure back = structure_from_json(j);
  CHECK(structures_equal(m, back));
  CHECK(check_axioms(back).all_pass());
}
