#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qqg/classify.hpp"
#include "qqg/cocycle.hpp"
#include "qqg/json_io.hpp"
#include "qqg/majid.hpp"
#include "qqg/nichols.hpp"
#include "qqg/tables_data.hpp"
#include "qqg/trees.hpp"
#include "qqg/yd.hpp"

namespace {

using namespace qqg;

// "zeta12^10", "zeta12", "1", "-1"
RootExp parse_root(const std::string& s) {
  if (s == "1") return RootExp(1, 0);
  if (s == "-1") return RootExp(2, 1);
  if (s.rfind("zeta", 0) != 0) fail("BadParameters", "bad root literal: " + s);
  auto caret = s.find('^');
  long order = std::stol(s.substr(4, caret == std::string::npos ? std::string::npos : caret - 4));
  long exp = caret == std::string::npos ? 1 : std::stol(s.substr(caret + 1));
  return RootExp(order, exp);
}

int parse_tree_id(const std::string& s) {
  std::string t = s;
  if (!t.empty() && (t[0] == 'T' || t[0] == 't')) t = t.substr(1);
  return std::stoi(t);
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

Json relation_to_json(const Relation& r) {
  Json terms = Json::array();
  for (const auto& [w, c] : r.poly.terms())
    terms.push_back({{"word", w.str()}, {"coeff", scalar_to_json(c)}});
  Json j;
  auto d = r.poly.is_zero() ? std::make_pair(0L, 0L) : r.poly.z2deg();
  j["degree"] = {d.first, d.second};
  j["terms"] = terms;
  switch (r.tag) {
    case RelTag::LeafTau: j["kind"] = "leaf-tau"; break;
    case RelTag::PowerTau: j["kind"] = "power-tau"; break;
    case RelTag::Mixed: j["kind"] = "mixed"; break;
  }
  return j;
}

struct QuadOpts {
  std::string q11, q12, q21, q22;
};

DiagonalYD yd_from_roots(const QuadOpts& q, long& arena) {
  RootExp r11 = parse_root(q.q11), r12 = parse_root(q.q12), r21 = parse_root(q.q21),
          r22 = parse_root(q.q22);
  arena = lcm_long(lcm_long(r11.order, r12.order), lcm_long(r21.order, r22.order));
  DiagonalYD yd;
  yd.group = AbGroup(arena, arena);
  yd.h1 = element(yd.group, 1, 0);
  yd.h2 = element(yd.group, 0, 1);
  yd.q[0][0] = r11.embed(arena);
  yd.q[0][1] = r12.embed(arena);
  yd.q[1][0] = r21.embed(arena);
  yd.q[1][1] = r22.embed(arena);
  return yd;
}

int run(int argc, char** argv) {
  CLI::App app{"exact constructors and checkers for rank-2 pointed quasi-quantum data"};
  app.require_subcommand(1);
  std::string format = "json";
  long seed = 0;
  long threads = 0;
  app.add_option("--format", format, "output format: json | table | dot");
  app.add_option("--seed", seed, "random seed for sampled checks");
  app.add_option("--threads", threads, "worker threads (0 = hardware default)");

  // verify-cocycle
  auto* vc = app.add_subcommand("verify-cocycle", "pentagon and commutativity checks for a family cocycle");
  std::string vc_group;
  long vc_a = 0, vc_b = 0, vc_d = 0;
  vc->add_option("--group", vc_group)->required();
  vc->add_option("--a", vc_a)->required();
  vc->add_option("--b", vc_b)->required();
  vc->add_option("--d", vc_d)->required();

  // resolve
  auto* rs = app.add_subcommand("resolve", "compare the cochain differential with the pulled-back cocycle");
  std::string rs_group;
  long rs_a = 0, rs_b = 0, rs_d = 0;
  rs->add_option("--group", rs_group)->required();
  rs->add_option("--a", rs_a)->required();
  rs->add_option("--b", rs_b)->required();
  rs->add_option("--d", rs_d)->required();

  // emit-dynkin
  auto* ed = app.add_subcommand("emit-dynkin", "DOT rendering of the labelled diagram");
  QuadOpts ed_q;
  ed->add_option("--q11", ed_q.q11)->required();
  ed->add_option("--q12", ed_q.q12)->required();
  ed->add_option("--q21", ed_q.q21)->required();
  ed->add_option("--q22", ed_q.q22)->required();

  // relations
  auto* rl = app.add_subcommand("relations", "defining relations of the catalogued quotient");
  QuadOpts rl_q;
  std::string rl_tree, rl_twist, rl_group;
  rl->add_option("--tree", rl_tree)->required();
  rl->add_option("--q11", rl_q.q11)->required();
  rl->add_option("--q12", rl_q.q12)->required();
  rl->add_option("--q21", rl_q.q21)->required();
  rl->add_option("--q22", rl_q.q22)->required();
  rl->add_option("--twist", rl_twist, "a,b,d parameters of the twisting cochain");
  rl->add_option("--group", rl_group, "base group for the twisting cochain");

  // nichols-dim
  auto* nd = app.add_subcommand("nichols-dim", "graded dimensions of the quotient");
  QuadOpts nd_q;
  std::string nd_tree;
  long nd_maxdeg = 0;
  nd->add_option("--tree", nd_tree)->required();
  nd->add_option("--q11", nd_q.q11)->required();
  nd->add_option("--q12", nd_q.q12)->required();
  nd->add_option("--q21", nd_q.q21)->required();
  nd->add_option("--q22", nd_q.q22)->required();
  nd->add_option("--max-degree", nd_maxdeg);

  // classify
  auto* cl = app.add_subcommand("classify", "admissible data over a group");
  std::string cl_group;
  bool cl_standard = false;
  long cl_cyclic = 0;
  cl->add_option("--group", cl_group);
  cl->add_flag("--standard", cl_standard);
  cl->add_option("--cyclic", cl_cyclic);

  // build-majid
  auto* bm = app.add_subcommand("build-majid", "assemble the quotient structure over the small group");
  std::string bm_group, bm_tree, bm_x, bm_h1, bm_h2, bm_out;
  long bm_maxdeg = 0;
  bm->add_option("--group", bm_group)->required();
  bm->add_option("--tree", bm_tree)->required();
  bm->add_option("--x", bm_x)->required();
  bm->add_option("--h1", bm_h1, "degree of X1 as i,j (default 1,0)");
  bm->add_option("--h2", bm_h2, "degree of X2 as i,j (default 0,1)");
  bm->add_option("--max-degree", bm_maxdeg);
  bm->add_option("--output", bm_out, "write the structure dump to a file");

  // check-axioms
  auto* ca = app.add_subcommand("check-axioms", "run the axiom battery on a structure dump");
  std::string ca_input;
  ca->add_option("--input", ca_input)->required();

  // tables
  auto* tb = app.add_subcommand("tables", "regenerate the per-prime admissibility tables");
  std::string tb_which;
  long tb_n = 0;
  tb->add_option("--which", tb_which)->required();
  tb->add_option("--n", tb_n, "cyclic group order for the cyclic table");

  CLI11_PARSE(app, argc, argv);

  if (vc->parsed()) {
    AbGroup g = AbGroup::parse(vc_group);
    CocycleParams p(g, vc_a, vc_b, vc_d);
    Cocycle3 phi = Cocycle3::from_params(p);
    bool isc = verify_3cocycle(phi);
    bool isab = is_abelian_cocycle(phi);
    Json j{{"group", g.str()}, {"a", vc_a}, {"b", vc_b}, {"d", vc_d},
           {"is_cocycle", isc},  {"is_abelian", isab}};
    std::cout << j.dump(2) << "\n";
    return (isc && isab) ? 0 : 1;
  }
  if (rs->parsed()) {
    AbGroup g = AbGroup::parse(rs_group);
    CocycleParams p(g, rs_a, rs_b, rs_d);
    Cochain2 j2(p);
    Cocycle3 db = coboundary(j2);
    Cocycle3 pb = pullback(Cocycle3::from_params(p, j2.arena), j2.big);
    bool match = true;
    auto elems = all_elements(j2.big);
    for (const auto& x : elems)
      for (const auto& y : elems)
        for (const auto& z : elems)
          if (db(x, y, z) != pb(x, y, z)) {
            match = false;
            goto resolved;
          }
  resolved:
    Json j{{"group", g.str()},
           {"doubled_group", j2.big.str()},
           {"a", rs_a},
           {"b", rs_b},
           {"d", rs_d},
           {"coboundary_matches_pullback", match}};
    std::cout << j.dump(2) << "\n";
    return match ? 0 : 1;
  }
  if (ed->parsed()) {
    long arena = 0;
    DiagonalYD yd = yd_from_roots(ed_q, arena);
    std::cout << dynkin_dot(dynkin(yd));
    return 0;
  }
  if (rl->parsed() || nd->parsed()) {
    bool dims_mode = nd->parsed();
    const QuadOpts& qo = dims_mode ? nd_q : rl_q;
    int tree_id = parse_tree_id(dims_mode ? nd_tree : rl_tree);
    FullBinaryTree t = tree(tree_id);
    if (!dims_mode && !rl_twist.empty()) {
      if (rl_group.empty())
        fail("BadParameters", "--twist needs --group for the cochain base group");
      AbGroup small = AbGroup::parse(rl_group);
      auto abd = parse_longs(rl_twist);
      if (abd.size() != 3) fail("BadParameters", "--twist expects a,b,d");
      CocycleParams p(small, abd[0], abd[1], abd[2]);
      Cochain2 j2(p);
      long arena = j2.arena;
      RootExp r11 = parse_root(qo.q11).embed(arena), r12 = parse_root(qo.q12).embed(arena),
              r21 = parse_root(qo.q21).embed(arena), r22 = parse_root(qo.q22).embed(arena);
      DiagonalYD yd;
      yd.group = j2.big;
      yd.h1 = element(yd.group, 1, 0);
      yd.h2 = element(yd.group, 0, 1);
      yd.q[0][0] = r11;
      yd.q[0][1] = r12;
      yd.q[1][0] = r21;
      yd.q[1][1] = r22;
      Braiding br(yd, CycField::get(arena));
      RelationSet rels = relations_twisted(t, br, j2);
      Json out = Json::array();
      for (const auto& r : rels.relations) out.push_back(relation_to_json(r));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    long arena = 0;
    DiagonalYD yd = yd_from_roots(qo, arena);
    FieldPtr F = CycField::get(arena);
    Braiding br(yd, F);
    RelationSet rels = relations(t, br);
    if (!dims_mode) {
      Json out = Json::array();
      for (const auto& r : rels.relations) out.push_back(relation_to_json(r));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    long maxdeg = nd_maxdeg > 0 ? nd_maxdeg : default_max_degree(br);
    GradedQuotient q(F, rels, plain_scale(F), maxdeg);
    Json j{{"dims", q.dims()}, {"total", q.total_dim()}, {"truncated", q.truncated()}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (cl->parsed()) {
    Json out = Json::array();
    std::ostringstream table;
    if (cl_standard) {
      AbGroup g = AbGroup::parse(cl_group);
      auto entries = enumerate_standard(g.m, g.n);
      for (const auto& e : entries) {
        Json rows = Json::array();
        for (const auto& r : e.rows)
          rows.push_back({{"row", r.family}, {"sub", r.sub}, {"tree", r.tree_id}});
        out.push_back({{"x", {e.x.x11, e.x.x12, e.x.x21, e.x.x22}},
                       {"rows", rows},
                       {"abd", {e.abd.a, e.abd.b, e.abd.d}},
                       {"genuine", e.genuine}});
        table << "x=(" << e.x.x11 << "," << e.x.x12 << "," << e.x.x21 << "," << e.x.x22
              << ") rows=";
        for (const auto& r : e.rows) table << r.family << "." << (r.sub + 1) << "/T" << r.tree_id << " ";
        table << "abd=(" << e.abd.a << "," << e.abd.b << "," << e.abd.d << ")"
              << (e.genuine ? " genuine" : "") << "\n";
      }
    } else if (cl_cyclic > 0) {
      auto entries = enumerate_cyclic(cl_cyclic);
      for (const auto& e : entries) {
        Json rows = Json::array();
        for (const auto& r : e.rows)
          rows.push_back({{"row", r.family}, {"sub", r.sub}, {"tree", r.tree_id}});
        out.push_back({{"s", e.s},
                       {"t", e.t},
                       {"alpha", e.alpha},
                       {"beta", e.beta},
                       {"rows", rows},
                       {"abd", {0, 0, e.d}},
                       {"genuine", e.genuine}});
        table << "(s,t,alpha,beta)=(" << e.s << "," << e.t << "," << e.alpha << "," << e.beta
              << ") rows=";
        for (const auto& r : e.rows) table << r.family << "." << (r.sub + 1) << "/T" << r.tree_id << " ";
        table << "d=" << e.d << (e.genuine ? " genuine" : "") << "\n";
      }
    } else {
      fail("BadParameters", "classify needs --standard with --group, or --cyclic N");
    }
    if (format == "table")
      std::cout << table.str();
    else
      std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (bm->parsed()) {
    AbGroup small = AbGroup::parse(bm_group);
    auto xs = parse_longs(bm_x);
    if (xs.size() != 4) fail("BadParameters", "--x expects x11,x12,x21,x22");
    AbGroup big = small.doubled();
    GroupElement h1 = element(big, 1, 0), h2 = element(big, 0, 1);
    if (!bm_h1.empty()) {
      auto v = parse_longs(bm_h1);
      h1 = element(big, v.at(0), v.at(1));
    }
    if (!bm_h2.empty()) {
      auto v = parse_longs(bm_h2);
      h2 = element(big, v.at(0), v.at(1));
    }
    CongruenceInstance inst =
        make_instance(small, h1, h2, ActionExponents{xs[0], xs[1], xs[2], xs[3]});
    MvgResult res = build_mvg(inst, parse_tree_id(bm_tree), bm_maxdeg);
    Json j;
    j["abd"] = {res.abd.a, res.abd.b, res.abd.d};
    j["genuine"] = res.genuine;
    j["nichols_dims"] = res.nichols_dims;
    j["nichols_dim"] = res.nichols_dim;
    j["dim"] = res.structure.dim();
    j["structure"] = structure_to_json(res.structure);
    if (!bm_out.empty()) {
      std::ofstream out(bm_out);
      out << j.dump(2) << "\n";
      std::cout << "{\"written\": \"" << bm_out << "\", \"dim\": " << res.structure.dim()
                << "}\n";
    } else {
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }
  if (ca->parsed()) {
    std::ifstream in(ca_input);
    if (!in) fail("BadParameters", "cannot open " + ca_input);
    Json j;
    in >> j;
    if (j.contains("structure")) j = j.at("structure");
    MajidStructure m = structure_from_json(j);
    AxiomReport rep = check_axioms(m);
    std::cout << report_to_json(rep).dump(2) << "\n";
    return rep.all_pass() ? 0 : 1;
  }
  if (tb->parsed()) {
    if (tb_which == "7.2" || tb_which == "7.3" || tb_which == "7.4") {
      long p = tb_which == "7.2" ? 2 : tb_which == "7.3" ? 3 : (tb_n > 0 ? tb_n : 5);
      auto fams = standard_table_families(p);
      auto entries = enumerate_standard(p, p);
      std::cout << "admissible families over Z" << p * p << "xZ" << p * p << " (p=" << p << ")\n";
      for (const auto& f : fams) {
        long count = 0;
        for (const auto& e : entries)
          for (const auto& r : e.rows)
            if (r.family == f.family && r.sub == f.sub) ++count;
        std::cout << f.index << ". [T" << f.tree << "] " << f.condition << "  -- " << count
                  << " data\n";
      }
      std::cout << "total admissible data: " << entries.size() << "\n";
      return 0;
    }
    if (tb_which == "8.1") {
      if (tb_n <= 0) fail("BadParameters", "tables --which 8.1 needs --n");
      auto entries = enumerate_cyclic(tb_n);
      std::map<std::pair<int, int>, std::pair<long, long>> counts;  // (family,sub) -> (all, genuine)
      for (const auto& e : entries)
        for (const auto& r : e.rows) {
          auto& slot = counts[{r.family, r.sub}];
          slot.first++;
          if (e.genuine) slot.second++;
        }
      std::cout << "admissible cyclic data over Z" << tb_n * tb_n << " (n=" << tb_n << ")\n";
      for (const auto& [key, cnt] : counts)
        std::cout << "row " << key.first << "." << (key.second + 1) << ": " << cnt.first
                  << " data, " << cnt.second << " genuine\n";
      long genuine = 0;
      for (const auto& e : entries) genuine += e.genuine ? 1 : 0;
      std::cout << "total: " << entries.size() << " data, " << genuine << " genuine\n";
      return 0;
    }
    fail("BadParameters", "unknown table " + tb_which);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qqg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const std::string& c = e.code();
    bool usage = c == "BadParameters" || c == "UnknownTree" || c == "OrderMismatch" ||
                 c == "NotCyclic";
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
