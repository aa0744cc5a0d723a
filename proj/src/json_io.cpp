#include "qqg/json_io.hpp"

#include <sstream>

namespace qqg {

Json scalar_to_json(const CycScalar& s) {
  Json j;
  j["N"] = s.order();
  if (auto r = s.to_root()) {
    j["exp"] = r->exp;
    return j;
  }
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  return j;
}

CycScalar scalar_from_json(const Json& j, FieldPtr f) {
  long n = j.at("N").get<long>();
  if (f->order() != n) fail("OrderMismatch", "scalar arena differs from structure arena");
  if (j.contains("exp")) return CycScalar::from_root(f, RootExp(n, j.at("exp").get<long>()));
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return CycScalar::from_coeffs(f, std::move(coeffs));
}

Json structure_to_json(const MajidStructure& m) {
  Json j;
  j["schema"] = "qqg-structure/1";
  j["N"] = m.field->order();
  j["basis"] = m.names;
  j["unit"] = m.unit;
  Json gl = Json::array();
  for (int i = 0; i < m.dim(); ++i)
    if (m.grouplike[i]) gl.push_back(i);
  j["grouplikes"] = gl;
  j["degree"] = m.degree;
  Json mult = Json::array();
  for (int a = 0; a < m.dim(); ++a)
    for (int b = 0; b < m.dim(); ++b) {
      if (m.mult[a][b].empty()) continue;
      Json entry;
      entry["i"] = a;
      entry["j"] = b;
      Json terms = Json::array();
      for (const auto& [k, c] : m.mult[a][b])
        terms.push_back({{"k", k}, {"c", scalar_to_json(c)}});
      entry["terms"] = terms;
      mult.push_back(entry);
    }
  j["mult"] = mult;
  Json comult = Json::array();
  for (int a = 0; a < m.dim(); ++a) {
    Json terms = Json::array();
    for (const auto& [x, y, c] : m.comult[a])
      terms.push_back({{"l", x}, {"r", y}, {"c", scalar_to_json(c)}});
    comult.push_back(terms);
  }
  j["comult"] = comult;
  Json counit = Json::array(), alpha = Json::array(), beta = Json::array();
  for (int a = 0; a < m.dim(); ++a) {
    counit.push_back(scalar_to_json(m.counit[a]));
    alpha.push_back(scalar_to_json(m.alpha[a]));
    beta.push_back(scalar_to_json(m.beta[a]));
  }
  j["counit"] = counit;
  j["alpha"] = alpha;
  j["beta"] = beta;
  Json anti = Json::array();
  for (int a = 0; a < m.dim(); ++a) {
    Json terms = Json::array();
    for (const auto& [k, c] : m.antipode[a]) terms.push_back({{"k", k}, {"c", scalar_to_json(c)}});
    anti.push_back(terms);
  }
  j["antipode"] = anti;
  Json assoc = Json::array();
  for (const auto& [key, c] : m.assoc) {
    assoc.push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"c", scalar_to_json(c)}});
  }
  j["assoc"] = assoc;
  return j;
}

MajidStructure structure_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != "qqg-structure/1")
    fail("BadParameters", "unknown structure schema");
  MajidStructure m;
  long n = j.at("N").get<long>();
  m.field = CycField::get(n);
  m.names = j.at("basis").get<std::vector<std::string>>();
  const int dim = static_cast<int>(m.names.size());
  m.unit = j.at("unit").get<int>();
  m.grouplike.assign(dim, 0);
  for (const auto& g : j.at("grouplikes")) m.grouplike[g.get<int>()] = 1;
  m.degree = j.at("degree").get<std::vector<long>>();
  m.mult.assign(dim, std::vector<SparseVec>(dim));
  for (const auto& entry : j.at("mult")) {
    int a = entry.at("i").get<int>(), b = entry.at("j").get<int>();
    for (const auto& t : entry.at("terms"))
      sparse_add(m.mult[a][b], t.at("k").get<int>(), scalar_from_json(t.at("c"), m.field));
  }
  m.comult.resize(dim);
  const auto& cm = j.at("comult");
  for (int a = 0; a < dim; ++a)
    for (const auto& t : cm.at(a))
      m.comult[a].emplace_back(t.at("l").get<int>(), t.at("r").get<int>(),
                               scalar_from_json(t.at("c"), m.field));
  for (const auto& c : j.at("counit")) m.counit.push_back(scalar_from_json(c, m.field));
  for (const auto& c : j.at("alpha")) m.alpha.push_back(scalar_from_json(c, m.field));
  for (const auto& c : j.at("beta")) m.beta.push_back(scalar_from_json(c, m.field));
  m.antipode.resize(dim);
  const auto& an = j.at("antipode");
  for (int a = 0; a < dim; ++a)
    for (const auto& t : an.at(a))
      sparse_add(m.antipode[a], t.at("k").get<int>(), scalar_from_json(t.at("c"), m.field));
  for (const auto& e : j.at("assoc")) {
    m.assoc[{e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>()}] =
        scalar_from_json(e.at("c"), m.field);
  }
  return m;
}

Json report_to_json(const AxiomReport& r) {
  Json j;
  Json checks;
  for (const auto& [k, v] : r.checks) {
    checks[k] = {{"pass", v.pass}, {"witness", v.witness}};
  }
  j["checks"] = checks;
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace qqg
