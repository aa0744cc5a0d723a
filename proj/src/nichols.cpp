#include "qqg/nichols.hpp"

#include <algorithm>

namespace qqg {

Braiding::Braiding(const DiagonalYD& yd, FieldPtr f) : yd_(yd), field_(std::move(f)) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q_[i][j] = CycScalar::from_root(field_, yd.q[i][j]);
}

CycScalar Braiding::chi(std::pair<long, long> u, std::pair<long, long> v) const {
  // chi(u1 e1 + u2 e2, v1 e1 + v2 e2)
  return q_[0][0].pow(u.first * v.first) * q_[0][1].pow(u.first * v.second) *
         q_[1][0].pow(u.second * v.first) * q_[1][1].pow(u.second * v.second);
}

CycScalar Braiding::chi_inv(std::pair<long, long> u, std::pair<long, long> v) const {
  return chi(u, v).inverse();
}

GroupElement Braiding::gdeg(std::pair<long, long> d) const {
  return mul(yd_.group, pow(yd_.group, yd_.h1, d.first), pow(yd_.group, yd_.h2, d.second));
}

namespace {

// Word-basis polynomial for an abstract endpoint: R -> X1, L -> X2.
FreeWordPoly abstract_tau(FieldPtr f, int ref) {
  return FreeWordPoly::generator(std::move(f), ref == kAbstractR ? 1 : 2);
}

FreeWordPoly tau_of(const FullBinaryTree& t, const Braiding& b, int ref,
                    std::map<int, FreeWordPoly>& memo, const ScaleFn& scale) {
  auto it = memo.find(ref);
  if (it != memo.end()) return it->second;
  FreeWordPoly result;
  if (is_abstract(ref)) {
    result = abstract_tau(b.field(), ref);
  } else {
    auto [gl, gr] = godfathers(t, ref);
    FreeWordPoly tl = tau_of(t, b, gl, memo, scale);
    FreeWordPoly tr = tau_of(t, b, gr, memo, scale);
    CycScalar braid = b.chi(tr.z2deg(), tl.z2deg());
    result = tr.mul(tl, scale) - tl.mul(tr, scale).scaled(braid);
  }
  memo.emplace(ref, result);
  return result;
}

}  // namespace

std::map<int, FreeWordPoly> tau(const FullBinaryTree& t, const Braiding& b) {
  std::map<int, FreeWordPoly> memo;
  ScaleFn scale = plain_scale(b.field());
  tau_of(t, b, kAbstractL, memo, scale);
  tau_of(t, b, kAbstractR, memo, scale);
  for (int i = 0; i < t.node_count(); ++i) tau_of(t, b, i, memo, scale);
  return memo;
}

LambdaMu lambda_mu(const FullBinaryTree& t, const Braiding& b) {
  auto taus = tau(t, b);
  LambdaMu out;
  auto deg = [&](int ref) { return taus.at(ref).z2deg(); };

  // lambda, top-down (parents before children)
  std::vector<int> order;
  order.push_back(t.root);
  for (size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    if (!t.is_leaf(v)) {
      order.push_back(t.nodes[v].left);
      order.push_back(t.nodes[v].right);
    }
  }
  for (int v : order) {
    if (v == t.root) {
      out.lambda[v] =
          b.chi_inv(deg(kAbstractL), deg(kAbstractR)) - b.chi(deg(kAbstractR), deg(kAbstractL));
    } else {
      auto [gl, gr] = godfathers(t, v);
      out.lambda[v] = b.chi_inv(deg(gl), deg(gr)) - b.chi(deg(gr), deg(gl)) +
                      out.lambda.at(t.nodes[v].parent);
    }
  }

  // mu, on nodes whose left godfather is a concrete node
  std::function<CycScalar(int)> mu_of = [&](int v) -> CycScalar {
    auto it = out.mu.find(v);
    if (it != out.mu.end()) return it->second;
    int gl = left_godfather(t, v);
    if (is_abstract(gl)) fail("IllPosed", "mu requested on a node without internal left godfather");
    CycScalar val = out.lambda.at(v);
    if (t.nodes[gl].right != v) {
      int gr = right_godfather(t, v);
      if (is_abstract(gr)) fail("IllPosed", "mu recursion left the node set");
      val = val * mu_of(gr);
    }
    out.mu.emplace(v, val);
    return val;
  };
  for (int v = 0; v < t.node_count(); ++v) {
    int gl = left_godfather(t, v);
    if (!is_abstract(gl)) mu_of(v);
  }
  return out;
}

CycScalar p_value(const Braiding& b, const FreeWordPoly& tau_a) {
  auto d = tau_a.z2deg();
  return b.chi_inv(d, d);
}

namespace {

RelationSet relations_impl(const FullBinaryTree& t, const Braiding& b, const ScaleFn& scale,
                           const std::map<int, FreeWordPoly>& taus, const Cochain2* j) {
  RelationSet out;
  // vanishing brackets at the leaves
  for (int a : t.n0()) {
    out.relations.push_back({taus.at(a), RelTag::LeafTau, a});
  }
  // root-vector power relations over N_2 and the two endpoints
  std::vector<int> nbar2 = {kAbstractL, kAbstractR};
  for (int a : t.n2()) nbar2.push_back(a);
  for (int a : nbar2) {
    CycScalar p = p_value(b, taus.at(a));
    auto o = p.ord();
    if (o && *o >= 2) {
      out.relations.push_back({taus.at(a).pow(*o, scale), RelTag::PowerTau, a});
    }
  }
  // mixed relations: internal b with internal left godfather c
  auto lm = lambda_mu(t, b);
  for (int v : t.n2()) {
    int c = left_godfather(t, v);
    if (is_abstract(c) || t.is_leaf(c)) continue;
    int cl = left_godfather(t, c);
    const FreeWordPoly& tb = taus.at(v);
    const FreeWordPoly& tcl = taus.at(cl);
    const FreeWordPoly& tc = taus.at(c);
    long l = little_l(t, v);
    CycScalar pc = p_value(b, tc);
    CycScalar fact = gauss_factorial(l + 1, pc);
    if (fact.is_zero())
      fail("IllPosed", "vanishing gaussian factorial in mixed relation of T" +
                           std::to_string(t.id));
    CycScalar braid = b.chi(tb.z2deg(), tcl.z2deg());
    FreeWordPoly rel;
    if (!j) {
      rel = tb.mul(tcl, scale) - tcl.mul(tb, scale).scaled(braid) -
            tc.pow(l + 1, scale).scaled(lm.mu.at(v) / fact);
    } else {
      auto jfac = [&](const FreeWordPoly& x, const FreeWordPoly& y) {
        GroupElement dx = b.gdeg(x.z2deg());
        GroupElement dy = b.gdeg(y.z2deg());
        return CycScalar::from_root(b.field(), eval_J(*j, dx, dy));
      };
      CycScalar denom = fact;
      GroupElement dc = b.gdeg(tc.z2deg());
      for (long i = 1; i <= l; ++i) {
        GroupElement dci = pow(j->big, dc, i);
        denom = denom * CycScalar::from_root(b.field(), eval_J(*j, dci, dc));
      }
      rel = tb.mul(tcl, scale).scaled(jfac(tb, tcl).inverse()) -
            tcl.mul(tb, scale).scaled(braid * jfac(tcl, tb).inverse()) -
            tc.pow(l + 1, scale).scaled(lm.mu.at(v) / denom);
    }
    out.relations.push_back({rel, RelTag::Mixed, v});
  }
  return out;
}

}  // namespace

RelationSet relations(const FullBinaryTree& t, const Braiding& b) {
  auto taus = tau(t, b);
  return relations_impl(t, b, plain_scale(b.field()), taus, nullptr);
}

CycScalar psi_factor(const Braiding& b, const Cochain2& j, const Word& w) {
  CycScalar acc = CycScalar::one(b.field());
  for (uint32_t i = 1; i < w.len; ++i) {
    GroupElement pre = b.gdeg(w.prefix(i));
    GroupElement next = b.gdeg(w.suffix_from(i).prefix(1));
    acc = acc * CycScalar::from_root(b.field(), eval_J(j, pre, next));
  }
  return acc;
}

FreeWordPoly psi(const Braiding& b, const Cochain2& j, const FreeWordPoly& p) {
  FreeWordPoly out(b.field());
  for (const auto& [w, c] : p.terms()) out.add_term(w, c * psi_factor(b, j, w));
  return out;
}

ScaleFn twisted_scale(const Braiding& b, const Cochain2& j) {
  if (!(b.yd().group == j.big))
    fail("OrderMismatch", "twisting cochain group differs from the datum group");
  return [b, j](const Word& u, const Word& v) {
    // Psi(u o v) = J(du, dv) Psi(u) Psi(v): the left-normed representative of
    // the concatenation differs from u o v by this factor.
    CycScalar cu = psi_factor(b, j, u);
    CycScalar cv = psi_factor(b, j, v);
    CycScalar cuv = psi_factor(b, j, u.concat(v));
    GroupElement du = b.gdeg(u);
    GroupElement dv = b.gdeg(v);
    return CycScalar::from_root(b.field(), eval_J(j, du, dv)) * cu * cv / cuv;
  };
}

namespace {

FreeWordPoly tau_star_of(const FullBinaryTree& t, const Braiding& b, const Cochain2& j, int ref,
                         std::map<int, FreeWordPoly>& memo, const ScaleFn& scale) {
  auto it = memo.find(ref);
  if (it != memo.end()) return it->second;
  FreeWordPoly result;
  if (is_abstract(ref)) {
    result = abstract_tau(b.field(), ref);
  } else {
    auto [gl, gr] = godfathers(t, ref);
    FreeWordPoly tl = tau_star_of(t, b, j, gl, memo, scale);
    FreeWordPoly tr = tau_star_of(t, b, j, gr, memo, scale);
    GroupElement dl = b.gdeg(tl.z2deg());
    GroupElement dr = b.gdeg(tr.z2deg());
    CycScalar jrl = CycScalar::from_root(b.field(), eval_J(j, dr, dl));
    CycScalar jlr = CycScalar::from_root(b.field(), eval_J(j, dl, dr));
    CycScalar braid = b.chi(tr.z2deg(), tl.z2deg());
    result = tr.mul(tl, scale).scaled(jrl.inverse()) -
             tl.mul(tr, scale).scaled(braid * jlr.inverse());
  }
  memo.emplace(ref, result);
  return result;
}

}  // namespace

std::map<int, FreeWordPoly> tau_star(const FullBinaryTree& t, const Braiding& b,
                                     const Cochain2& j) {
  std::map<int, FreeWordPoly> memo;
  ScaleFn scale = twisted_scale(b, j);
  tau_star_of(t, b, j, kAbstractL, memo, scale);
  tau_star_of(t, b, j, kAbstractR, memo, scale);
  for (int i = 0; i < t.node_count(); ++i) tau_star_of(t, b, j, i, memo, scale);
  return memo;
}

RelationSet relations_twisted(const FullBinaryTree& t, const Braiding& b, const Cochain2& j) {
  auto taus = tau_star(t, b, j);
  return relations_impl(t, b, twisted_scale(b, j), taus, &j);
}

long default_max_degree(const Braiding& b) {
  auto o1 = CycScalar::from_root(b.field(), b.yd().q11()).ord();
  auto o2 = CycScalar::from_root(b.field(), b.yd().q22()).ord();
  return 4 * ((o1 ? *o1 : 1) + (o2 ? *o2 : 1) + 12);
}

GradedQuotient::GradedQuotient(FieldPtr f, const RelationSet& rels, ScaleFn scale, long max_degree,
                               long work_limit)
    : field_(std::move(f)), scale_(std::move(scale)) {
  if (max_degree < 1) fail("BadParameters", "max_degree must be at least 1");
  for (const auto& r : rels.relations) {
    if (!r.poly.homogeneous())
      fail("InternalInconsistency", "relation polynomial is not homogeneous");
  }

  dims_.push_back(1);  // degree 0: the empty word
  basis_.push_back(Word::empty());
  index_[Word::empty()] = 0;
  total_ = 1;

  // per-degree echelon rows, used to span the next ideal slice
  std::vector<std::vector<const FreeWordPoly*>> rows_by_degree(1);

  FreeWordPoly x1 = FreeWordPoly::generator(field_, 1);
  FreeWordPoly x2 = FreeWordPoly::generator(field_, 2);

  truncated_ = true;
  for (long d = 1; d <= max_degree; ++d) {
    if ((1L << d) > work_limit) {
      // slice too large to enumerate; report what we have as a lower bound
      break;
    }
    rows_by_degree.push_back({});
    std::vector<Word> pivots_added;
    // slice spanned by V * I_{d-1} + I_{d-1} * V + new relations of degree d
    std::vector<FreeWordPoly> candidates;
    for (const FreeWordPoly* row : rows_by_degree[d - 1]) {
      candidates.push_back(x1.mul(*row, scale_));
      candidates.push_back(x2.mul(*row, scale_));
      candidates.push_back(row->mul(x1, scale_));
      candidates.push_back(row->mul(x2, scale_));
    }
    for (const auto& r : rels.relations)
      if (!r.poly.is_zero() && r.poly.degree() == d) candidates.push_back(r.poly);

    for (auto& cand : candidates) insert_row(std::move(cand));

    // collect this degree's echelon rows and basis words
    long rank = 0;
    for (auto& [w, row] : echelon_) {
      if (static_cast<long>(w.len) == d) {
        rows_by_degree[d].push_back(&row);
        ++rank;
      }
    }
    long full = 1L << d;
    long dim = full - rank;
    dims_.push_back(dim);
    if (dim > 0) {
      std::vector<Word> words;
      words.reserve(full);
      for (long bits = 0; bits < full; ++bits) {
        Word w;
        w.len = static_cast<uint32_t>(d);
        w.bits = static_cast<uint64_t>(bits);
        if (!echelon_.count(w)) words.push_back(w);
      }
      std::sort(words.begin(), words.end());
      for (const Word& w : words) {
        index_[w] = static_cast<long>(basis_.size());
        basis_.push_back(w);
      }
      total_ += dim;
    } else {
      // generated in degree one: all higher degrees vanish too
      truncated_ = false;
      break;
    }
  }
}

bool GradedQuotient::insert_row(FreeWordPoly row) {
  row = reduce(std::move(row));
  if (row.is_zero()) return false;
  // pivot = largest word
  Word pivot = row.terms().rbegin()->first;
  CycScalar lead = row.terms().rbegin()->second;
  row = row.scaled(lead.inverse());
  echelon_.emplace(pivot, std::move(row));
  return true;
}

FreeWordPoly GradedQuotient::reduce(FreeWordPoly p) const {
  while (true) {
    // find the largest term sitting on a pivot
    const FreeWordPoly* hit = nullptr;
    Word hw;
    CycScalar hc;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      auto jt = echelon_.find(it->first);
      if (jt != echelon_.end()) {
        hit = &jt->second;
        hw = it->first;
        hc = it->second;
        break;
      }
    }
    if (!hit) return p;
    p = p - hit->scaled(hc);
  }
}

long GradedQuotient::basis_index(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return -1;
  return it->second;
}

FreeWordPoly GradedQuotient::mul_basis(const Word& u, const Word& v) const {
  long d = static_cast<long>(u.len) + static_cast<long>(v.len);
  if (d > top_degree()) {
    if (truncated_)
      fail("DegreeBoundExceeded", "product degree beyond the truncated computation");
    return FreeWordPoly(field_);
  }
  FreeWordPoly prod(field_);
  prod.add_term(u.concat(v), scale_(u, v));
  return reduce(std::move(prod));
}

}  // namespace qqg
