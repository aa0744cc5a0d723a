#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qqg/cocycle.hpp"
#include "qqg/freepoly.hpp"
#include "qqg/trees.hpp"
#include "qqg/yd.hpp"

namespace qqg {

// The bicharacter and degree bookkeeping shared by the relation generators:
// chi(e_i, e_j) = q_ij extended to Z^2, and the group degree of a word.
class Braiding {
 public:
  Braiding(const DiagonalYD& yd, FieldPtr f);

  const FieldPtr& field() const { return field_; }
  const DiagonalYD& yd() const { return yd_; }

  CycScalar chi(std::pair<long, long> u, std::pair<long, long> v) const;
  CycScalar chi_inv(std::pair<long, long> u, std::pair<long, long> v) const;

  GroupElement gdeg(std::pair<long, long> d) const;  // h1^{d1} h2^{d2}
  GroupElement gdeg(const Word& w) const { return gdeg(w.z2deg()); }

 private:
  DiagonalYD yd_;
  FieldPtr field_;
  CycScalar q_[2][2];
};

// tau on the augmented node set; keys are node refs (abstract sentinels
// included).
std::map<int, FreeWordPoly> tau(const FullBinaryTree& t, const Braiding& b);

struct LambdaMu {
  std::map<int, CycScalar> lambda;  // on N(T)
  std::map<int, CycScalar> mu;      // on nodes with internal left godfather
};

LambdaMu lambda_mu(const FullBinaryTree& t, const Braiding& b);

// P_a = chi^{-1}(|tau(a)|, |tau(a)|).
CycScalar p_value(const Braiding& b, const FreeWordPoly& tau_a);

enum class RelTag { LeafTau, PowerTau, Mixed };

struct Relation {
  FreeWordPoly poly;
  RelTag tag = RelTag::LeafTau;
  int node = 0;  // originating node ref
};

struct RelationSet {
  std::vector<Relation> relations;
};

// Defining relation families of the catalogued quotient: vanishing leaf
// brackets, root-vector powers for nodes with 2 <= ord P_a < infinity, and
// the mixed commutator relations.
RelationSet relations(const FullBinaryTree& t, const Braiding& b);

// Diagonal change of basis between left-normed twisted words and plain words:
// a word picks up one cochain factor per prefix split.
CycScalar psi_factor(const Braiding& b, const Cochain2& j, const Word& w);

// Apply psi to a polynomial expressed in the twisted word basis.
FreeWordPoly psi(const Braiding& b, const Cochain2& j, const FreeWordPoly& p);

// Concatenation scale of the twisted tensor algebra in the left-normed word
// basis.
ScaleFn twisted_scale(const Braiding& b, const Cochain2& j);

// tau^* (the cochain-corrected bracket map) and the twisted relation families.
std::map<int, FreeWordPoly> tau_star(const FullBinaryTree& t, const Braiding& b, const Cochain2& j);
RelationSet relations_twisted(const FullBinaryTree& t, const Braiding& b, const Cochain2& j);

// Graded quotient of the free algebra on X1, X2 by a homogeneous relation
// set, computed degree by degree with exact linear algebra.
class GradedQuotient {
 public:
  GradedQuotient(FieldPtr f, const RelationSet& rels, ScaleFn scale, long max_degree,
                 long work_limit = 1L << 17);

  const std::vector<long>& dims() const { return dims_; }
  long total_dim() const { return total_; }
  bool truncated() const { return truncated_; }
  long top_degree() const { return static_cast<long>(dims_.size()) - 1; }

  const std::vector<Word>& basis() const { return basis_; }
  long basis_index(const Word& w) const;

  // Normal form with respect to the computed echelon.
  FreeWordPoly reduce(FreeWordPoly p) const;

  // Product of two basis words, reduced; empty map keys beyond the truncation
  // degree are exact zeros only when the quotient is not truncated.
  FreeWordPoly mul_basis(const Word& u, const Word& v) const;

  const ScaleFn& scale() const { return scale_; }
  const FieldPtr& field() const { return field_; }

 private:
  FieldPtr field_;
  ScaleFn scale_;
  std::vector<long> dims_;
  long total_ = 0;
  bool truncated_ = false;
  std::vector<Word> basis_;
  std::map<Word, long> index_;
  std::map<Word, FreeWordPoly> echelon_;  // pivot word -> monic row

  bool insert_row(FreeWordPoly row);
};

// Catalogue default: 4 * (ord q11 + ord q22 + 12).
long default_max_degree(const Braiding& b);

}  // namespace qqg
