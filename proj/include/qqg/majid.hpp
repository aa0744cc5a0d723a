#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qqg/classify.hpp"
#include "qqg/cocycle.hpp"
#include "qqg/cyclotomic.hpp"
#include "qqg/freepoly.hpp"
#include "qqg/group.hpp"
#include "qqg/nichols.hpp"
#include "qqg/trees.hpp"

namespace qqg {

using SparseVec = std::map<int, CycScalar>;

void sparse_add(SparseVec& acc, int idx, const CycScalar& c);
void sparse_add(SparseVec& acc, const SparseVec& v, const CycScalar& c);

// A finite-basis Majid-algebra structure: all operations as explicit tables
// over a distinguished basis. The associator and the functionals alpha, beta
// are stored sparsely; entries absent from `assoc` are zero.
struct MajidStructure {
  FieldPtr field;
  std::vector<std::string> names;
  int unit = 0;
  std::vector<char> grouplike;              // flag per basis index
  std::vector<long> degree;                 // coradical degree (0 on grouplikes)
  std::vector<std::vector<SparseVec>> mult;  // [i][j] -> element
  std::vector<std::vector<std::tuple<int, int, CycScalar>>> comult;
  std::vector<CycScalar> counit;
  std::vector<SparseVec> antipode;
  std::vector<CycScalar> alpha, beta;
  std::map<std::array<int, 3>, CycScalar> assoc;

  int dim() const { return static_cast<int>(names.size()); }
  CycScalar phi(int i, int j, int k) const;
  // Reciprocal on the grouplike support; the convolution inverse for graded
  // associators (verified as part of the axiom run).
  CycScalar phi_inv(int i, int j, int k) const;

  SparseVec mul_elem(const SparseVec& a, const SparseVec& b) const;
  SparseVec apply_antipode(const SparseVec& a) const;

  // Iterated comultiplication of a basis element into `legs` tensor legs.
  std::vector<std::pair<std::vector<int>, CycScalar>> sweedler(int idx, int legs) const;
};

struct AxiomCheck {
  bool pass = true;
  std::string witness;  // first counterexample, empty when passing
};

struct AxiomReport {
  // keys: 2.1-quasi-assoc, 2.2-unit, 2.3-pentagon, 2.4-normalization,
  // 2.5-antipode, 2.6-compat, coassoc, counit, mult-coalgebra-morphism,
  // antipode-coalgebra-antimorphism, grouplike-comult
  std::map<std::string, AxiomCheck> checks;
  bool all_pass() const;
  std::string summary() const;
};

AxiomReport check_axioms(const MajidStructure& m);

// Group Majid algebra (kG, Phi).
MajidStructure group_majid(const AbGroup& g, const Cocycle3& phi);

// Twisting data: a bilinear functional given by a table on basis x basis.
// Only grouplike-supported twistings arise here; the convolution inverse is
// solved degree by degree and verified.
struct TwistTable {
  std::vector<std::vector<CycScalar>> j;
  std::vector<std::vector<CycScalar>> jinv;
};

TwistTable make_twist_from_cochain(const MajidStructure& m,
                                   const std::function<RootExp(int, int)>& grouplike_values);

MajidStructure twist(const MajidStructure& m, const TwistTable& t);

// Convolution inverse of a twisting table (unitriangular in the grading).
std::vector<std::vector<CycScalar>> convolution_inverse(const MajidStructure& m,
                                                        const std::vector<std::vector<CycScalar>>& j);

// The rank-1 pointed structure on the cyclic-group path coalgebra.
MajidStructure m_nsq(long n, long s, long q_exp = 1);

// A braided graded Hopf algebra presented on a quotient basis, ready for
// bosonization over `gsmall` with associator `phi`.
struct BraidedHopfData {
  FieldPtr field;
  AbGroup gsmall;
  Cocycle3 phi;  // associator on gsmall, values in the scalar arena
  std::vector<Word> basis;
  std::map<Word, int> index;
  std::vector<GroupElement> gdeg;  // degree in gsmall per basis word
  // diagonal action of gsmall on basis words
  std::function<CycScalar(const GroupElement&, int)> action;
  // product of basis words as elements (already reduced)
  std::function<SparseVec(int, int)> mul;
  std::vector<std::vector<std::tuple<int, int, CycScalar>>> comult;
  std::vector<SparseVec> antipode;
};

MajidStructure bosonize(const BraidedHopfData& h);

// Assembled pipeline: congruence solution, twisted relation set, graded
// quotient, braided structure and bosonization over the small group.
struct MvgResult {
  Abd abd;
  bool genuine = false;
  long nichols_dim = 0;
  std::vector<long> nichols_dims;
  MajidStructure structure;
};

MvgResult build_mvg(const CongruenceInstance& inst, int tree_id, long max_degree = 0,
                    long max_dim = 0);

// Same pipeline with caller-supplied relation sets (the plain set and its
// cochain-corrected counterpart).
MvgResult build_mvg_custom(const CongruenceInstance& inst, const RelationSet& plain_rels,
                           const RelationSet& twisted_rels, long max_degree, long max_dim = 0);

// g1^m and g2^n act trivially in the twisted module structure, the scalar
// form of centrality of the descent kernel.
bool centrality_check(const CongruenceInstance& inst, const Abd& abd);

// Braided data for the twisted Nichols quotient of a congruence instance
// (exposed for tests).
struct TwistedNicholsData {
  FieldPtr field;
  DiagonalYD yd;
  Cochain2 j;
  GradedQuotient plain;    // relations from tau
  GradedQuotient twisted;  // relations from tau*
};

TwistedNicholsData twisted_nichols(const CongruenceInstance& inst, int tree_id, long max_degree);

long max_dim_guard();  // QQG_MAX_DIM override, default 512

}  // namespace qqg
