#include "qqg/trees.hpp"

#include <array>

namespace qqg {

namespace {

// Shapes transcribed from the appendix figures; long diagonal strokes pass
// through the intermediate dots they touch. '.' = leaf, '(' opens an internal
// node with exactly two subtrees.
const std::array<const char*, 22> kShapes = {
    ".",                                  // T1
    "(..)",                               // T2
    "(.(..))",                            // T3
    "((..)(..))",                         // T4
    "(.((..).))",                         // T5
    "((..)((..).))",                      // T6
    "(.(.(..)))",                         // T7
    "(.((..)(..)))",                      // T8
    "(.(((..).).))",                      // T9
    "((..)(((..).)(..)))",                // T10
    "(.(((..)(..))(..)))",                // T11
    "((..)((..)((..).)))",                // T12
    "(.((.(..))((..).)))",                // T13
    "(.(.(.(..))))",                      // T14
    "(.(((..).)(.(..))))",                // T15
    "(.((..)((..)(..))))",                // T16
    "(.((((..).)(..)).))",                // T17
    "(.(((..)((..).)).))",                // T18
    "(.((((..)(..))((..)(..)))(..)))",    // T19
    "(.(.((.(..))(..))))",                // T20
    "(.(.((..)(.(..)))))",                // T21
    "(.((..)(((..)(..))((..)(..)))))",    // T22
};

int parse_node(const std::string& s, size_t& pos, FullBinaryTree& t, int parent) {
  int idx = static_cast<int>(t.nodes.size());
  t.nodes.push_back({});
  t.nodes[idx].parent = parent;
  if (pos >= s.size()) fail("BadParameters", "truncated tree shape");
  if (s[pos] == '.') {
    ++pos;
    return idx;
  }
  if (s[pos] != '(') fail("BadParameters", "bad tree shape near position " + std::to_string(pos));
  ++pos;
  int l = parse_node(s, pos, t, idx);
  int r = parse_node(s, pos, t, idx);
  if (pos >= s.size() || s[pos] != ')')
    fail("BadParameters", "unbalanced tree shape near position " + std::to_string(pos));
  ++pos;
  t.nodes[idx].left = l;
  t.nodes[idx].right = r;
  return idx;
}

}  // namespace

FullBinaryTree tree_from_shape(const std::string& shape, int id) {
  FullBinaryTree t;
  t.id = id;
  size_t pos = 0;
  parse_node(shape, pos, t, -1);
  if (pos != shape.size()) fail("BadParameters", "trailing characters in tree shape");
  t.root = 0;
  return t;
}

FullBinaryTree tree(int id) {
  if (id < 1 || id > static_cast<int>(kShapes.size()))
    fail("UnknownTree", "tree id T" + std::to_string(id) + " out of range");
  return tree_from_shape(kShapes[id - 1], id);
}

int tree_count() { return static_cast<int>(kShapes.size()); }

std::vector<int> FullBinaryTree::n0() const {
  std::vector<int> v;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (is_leaf(static_cast<int>(i))) v.push_back(static_cast<int>(i));
  return v;
}

std::vector<int> FullBinaryTree::n2() const {
  std::vector<int> v;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (!is_leaf(static_cast<int>(i))) v.push_back(static_cast<int>(i));
  return v;
}

int left_godfather(const FullBinaryTree& t, int node) {
  if (node == t.root) return kAbstractL;
  int p = t.nodes[node].parent;
  if (t.nodes[p].right == node) return p;
  return left_godfather(t, p);
}

int right_godfather(const FullBinaryTree& t, int node) {
  if (node == t.root) return kAbstractR;
  int p = t.nodes[node].parent;
  if (t.nodes[p].left == node) return p;
  return right_godfather(t, p);
}

std::pair<int, int> godfathers(const FullBinaryTree& t, int node) {
  return {left_godfather(t, node), right_godfather(t, node)};
}

long little_l(const FullBinaryTree& t, int node) {
  int gr = right_godfather(t, node);
  if (is_abstract(gr)) return 1;
  if (t.nodes[gr].left == node) return little_l(t, gr) + 1;
  return 1;
}

}  // namespace qqg
