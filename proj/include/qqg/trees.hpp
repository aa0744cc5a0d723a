#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qqg/errors.hpp"

namespace qqg {

// Node references: nonnegative = arena index; the two abstract endpoints are
// negative sentinels.
constexpr int kAbstractL = -1;
constexpr int kAbstractR = -2;

inline bool is_abstract(int ref) { return ref < 0; }

// A full binary tree (every node has zero or two children), arena indexed in
// preorder with the root at 0.
struct FullBinaryTree {
  struct Node {
    int left = -1;    // -1 = no child
    int right = -1;
    int parent = -1;  // -1 = root
  };

  int id = 0;  // 1..22
  std::vector<Node> nodes;
  int root = 0;

  bool is_leaf(int i) const { return nodes[i].left < 0; }
  std::vector<int> n0() const;  // leaves
  std::vector<int> n2() const;  // internal nodes
  int node_count() const { return static_cast<int>(nodes.size()); }
};

// The 22 catalogued trees. Shapes are stored as nested-parenthesis strings
// ('.' = leaf) transcribed from the reference figures.
FullBinaryTree tree(int id);
FullBinaryTree tree_from_shape(const std::string& shape, int id = 0);
int tree_count();

// Left and right godfathers of a node (abstract sentinels allowed in the
// result).
std::pair<int, int> godfathers(const FullBinaryTree& t, int node);
int left_godfather(const FullBinaryTree& t, int node);
int right_godfather(const FullBinaryTree& t, int node);

// The chain-length function l(a): l(a^R) + 1 when a is the left child of its
// right godfather, else 1.
long little_l(const FullBinaryTree& t, int node);

}  // namespace qqg
