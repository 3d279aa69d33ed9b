// Unlabeled binary trees, right-edge statistics, and the resulting
// q-analogue of the associahedron h-polynomial and the Narayana numbers.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "nestoh/polynomial.hpp"

namespace nestoh {

// Shape-only binary tree. Node 0 is the root of a nonempty tree; children
// are indices or -1.
class BinaryTree {
 public:
  BinaryTree() = default;
  explicit BinaryTree(std::vector<std::array<int, 2>> nodes, int root);

  bool empty() const { return nodes_.empty(); }
  int size() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  int left(int v) const { return nodes_[v][0]; }
  int right(int v) const { return nodes_[v][1]; }

 private:
  std::vector<std::array<int, 2>> nodes_;
  int root_ = -1;
};

// Streams all shapes with n nodes: outer loop over left-subtree size
// ascending, left shapes outer, right shapes inner.
void for_each_binary_tree(int n,
                          const std::function<void(const BinaryTree&)>& fn);

struct RightStats {
  std::vector<int> right_edge_depths;  // depth of the parent endpoint
  int r = 0;                           // number of right edges
  std::int64_t rindex = 0;             // depth * r - sum of right edge depths
  int depth = 0;                       // maximal vertex depth
};

RightStats right_stats(const BinaryTree& t);

// Sum of t^r q^rindex over binary trees with n nodes.
Polynomial h_associahedron_via_binary(int n);

// Sum of q^rindex over trees with exactly k-1 right edges; 1 <= k <= n.
Polynomial q_narayana(int n, int k);

}  // namespace nestoh
