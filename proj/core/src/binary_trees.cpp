#include "nestoh/binary_trees.hpp"

#include <algorithm>

namespace nestoh {

BinaryTree::BinaryTree(std::vector<std::array<int, 2>> nodes, int root)
    : nodes_(std::move(nodes)), root_(root) {
  if (nodes_.empty() != (root_ < 0))
    throw error(errc::bad_params, "root index inconsistent with node count");
}

namespace {

// Shapes are built in a shared arena used strictly stack-wise, so the arena
// holds exactly the current tree when a shape is yielded.
struct Arena {
  std::vector<std::array<int, 2>> nodes;

  int add(int l, int r) {
    nodes.push_back({l, r});
    return static_cast<int>(nodes.size()) - 1;
  }
  void pop() { nodes.pop_back(); }
};

void enum_shapes(int m, Arena& a, const std::function<void(int)>& fn) {
  if (m == 0) {
    fn(-1);
    return;
  }
  for (int left_size = 0; left_size < m; ++left_size) {
    enum_shapes(left_size, a, [&](int lroot) {
      enum_shapes(m - 1 - left_size, a, [&](int rroot) {
        int root = a.add(lroot, rroot);
        fn(root);
        a.pop();
      });
    });
  }
}

}  // namespace

void for_each_binary_tree(int n,
                          const std::function<void(const BinaryTree&)>& fn) {
  if (n < 0) throw error(errc::bad_params, "negative node count");
  Arena arena;
  enum_shapes(n, arena, [&](int root) {
    fn(BinaryTree(arena.nodes, root));
  });
}

RightStats right_stats(const BinaryTree& t) {
  RightStats s;
  if (t.empty()) return s;
  // Depth-first walk carrying vertex depth.
  std::vector<std::pair<int, int>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto [v, d] = stack.back();
    stack.pop_back();
    s.depth = std::max(s.depth, d);
    if (t.left(v) >= 0) stack.push_back({t.left(v), d + 1});
    if (t.right(v) >= 0) {
      s.right_edge_depths.push_back(d);
      stack.push_back({t.right(v), d + 1});
    }
  }
  std::sort(s.right_edge_depths.begin(), s.right_edge_depths.end());
  s.r = static_cast<int>(s.right_edge_depths.size());
  std::int64_t sum = 0;
  for (int d : s.right_edge_depths) sum += d;
  s.rindex = static_cast<std::int64_t>(s.depth) * s.r - sum;
  return s;
}

Polynomial h_associahedron_via_binary(int n) {
  if (n < 0) throw error(errc::bad_params, "negative node count");
  Polynomial out;
  for_each_binary_tree(n, [&](const BinaryTree& t) {
    RightStats s = right_stats(t);
    out.add_term({s.r, s.rindex, 0}, 1);
  });
  return out;
}

Polynomial q_narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw error(errc::bad_params, "q_narayana requires 1 <= k <= n");
  Polynomial out;
  for_each_binary_tree(n, [&](const BinaryTree& t) {
    RightStats s = right_stats(t);
    if (s.r == k - 1) out.add_term({0, s.rindex, 0}, 1);
  });
  return out;
}

}  // namespace nestoh
