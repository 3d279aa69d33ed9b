// B-trees of a connected building set: rooted trees on the support whose
// descendant sets all belong to the family and whose incomparable nodes never
// union to a member. Enumeration is streamed; h-polynomials accumulate
// per-tree statistics without materializing the tree list.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestoh/building_set.hpp"
#include "nestoh/polynomial.hpp"

namespace nestoh {

struct TreeStats {
  int des = 0;
  std::int64_t maj = 0;  // sum of rank(parent) over descent edges
  int depth = 0;
  std::int64_t mu = 0;  // sum of rank(parent) over all edges
};

class BTree {
 public:
  // Edges are (child, parent) pairs; they are stored sorted by child.
  BTree(int root, std::vector<std::pair<int, int>> edges);

  int root() const { return root_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()) + 1; }
  std::uint64_t element_mask() const;
  std::vector<int> elements() const;

  int parent_of(int i) const;  // 0 for the root
  std::vector<int> children_of(int i) const;
  int depth_of(int i) const;  // root has depth 0
  std::uint64_t descendant_mask(int i) const;
  std::vector<int> descendant_set(int i) const;

  TreeStats stats() const;

  std::string debug_json() const;  // {"root":r,"edges":[[child,parent],...]}

  auto operator<=>(const BTree&) const = default;

 private:
  int root_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Checks the tree against the definition directly: descendant sets are
// members, and no member is the union of the descendant sets of two or more
// incomparable nodes. Independent of the constructive enumeration.
bool validate_btree(const BuildingSet& b, const BTree& t);

// Streams the B-trees of a connected building set in a fixed deterministic
// order: roots ascending, component subtrees in lexicographic product order.
// Safe to move to another thread; instances are independent.
class BTreeStream {
 public:
  explicit BTreeStream(const BuildingSet& b);  // throws not_connected
  BTreeStream(BTreeStream&&) noexcept;
  BTreeStream& operator=(BTreeStream&&) noexcept;
  ~BTreeStream();

  std::optional<BTree> next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

void for_each_btree(const BuildingSet& b,
                    const std::function<void(const BTree&)>& fn);
std::vector<BTree> all_btrees(const BuildingSet& b);

enum class HVars { t, tq, tqu };

// Sum over B-trees of t^des, t^des q^maj, or t^des q^maj u^mu.
Polynomial h_polynomial(const BuildingSet& b, HVars vars);

// Face numbers (f_0 .. f_d), d = |support| - 1, via f(t) = h(t+1).
std::vector<Int> f_vector(const BuildingSet& b);

struct InvolutionCheck {
  bool holds = false;
  Polynomial h;            // h(t, q, u)
  Polynomial transformed;  // t^(d) h(1/t, 1/q, qu)
};

// For a building set fixed by i -> n-i+1. Throws not_omega_invariant.
InvolutionCheck check_involution_palindromicity(const BuildingSet& b);

struct PairedPolys {
  Polynomial direct;
  Polynomial formula;
};

// Univariate h of the combination of disjoint connected parts, both by direct
// enumeration and by the product formula (1 + t + ... + t^(r-1)) * prod h_i.
PairedPolys h_combined(std::span<const BuildingSet> parts);

}  // namespace nestoh
