// Graph associahedra: tubes, maximal tubings and their nesting statistics,
// derived from the B-trees of the graphical building set.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nestoh/btrees.hpp"
#include "nestoh/building_set.hpp"
#include "nestoh/polynomial.hpp"

namespace nestoh {

class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);  // simple, 1-indexed

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const;
  std::uint64_t neighbors(int i) const { return adj_[i]; }

  bool induced_connected(std::uint64_t subset) const;
  std::vector<std::uint64_t> component_masks() const;  // by smallest vertex
  bool is_connected() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // (i, j) with i < j, sorted
  std::vector<std::uint64_t> adj_;
};

// Vertex sets of connected induced subgraphs, plus the full vertex set.
BuildingSet graphical_building_set(const Graph& g);

struct Tubing {
  std::vector<std::uint64_t> tubes;  // canonical member order
  std::string json() const;          // {"tubes":[[...],...]}
  bool operator==(const Tubing&) const = default;
};

// The proper descendant sets of the tree, as tubes.
Tubing tubing_from_btree(const BTree& t);

// Pairwise tubing axioms: nested or disjoint-and-nonadjacent.
bool validate_tubing(const Graph& g, const Tubing& chi);

// Streams every maximal tubing together with the B-tree it comes from.
void for_each_maximal_tubing(
    const Graph& g, const std::function<void(const Tubing&, const BTree&)>& fn);

struct TubingStats {
  int nest_des = 0;
  std::int64_t nest_maj = 0;
  int nest = 0;              // maximal nu value
  std::int64_t mu = 0;       // includes outermost tubes, matches the tree
  std::int64_t printed_mu = 0;  // cover pairs only, for the recorded delta
  int outermost = 0;
};

// Statistics computed from the tubes alone. Throws not_maximal unless
// the tubing has exactly n-1 tubes.
TubingStats tubing_stats(const Graph& g, const Tubing& chi);

// Sum of t^nestDes q^nestMaj over maximal tubings.
Polynomial h_graph(const Graph& g);

// For any graph: direct enumeration vs (1 + ... + t^(k-1)) * prod over the
// k connected components.
PairedPolys h_disconnected_check(const Graph& g);

}  // namespace nestoh
