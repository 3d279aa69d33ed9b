// Permutation statistics, tree-shaped fan posets and their q-h-polynomials.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nestoh/polynomial.hpp"

namespace nestoh {

struct PermStats {
  std::vector<int> descents;  // 1-indexed positions i with w[i] > w[i+1]
  int des = 0;
  std::int64_t maj = 0;
};

PermStats perm_stats(std::span<const int> word);

// Sum of t^des(w) q^maj(w) over all of S_n.
Polynomial euler_mahonian(int n);

struct PosetStats {
  int des = 0;
  std::int64_t maj = 0;
};

// Finite poset on {1..n} given by its cover relations (lower, upper).
// Only tree-shaped Hasse diagrams support rank and descent statistics.
class Poset {
 public:
  Poset(int n, std::vector<std::pair<int, int>> covers);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // True iff the Hasse diagram is a tree: n-1 covers, connected.
  bool is_tree() const;

  // Minimal non-negative rank function: ranks differ by 1 across covers and
  // the smallest rank is 0. Indexed rank()[e-1]. Throws not_tree_poset.
  std::vector<int> minimal_rank() const;

  // des = #{covers (i,j) with i > j}, maj = sum of rank(j) over those covers.
  PosetStats stats() const;

  bool operator==(const Poset&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
};

// Disjoint union with everything in `low` below everything in `high`.
// Elements of `high` are shifted up by low.size().
Poset ordinal_sum(const Poset& low, const Poset& high);

Poset antichain(int n);
Poset chain(int n);                            // 1 < 2 < ... < n
Poset chain_poset(std::span<const int> word);  // word[0] < word[1] < ...

// Sum of t^des(P) q^maj(P) over a list of tree posets.
Polynomial qh_from_posets(std::span<const Poset> posets);

// The n! maximal cones of the braid arrangement as chain posets,
// in lexicographic order of the defining permutations.
std::vector<Poset> braid_fan_posets(int n);

}  // namespace nestoh
