// Building sets: families of subsets of {1..n} containing every singleton of
// their support and closed under unions of intersecting members.
//
// Members are bitmasks (bit i-1 represents element i), which caps ground sets
// at 63 elements; enumeration is the practical limit long before that.
// The family is kept sorted by (cardinality, smallest differing element), so
// iteration order and serialization are deterministic.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nestoh/errors.hpp"

namespace nestoh {

std::uint64_t mask_of(std::span<const int> elements);
std::vector<int> mask_elements(std::uint64_t mask);

// Canonical member order: by size, then by the smallest element where the
// two sets differ.
bool member_order_less(std::uint64_t a, std::uint64_t b);

class BuildingSet {
 public:
  // Checks every axiom and reports the first witness of a violation.
  static BuildingSet validate(int n, const std::vector<std::vector<int>>& sets);
  static BuildingSet from_masks(int n, std::uint64_t support,
                                std::vector<std::uint64_t> sets);

  static BuildingSet complete(int n);        // all nonempty subsets
  static BuildingSet simplex(int n);         // singletons plus [n]
  static BuildingSet path(int n);            // all intervals [i..j]
  static BuildingSet snk(int n, int k);      // singletons plus all sets of size >= k
  static BuildingSet star(int n);            // ground [n+1], hub n+1
  static BuildingSet stanley_pitman(int n);  // singletons plus suffixes [i..n]

  int ground_size() const { return n_; }
  std::uint64_t support() const { return support_; }
  std::vector<int> support_elements() const { return mask_elements(support_); }
  int support_size() const;

  const std::vector<std::uint64_t>& members() const { return sets_; }
  std::vector<std::vector<int>> member_lists() const;
  bool contains(std::uint64_t mask) const;

  // Connected means the full support is itself a member.
  bool is_connected() const { return contains(support_); }

  // Members contained in `subset`; the result keeps the original labels.
  BuildingSet restricted(std::uint64_t subset) const;

  // Split along the inclusion-maximal members, ordered by smallest element.
  // Each part is connected on its own support.
  std::vector<BuildingSet> components() const;

  // Union of parts with pairwise disjoint supports, plus the combined support.
  static BuildingSet combine(std::span<const BuildingSet> parts);

  // Relabels through i -> n-i+1.
  BuildingSet involution_image() const;

  bool operator==(const BuildingSet&) const = default;

 private:
  struct Trusted {};
  BuildingSet(Trusted, int n, std::uint64_t support,
              std::vector<std::uint64_t> sets);

  int n_ = 0;
  std::uint64_t support_ = 0;
  std::vector<std::uint64_t> sets_;
};

// Named family lookup used by the command line tool:
// complete, simplex, path, snk, star, stanley_pitman.
BuildingSet family(std::string_view name, int n, std::optional<int> k = {});

std::string set_to_string(std::uint64_t mask);  // "{1,2,3}" for diagnostics

}  // namespace nestoh
