#include "nestoh/building_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace nestoh {

std::uint64_t mask_of(std::span<const int> elements) {
  std::uint64_t m = 0;
  for (int e : elements) {
    if (e < 1 || e > 63)
      throw error(errc::bad_params, "elements must lie in 1..63");
    m |= std::uint64_t(1) << (e - 1);
  }
  return m;
}

std::vector<int> mask_elements(std::uint64_t mask) {
  std::vector<int> out;
  for (std::uint64_t m = mask; m; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

bool member_order_less(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  std::uint64_t diff = a ^ b;
  return a & (diff & ~(diff - 1));  // holds the smallest differing element
}

std::string set_to_string(std::uint64_t mask) {
  std::ostringstream os;
  os << "{";
  const char* sep = "";
  for (int e : mask_elements(mask)) {
    os << sep << e;
    sep = ",";
  }
  os << "}";
  return os.str();
}

BuildingSet::BuildingSet(Trusted, int n, std::uint64_t support,
                         std::vector<std::uint64_t> sets)
    : n_(n), support_(support), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), member_order_less);
}

int BuildingSet::support_size() const { return std::popcount(support_); }

std::vector<std::vector<int>> BuildingSet::member_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(sets_.size());
  for (std::uint64_t m : sets_) out.push_back(mask_elements(m));
  return out;
}

bool BuildingSet::contains(std::uint64_t mask) const {
  return std::binary_search(sets_.begin(), sets_.end(), mask, member_order_less);
}

BuildingSet BuildingSet::from_masks(int n, std::uint64_t support,
                                    std::vector<std::uint64_t> sets) {
  if (n < 1 || n > 63)
    throw error(errc::bad_params, "ground size must lie in 1..63");
  std::uint64_t ground = n == 63 ? ~std::uint64_t(0) >> 1
                                 : (std::uint64_t(1) << n) - 1;
  if (support & ~ground)
    throw error(errc::bad_params, "support exceeds the ground set");

  std::sort(sets.begin(), sets.end(), member_order_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  for (std::uint64_t s : sets) {
    if (s == 0) throw error(errc::bad_params, "the empty set is not a member");
    if (s & ~support)
      throw error(errc::bad_params,
                  "member " + set_to_string(s) + " is not inside the support " +
                      set_to_string(support));
  }
  for (std::uint64_t bit = support; bit; bit &= bit - 1) {
    std::uint64_t single = bit & ~(bit - 1);
    if (!std::binary_search(sets.begin(), sets.end(), single, member_order_less)) {
      std::ostringstream msg;
      msg << "singleton {" << std::countr_zero(single) + 1 << "} is missing";
      throw error(errc::missing_singleton, msg.str());
    }
  }
  // Union closure; the first witness pair in canonical order is reported.
  std::unordered_set<std::uint64_t> present(sets.begin(), sets.end());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if ((sets[i] & sets[j]) == 0) continue;
      std::uint64_t un = sets[i] | sets[j];
      if (!present.count(un)) {
        std::ostringstream msg;
        msg << set_to_string(sets[i]) << " and " << set_to_string(sets[j])
            << " intersect but their union " << set_to_string(un)
            << " is missing";
        throw error(errc::union_closure_violation, msg.str());
      }
    }
  return BuildingSet(Trusted{}, n, support, std::move(sets));
}

BuildingSet BuildingSet::validate(int n,
                                  const std::vector<std::vector<int>>& sets) {
  std::vector<std::uint64_t> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) masks.push_back(mask_of(s));
  std::uint64_t support =
      n >= 1 && n <= 63 ? (n == 63 ? ~std::uint64_t(0) >> 1
                                   : (std::uint64_t(1) << n) - 1)
                        : 0;
  return from_masks(n, support, std::move(masks));
}

BuildingSet BuildingSet::complete(int n) {
  if (n < 1 || n > 63) throw error(errc::bad_params, "complete requires 1 <= n <= 63");
  if (n > 25) throw error(errc::bad_params, "complete is limited to n <= 25");
  std::vector<std::uint64_t> sets;
  std::uint64_t full = (std::uint64_t(1) << n) - 1;
  sets.reserve(full);
  for (std::uint64_t m = 1; m <= full; ++m) sets.push_back(m);
  return BuildingSet(Trusted{}, n, full, std::move(sets));
}

BuildingSet BuildingSet::simplex(int n) {
  if (n < 1 || n > 63) throw error(errc::bad_params, "simplex requires 1 <= n <= 63");
  std::vector<std::uint64_t> sets;
  for (int i = 0; i < n; ++i) sets.push_back(std::uint64_t(1) << i);
  std::uint64_t full = n == 63 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << n) - 1;
  if (n > 1) sets.push_back(full);
  return BuildingSet(Trusted{}, n, full, std::move(sets));
}

BuildingSet BuildingSet::path(int n) {
  if (n < 1 || n > 63) throw error(errc::bad_params, "path requires 1 <= n <= 63");
  std::vector<std::uint64_t> sets;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t m = 0;
    for (int j = i; j <= n; ++j) {
      m |= std::uint64_t(1) << (j - 1);
      sets.push_back(m);
    }
  }
  std::uint64_t full = n == 63 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << n) - 1;
  return BuildingSet(Trusted{}, n, full, std::move(sets));
}

BuildingSet BuildingSet::snk(int n, int k) {
  if (n < 2 || k < 2 || k > n)
    throw error(errc::bad_params, "snk requires 2 <= k <= n");
  if (n > 25) throw error(errc::bad_params, "snk is limited to n <= 25");
  std::vector<std::uint64_t> sets;
  std::uint64_t full = (std::uint64_t(1) << n) - 1;
  for (int i = 0; i < n; ++i) sets.push_back(std::uint64_t(1) << i);
  for (std::uint64_t m = 1; m <= full; ++m)
    if (std::popcount(m) >= k) sets.push_back(m);
  return BuildingSet(Trusted{}, n, full, std::move(sets));
}

BuildingSet BuildingSet::star(int n) {
  if (n < 1 || n > 62) throw error(errc::bad_params, "star requires 1 <= n <= 62");
  if (n > 25) throw error(errc::bad_params, "star is limited to n <= 25");
  std::vector<std::uint64_t> sets;
  std::uint64_t hub = std::uint64_t(1) << n;  // element n+1
  for (int i = 0; i <= n; ++i) sets.push_back(std::uint64_t(1) << i);
  std::uint64_t leaves = (std::uint64_t(1) << n) - 1;
  // Connected subgraphs of the star with >= 2 vertices all contain the hub.
  for (std::uint64_t m = 1; m <= leaves; ++m) sets.push_back(m | hub);
  return BuildingSet(Trusted{}, n + 1, leaves | hub, std::move(sets));
}

BuildingSet BuildingSet::stanley_pitman(int n) {
  if (n < 1 || n > 63)
    throw error(errc::bad_params, "stanley_pitman requires 1 <= n <= 63");
  std::uint64_t full = n == 63 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << n) - 1;
  std::vector<std::uint64_t> sets;
  for (int i = 0; i < n; ++i) sets.push_back(std::uint64_t(1) << i);
  for (int i = 1; i <= n; ++i)
    sets.push_back(full & ~((std::uint64_t(1) << (i - 1)) - 1));  // [i..n]
  std::sort(sets.begin(), sets.end(), member_order_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return BuildingSet(Trusted{}, n, full, std::move(sets));
}

BuildingSet BuildingSet::restricted(std::uint64_t subset) const {
  std::vector<std::uint64_t> kept;
  for (std::uint64_t m : sets_)
    if ((m & ~subset) == 0) kept.push_back(m);
  return BuildingSet(Trusted{}, n_, subset & support_, std::move(kept));
}

std::vector<BuildingSet> BuildingSet::components() const {
  // Inclusion-maximal members are pairwise disjoint (union closure) and cover
  // the support (singletons). Scanning from the largest member down, a member
  // meeting an already collected support lies inside it.
  std::vector<std::uint64_t> maximal;
  std::uint64_t covered = 0;
  for (auto it = sets_.rbegin(); it != sets_.rend(); ++it) {
    if ((*it & covered) == 0) {
      maximal.push_back(*it);
      covered |= *it;
    }
  }
  std::sort(maximal.begin(), maximal.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return (a & ~(a - 1)) < (b & ~(b - 1));  // by smallest element
            });
  std::vector<BuildingSet> out;
  out.reserve(maximal.size());
  for (std::uint64_t sup : maximal) out.push_back(restricted(sup));
  return out;
}

BuildingSet BuildingSet::combine(std::span<const BuildingSet> parts) {
  if (parts.empty())
    throw error(errc::bad_params, "combine requires at least one part");
  int n = 0;
  std::uint64_t support = 0;
  std::vector<std::uint64_t> sets;
  for (const BuildingSet& part : parts) {
    if (!part.is_connected())
      throw error(errc::not_connected,
                  "combine requires connected parts; " +
                      set_to_string(part.support()) + " is not");
    if (support & part.support())
      throw error(errc::overlapping_supports,
                  "part supported on " + set_to_string(part.support()) +
                      " overlaps " + set_to_string(support));
    support |= part.support();
    n = std::max(n, part.ground_size());
    sets.insert(sets.end(), part.members().begin(), part.members().end());
  }
  sets.push_back(support);
  std::sort(sets.begin(), sets.end(), member_order_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return BuildingSet(Trusted{}, n, support, std::move(sets));
}

BuildingSet BuildingSet::involution_image() const {
  auto flip = [this](std::uint64_t m) {
    std::uint64_t out = 0;
    for (std::uint64_t rest = m; rest; rest &= rest - 1)
      out |= std::uint64_t(1) << (n_ - 1 - std::countr_zero(rest));
    return out;
  };
  std::vector<std::uint64_t> sets;
  sets.reserve(sets_.size());
  for (std::uint64_t m : sets_) sets.push_back(flip(m));
  return BuildingSet(Trusted{}, n_, flip(support_), std::move(sets));
}

BuildingSet family(std::string_view name, int n, std::optional<int> k) {
  if (name == "complete") return BuildingSet::complete(n);
  if (name == "simplex") return BuildingSet::simplex(n);
  if (name == "path") return BuildingSet::path(n);
  if (name == "star") return BuildingSet::star(n);
  if (name == "stanley_pitman") return BuildingSet::stanley_pitman(n);
  if (name == "snk") {
    if (!k) throw error(errc::bad_params, "snk requires --k");
    return BuildingSet::snk(n, *k);
  }
  throw error(errc::bad_params, "unknown family \"" + std::string(name) + "\"");
}

}  // namespace nestoh
