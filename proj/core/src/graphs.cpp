#include "nestoh/graphs.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace nestoh {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), adj_(n + 1, 0) {
  if (n < 1 || n > 63) throw error(errc::bad_params, "graph size must lie in 1..63");
  for (auto& [a, b] : edges_) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) {
      std::ostringstream msg;
      msg << "edge (" << a << "," << b << ") out of range for n=" << n;
      throw error(errc::bad_params, msg.str());
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [a, b] : edges_) {
    adj_[a] |= std::uint64_t(1) << (b - 1);
    adj_[b] |= std::uint64_t(1) << (a - 1);
  }
}

bool Graph::adjacent(int i, int j) const {
  return adj_[i] >> (j - 1) & 1;
}

bool Graph::induced_connected(std::uint64_t subset) const {
  if (subset == 0) return false;
  std::uint64_t seen = subset & ~(subset - 1);
  for (;;) {
    std::uint64_t grown = seen;
    for (std::uint64_t m = seen; m; m &= m - 1)
      grown |= adj_[std::countr_zero(m) + 1] & subset;
    if (grown == seen) break;
    seen = grown;
  }
  return seen == subset;
}

std::vector<std::uint64_t> Graph::component_masks() const {
  std::uint64_t all = n_ == 63 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << n_) - 1;
  std::vector<std::uint64_t> out;
  std::uint64_t left = all;
  while (left) {
    std::uint64_t seen = left & ~(left - 1);
    for (;;) {
      std::uint64_t grown = seen;
      for (std::uint64_t m = seen; m; m &= m - 1)
        grown |= adj_[std::countr_zero(m) + 1] & all;
      if (grown == seen) break;
      seen = grown;
    }
    out.push_back(seen);
    left &= ~seen;
  }
  return out;
}

bool Graph::is_connected() const { return component_masks().size() == 1; }

BuildingSet graphical_building_set(const Graph& g) {
  int n = g.size();
  if (n > 25)
    throw error(errc::bad_params, "graphical building set is limited to n <= 25");
  std::uint64_t full = (std::uint64_t(1) << n) - 1;
  std::vector<std::uint64_t> sets;
  for (std::uint64_t m = 1; m <= full; ++m)
    if (g.induced_connected(m)) sets.push_back(m);
  if (sets.empty() || sets.back() != full) sets.push_back(full);
  return BuildingSet::from_masks(n, full, std::move(sets));
}

std::string Tubing::json() const {
  std::ostringstream os;
  os << "{\"tubes\":[";
  bool first_tube = true;
  for (std::uint64_t tube : tubes) {
    if (!first_tube) os << ",";
    first_tube = false;
    os << "[";
    const char* sep = "";
    for (int e : mask_elements(tube)) {
      os << sep << e;
      sep = ",";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

Tubing tubing_from_btree(const BTree& t) {
  Tubing chi;
  for (int e : t.elements())
    if (e != t.root()) chi.tubes.push_back(t.descendant_mask(e));
  std::sort(chi.tubes.begin(), chi.tubes.end(), member_order_less);
  return chi;
}

bool validate_tubing(const Graph& g, const Tubing& chi) {
  for (std::uint64_t tube : chi.tubes) {
    if (!g.induced_connected(tube)) return false;
    if (std::popcount(tube) == g.size()) return false;  // tubes are proper
  }
  for (std::size_t i = 0; i < chi.tubes.size(); ++i)
    for (std::size_t j = i + 1; j < chi.tubes.size(); ++j) {
      std::uint64_t a = chi.tubes[i], b = chi.tubes[j];
      if ((a & b) == a || (a & b) == b) continue;  // nested
      if (a & b) return false;                     // overlapping, not nested
      // Disjoint tubes must not be adjacent: their union must not be a tube.
      if (g.induced_connected(a | b)) return false;
    }
  return true;
}

void for_each_maximal_tubing(
    const Graph& g, const std::function<void(const Tubing&, const BTree&)>& fn) {
  BuildingSet b = graphical_building_set(g);
  for_each_btree(b, [&](const BTree& t) { fn(tubing_from_btree(t), t); });
}

TubingStats tubing_stats(const Graph& g, const Tubing& chi) {
  int n = g.size();
  if (static_cast<int>(chi.tubes.size()) != n - 1)
    throw error(errc::not_maximal, "a maximal tubing has exactly n-1 tubes");

  std::vector<int> nu(n + 1, 0);
  for (std::uint64_t tube : chi.tubes)
    for (int e : mask_elements(tube)) ++nu[e];

  TubingStats s;
  for (int e = 1; e <= n; ++e) s.nest = std::max(s.nest, nu[e]);

  int untubed = 0;
  for (int e = 1; e <= n; ++e)
    if (nu[e] == 0) untubed = e;

  // Distinguished element of a tube: the one avoided by every strictly
  // smaller tube of the tubing nested inside it.
  auto alpha = [&](std::uint64_t tube) {
    std::uint64_t inner = 0;
    for (std::uint64_t other : chi.tubes)
      if (other != tube && (other & ~tube) == 0) inner |= other;
    return std::countr_zero(tube & ~inner) + 1;
  };

  for (std::size_t i = 0; i < chi.tubes.size(); ++i) {
    std::uint64_t tube = chi.tubes[i];
    // Immediate successor: the smallest tube strictly containing this one.
    std::uint64_t parent = 0;
    for (std::uint64_t other : chi.tubes) {
      if (other == tube || (tube & ~other)) continue;
      if (parent == 0 || (other & ~parent) == 0) parent = other;
    }
    int a_low = alpha(tube);
    if (parent) {
      int a_up = alpha(parent);
      std::int64_t weight = s.nest - nu[a_up];
      s.mu += weight;
      s.printed_mu += weight;
      if (a_low > a_up) {
        ++s.nest_des;
        s.nest_maj += weight;
      }
    } else {
      ++s.outermost;
      std::int64_t weight = s.nest;  // the untubed element has nu = 0
      s.mu += weight;
      if (a_low > untubed) {
        ++s.nest_des;
        s.nest_maj += weight;
      }
    }
  }
  return s;
}

Polynomial h_graph(const Graph& g) {
  Polynomial out;
  for_each_maximal_tubing(g, [&](const Tubing& chi, const BTree&) {
    TubingStats s = tubing_stats(g, chi);
    out.add_term({s.nest_des, s.nest_maj, 0}, 1);
  });
  return out;
}

PairedPolys h_disconnected_check(const Graph& g) {
  PairedPolys out;
  out.direct = h_polynomial(graphical_building_set(g), HVars::t);
  std::vector<std::uint64_t> comps = g.component_masks();
  Polynomial staircase;
  for (std::size_t j = 0; j < comps.size(); ++j)
    staircase.add_term({static_cast<std::int64_t>(j), 0, 0}, 1);
  Polynomial product = staircase;
  for (std::uint64_t comp : comps) {
    // Component building set keeps its original labels.
    std::vector<std::uint64_t> sets;
    std::uint64_t full = (std::uint64_t(1) << g.size()) - 1;
    for (std::uint64_t m = 1; m <= full; ++m)
      if ((m & ~comp) == 0 && g.induced_connected(m)) sets.push_back(m);
    BuildingSet bc = BuildingSet::from_masks(g.size(), comp, std::move(sets));
    product = product * h_polynomial(bc, HVars::t);
  }
  out.formula = product;
  return out;
}

}  // namespace nestoh
