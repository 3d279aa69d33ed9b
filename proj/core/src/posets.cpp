#include "nestoh/posets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nestoh {

PermStats perm_stats(std::span<const int> word) {
  PermStats s;
  for (int i = 1; i + 1 <= static_cast<int>(word.size()); ++i) {
    if (word[i - 1] > word[i]) {
      s.descents.push_back(i);
      s.maj += i;
    }
  }
  s.des = static_cast<int>(s.descents.size());
  return s;
}

Polynomial euler_mahonian(int n) {
  if (n < 1) throw error(errc::bad_params, "euler_mahonian requires n >= 1");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  Polynomial out;
  do {
    PermStats s = perm_stats(w);
    out.add_term({s.des, s.maj, 0}, 1);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Poset::Poset(int n, std::vector<std::pair<int, int>> covers)
    : n_(n), covers_(std::move(covers)) {
  if (n < 1) throw error(errc::bad_params, "poset needs at least one element");
  for (auto [a, b] : covers_) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) {
      std::ostringstream msg;
      msg << "cover (" << a << "," << b << ") out of range for n=" << n;
      throw error(errc::bad_params, msg.str());
    }
  }
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
}

bool Poset::is_tree() const {
  if (static_cast<int>(covers_.size()) != n_ - 1) return false;
  // n-1 edges and connectivity imply acyclicity.
  std::vector<std::vector<int>> adj(n_ + 1);
  for (auto [a, b] : covers_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n_ + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return count == n_;
}

std::vector<int> Poset::minimal_rank() const {
  if (!is_tree())
    throw error(errc::not_tree_poset, "rank requires a tree-shaped Hasse diagram");
  // Propagate rank differences across covers from element 1; the result is
  // independent of the start because the diagram is a tree.
  std::vector<std::vector<std::pair<int, int>>> adj(n_ + 1);
  for (auto [a, b] : covers_) {
    adj[a].push_back({b, +1});  // upper neighbor is one rank above
    adj[b].push_back({a, -1});
  }
  std::vector<int> rank(n_ + 1, 0);
  std::vector<char> seen(n_ + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, d] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        rank[w] = rank[v] + d;
        stack.push_back(w);
      }
  }
  int low = *std::min_element(rank.begin() + 1, rank.end());
  std::vector<int> out(n_);
  for (int e = 1; e <= n_; ++e) out[e - 1] = rank[e] - low;
  return out;
}

PosetStats Poset::stats() const {
  std::vector<int> rank = minimal_rank();
  PosetStats s;
  for (auto [a, b] : covers_) {
    if (a > b) {
      ++s.des;
      s.maj += rank[b - 1];
    }
  }
  return s;
}

Poset ordinal_sum(const Poset& low, const Poset& high) {
  int n1 = low.size();
  int n2 = high.size();
  std::vector<std::pair<int, int>> covers = low.covers();
  for (auto [a, b] : high.covers()) covers.push_back({a + n1, b + n1});

  std::vector<char> below(n1 + 1, 0), above(n2 + 1, 0);
  for (auto [a, b] : low.covers()) below[a] = 1;   // a has something above it
  for (auto [a, b] : high.covers()) above[b] = 1;  // b has something below it
  for (int m = 1; m <= n1; ++m)
    if (!below[m])
      for (int x = 1; x <= n2; ++x)
        if (!above[x]) covers.push_back({m, x + n1});
  return Poset(n1 + n2, std::move(covers));
}

Poset antichain(int n) { return Poset(n, {}); }

Poset chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < n; ++i) covers.push_back({i, i + 1});
  return Poset(n, std::move(covers));
}

Poset chain_poset(std::span<const int> word) {
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    covers.push_back({word[i], word[i + 1]});
  return Poset(static_cast<int>(word.size()), std::move(covers));
}

Polynomial qh_from_posets(std::span<const Poset> posets) {
  Polynomial out;
  for (std::size_t i = 0; i < posets.size(); ++i) {
    if (!posets[i].is_tree()) {
      std::ostringstream msg;
      msg << "poset " << (i + 1) << " of " << posets.size()
          << " is not a tree";
      throw error(errc::not_tree_poset, msg.str());
    }
    PosetStats s = posets[i].stats();
    out.add_term({s.des, s.maj, 0}, 1);
  }
  return out;
}

std::vector<Poset> braid_fan_posets(int n) {
  if (n < 1) throw error(errc::bad_params, "braid fan requires n >= 1");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Poset> out;
  do {
    out.push_back(chain_poset(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace nestoh
