#include "nestoh/btrees.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace nestoh {

BTree::BTree(int root, std::vector<std::pair<int, int>> edges)
    : root_(root), edges_(std::move(edges)) {
  if (root < 1 || root > 63) throw error(errc::bad_params, "root out of range");
  std::sort(edges_.begin(), edges_.end());
  std::uint64_t child_seen = 0;
  std::uint64_t present = std::uint64_t(1) << (root - 1);
  for (auto [c, p] : edges_) {
    if (c < 1 || c > 63 || p < 1 || p > 63 || c == p)
      throw error(errc::bad_params, "edge out of range");
    std::uint64_t cbit = std::uint64_t(1) << (c - 1);
    if (c == root || (child_seen & cbit))
      throw error(errc::bad_params, "element has two parents");
    child_seen |= cbit;
    present |= cbit | (std::uint64_t(1) << (p - 1));
  }
  if (present != (child_seen | (std::uint64_t(1) << (root - 1))))
    throw error(errc::bad_params, "parent label missing from the tree");
  // Every element must reach the root; with unique parents this rules out cycles.
  for (std::uint64_t m = present; m; m &= m - 1) {
    int e = std::countr_zero(m) + 1;
    int steps = 0;
    for (int v = e; v != root_; v = parent_of(v))
      if (++steps > static_cast<int>(edges_.size()))
        throw error(errc::bad_params, "edges contain a cycle");
  }
}

std::uint64_t BTree::element_mask() const {
  std::uint64_t m = std::uint64_t(1) << (root_ - 1);
  for (auto [c, p] : edges_) m |= std::uint64_t(1) << (c - 1);
  return m;
}

std::vector<int> BTree::elements() const { return mask_elements(element_mask()); }

int BTree::parent_of(int i) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(),
                             std::pair<int, int>{i, 0});
  if (it != edges_.end() && it->first == i) return it->second;
  return 0;
}

std::vector<int> BTree::children_of(int i) const {
  std::vector<int> out;
  for (auto [c, p] : edges_)
    if (p == i) out.push_back(c);
  return out;
}

int BTree::depth_of(int i) const {
  int d = 0;
  for (int v = i; v != root_; v = parent_of(v)) ++d;
  return d;
}

std::uint64_t BTree::descendant_mask(int i) const {
  std::uint64_t out = 0;
  for (int e : elements()) {
    int v = e;
    while (v != 0 && v != i) v = parent_of(v);
    if (v == i) out |= std::uint64_t(1) << (e - 1);
  }
  return out;
}

std::vector<int> BTree::descendant_set(int i) const {
  return mask_elements(descendant_mask(i));
}

TreeStats BTree::stats() const {
  TreeStats s;
  std::vector<int> elems = elements();
  int depth = 0;
  for (int e : elems) depth = std::max(depth, depth_of(e));
  s.depth = depth;
  for (auto [c, p] : edges_) {
    std::int64_t rank = depth - depth_of(p);
    s.mu += rank;
    if (c > p) {
      ++s.des;
      s.maj += rank;
    }
  }
  return s;
}

std::string BTree::debug_json() const {
  std::ostringstream os;
  os << "{\"root\":" << root_ << ",\"edges\":[";
  bool first = true;
  for (auto [c, p] : edges_) {
    if (!first) os << ",";
    first = false;
    os << "[" << c << "," << p << "]";
  }
  os << "]}";
  return os.str();
}

bool validate_btree(const BuildingSet& b, const BTree& t) {
  if (t.element_mask() != b.support()) return false;
  std::vector<int> elems = t.elements();
  for (int e : elems)
    if (!b.contains(t.descendant_mask(e))) return false;

  // Strict-ancestor masks, for locating the tree-maximal elements of a member.
  std::vector<std::uint64_t> anc(64, 0);
  for (int e : elems) {
    std::uint64_t m = 0;
    for (int v = t.parent_of(e); v != 0; v = t.parent_of(v))
      m |= std::uint64_t(1) << (v - 1);
    anc[e] = m;
  }
  // A member violates the definition exactly when it is the union of the
  // descendant sets of its >= 2 tree-maximal elements (an antichain).
  for (std::uint64_t member : b.members()) {
    std::uint64_t covered = 0;
    int maximal = 0;
    for (std::uint64_t m = member; m; m &= m - 1) {
      int e = std::countr_zero(m) + 1;
      if ((anc[e] & member) == 0) {
        ++maximal;
        covered |= t.descendant_mask(e);
      }
    }
    if (maximal >= 2 && covered == member) return false;
  }
  return true;
}

struct BTreeStream::Impl {
  struct Node {
    BuildingSet bs;
    std::vector<int> roots;
    std::size_t root_idx = 0;
    std::vector<BuildingSet> comps;
    std::vector<Node> children;
    bool at_end = false;

    explicit Node(BuildingSet b) : bs(std::move(b)) {
      roots = bs.support_elements();
      enter_root();
    }

    void enter_root() {
      comps.clear();
      children.clear();
      if (root_idx >= roots.size()) {
        at_end = true;
        return;
      }
      std::uint64_t rest =
          bs.support() & ~(std::uint64_t(1) << (roots[root_idx] - 1));
      if (rest) {
        comps = bs.restricted(rest).components();
        children.reserve(comps.size());
        for (const BuildingSet& c : comps) children.emplace_back(c);
      }
    }

    // Odometer over (root, child trees): the last component advances fastest,
    // so tuples appear in lexicographic order for each root in turn.
    bool advance() {
      for (int i = static_cast<int>(children.size()) - 1; i >= 0; --i) {
        if (children[i].advance()) {
          for (std::size_t j = i + 1; j < children.size(); ++j)
            children[j] = Node(comps[j]);
          return true;
        }
      }
      ++root_idx;
      enter_root();
      return !at_end;
    }

    void emit(int& root_out, std::vector<std::pair<int, int>>& edges) const {
      int r = roots[root_idx];
      root_out = r;
      for (const Node& ch : children) {
        int sub = 0;
        ch.emit(sub, edges);
        edges.push_back({sub, r});
      }
    }
  };

  explicit Impl(const BuildingSet& b) : top(b) {}

  Node top;
  bool done = false;
};

BTreeStream::BTreeStream(const BuildingSet& b) {
  if (!b.is_connected())
    throw error(errc::not_connected,
                "enumeration requires the support " + set_to_string(b.support()) +
                    " to be a member");
  impl_ = std::make_unique<Impl>(b);
}

BTreeStream::BTreeStream(BTreeStream&&) noexcept = default;
BTreeStream& BTreeStream::operator=(BTreeStream&&) noexcept = default;
BTreeStream::~BTreeStream() = default;

std::optional<BTree> BTreeStream::next() {
  if (impl_->done) return std::nullopt;
  int root = 0;
  std::vector<std::pair<int, int>> edges;
  impl_->top.emit(root, edges);
  BTree out(root, std::move(edges));
  if (!impl_->top.advance()) impl_->done = true;
  return out;
}

void for_each_btree(const BuildingSet& b,
                    const std::function<void(const BTree&)>& fn) {
  BTreeStream stream(b);
  while (std::optional<BTree> t = stream.next()) fn(*t);
}

std::vector<BTree> all_btrees(const BuildingSet& b) {
  std::vector<BTree> out;
  for_each_btree(b, [&](const BTree& t) { out.push_back(t); });
  return out;
}

Polynomial h_polynomial(const BuildingSet& b, HVars vars) {
  Polynomial out;
  for_each_btree(b, [&](const BTree& t) {
    TreeStats s = t.stats();
    switch (vars) {
      case HVars::t: out.add_term({s.des, 0, 0}, 1); break;
      case HVars::tq: out.add_term({s.des, s.maj, 0}, 1); break;
      case HVars::tqu: out.add_term({s.des, s.maj, s.mu}, 1); break;
    }
  });
  return out;
}

std::vector<Int> f_vector(const BuildingSet& b) {
  Polynomial h = h_polynomial(b, HVars::t);
  int d = b.support_size() - 1;
  // f(t) = h(t+1): f_j = sum_i h_i * C(i, j).
  std::vector<Int> f(d + 1, 0);
  for (const auto& [m, c] : h.terms()) {
    Int binom = 1;
    for (std::int64_t j = 0; j <= m.t; ++j) {
      f[j] += c * binom;
      binom = binom * (m.t - j) / (j + 1);
    }
  }
  return f;
}

InvolutionCheck check_involution_palindromicity(const BuildingSet& b) {
  if (b.involution_image() != b)
    throw error(errc::not_omega_invariant,
                "building set is not fixed by i -> n-i+1");
  InvolutionCheck out;
  out.h = h_polynomial(b, HVars::tqu);
  out.transformed = out.h.reverse_transformed(b.support_size() - 1);
  out.holds = out.h == out.transformed;
  return out;
}

PairedPolys h_combined(std::span<const BuildingSet> parts) {
  BuildingSet whole = BuildingSet::combine(parts);
  PairedPolys out;
  out.direct = h_polynomial(whole, HVars::t);
  Polynomial staircase;
  for (std::size_t j = 0; j < parts.size(); ++j)
    staircase.add_term({static_cast<std::int64_t>(j), 0, 0}, 1);
  Polynomial product = staircase;
  for (const BuildingSet& part : parts)
    product = product * h_polynomial(part, HVars::t);
  out.formula = product;
  return out;
}

}  // namespace nestoh
