#include "mapcount/algo_heavypath.hpp"

#include <algorithm>

namespace mapcount {

std::vector<DepthMNode> collect_depth_m_nodes(const SuffixTree& tree, Index m) {
  std::vector<DepthMNode> nodes;
  for (Index v = 1; v < tree.node_count(); ++v) {
    if (tree.depth(v) >= m && tree.depth(tree.parent(v)) < m)
      nodes.push_back(DepthMNode{NodeRef{v, m}, tree.sa_lo(v), tree.sa_hi(v)});
  }
  return nodes;
}

namespace {

struct SideTree {
  Index attach;   // node on the heavy path
  Index child;    // root of the side tree
  Rank letter;    // light edge letter
  Index sa_lo, sa_hi;
  std::vector<DepthMNode> members;
};

class CountRecursion {
public:
  CountRecursion(const SuffixTree& tree, std::vector<Count>& count_by_endpoint,
                 std::vector<Index>* enumeration_counts)
      : tree_(tree), count_(count_by_endpoint), enumerations_(enumeration_counts) {
    const Rank sigma = tree.text().alphabet().size();
    letter_node_.resize(static_cast<std::size_t>(sigma));
    for (Rank c = 0; c < sigma; ++c) letter_node_[c] = tree.child(tree.root_ref(), c);
  }

  void run(Index root, std::vector<DepthMNode>&& zs) {
    if (zs.empty()) return;

    // heavy spine from the subtree root down to a leaf
    std::vector<Index> spine;
    for (Index v = root; v != -1; v = tree_.heavy().heavy_child[v]) spine.push_back(v);

    std::vector<SideTree> sides;
    for (Index u : spine) {
      const Index heavy = tree_.heavy().heavy_child[u];
      for (const auto& c : tree_.children(u)) {
        if (c.node == heavy) continue;
        sides.push_back(SideTree{u, c.node, c.letter, tree_.sa_lo(c.node),
                                 tree_.sa_hi(c.node), {}});
      }
    }
    std::sort(sides.begin(), sides.end(),
              [](const SideTree& a, const SideTree& b) { return a.sa_lo < b.sa_lo; });

    // distribute by SA-range containment; nodes on the spine are dropped,
    // their counts arrive through the heavy-direction pushes
    for (DepthMNode& z : zs) {
      auto it = std::upper_bound(sides.begin(), sides.end(), z.sa_lo,
                                 [](Index lo, const SideTree& s) { return lo < s.sa_lo; });
      if (it == sides.begin()) continue;
      SideTree& s = *std::prev(it);
      if (z.sa_lo >= s.sa_lo && z.sa_hi <= s.sa_hi) s.members.push_back(z);
    }
    zs.clear();
    zs.shrink_to_fit();

    for (SideTree& s : sides) {
      if (s.members.empty()) continue;
      process_side(s);
      run(s.child, std::move(s.members));
    }
  }

private:
  void process_side(SideTree& s) {
    const Index u = s.attach;
    const NodeRef u_ref = tree_.ref(u);
    const Index heavy = tree_.heavy().heavy_child[u];
    for (const DepthMNode& z : s.members) {
      if (enumerations_) ++(*enumerations_)[z.node.node];
      const NodeRef tail = tree_.suf_node(z.node, tree_.depth(u) + 1);
      for (const auto& c : tree_.children(u)) {
        if (c.letter == s.letter) continue;
        const auto inner = tree_.concat_nodes(*letter_node_[c.letter], tail);
        if (!inner) continue;
        const auto variant = tree_.concat_nodes(u_ref, inner->node);
        if (!variant) continue;
        count_[z.node.node] += variant->sa_hi - variant->sa_lo + 1;
        if (c.node == heavy)  // push onto the heavy-direction partner
          count_[variant->node.node] += z.occurrences();
      }
    }
  }

  const SuffixTree& tree_;
  std::vector<Count>& count_;
  std::vector<Index>* enumerations_;
  std::vector<std::optional<NodeRef>> letter_node_;
};

}  // namespace

void perform_count(const SuffixTree& tree, Index m,
                   const std::vector<DepthMNode>& depth_m_nodes,
                   std::vector<Count>& count_by_endpoint,
                   std::vector<Index>* enumeration_counts) {
  detail::require(m >= 1 && m <= tree.index().size(), "window length out of range");
  CountRecursion rec(tree, count_by_endpoint, enumeration_counts);
  auto zs = depth_m_nodes;
  rec.run(tree.root(), std::move(zs));
}

std::vector<Count> project_counts(const SuffixTree& tree,
                                  const std::vector<DepthMNode>& depth_m_nodes,
                                  const std::vector<Count>& count_by_endpoint,
                                  Index m) {
  const Index n = tree.index().size();
  auto sa = tree.index().sa();
  std::vector<Count> c1(static_cast<std::size_t>(n - m + 1), 0);
  for (const DepthMNode& z : depth_m_nodes) {
    const Count value = count_by_endpoint[z.node.node];
    for (Index r = z.sa_lo; r <= z.sa_hi; ++r) c1[sa[r]] = value;
  }
  return c1;
}

MappabilityResult run_heavypath(const IntText& t, Index m) {
  const Index n = t.size();
  detail::require(m >= 1 && m <= n, "window length out of range");
  const SuffixIndex idx = SuffixIndex::build(t);
  const SuffixTree tree = SuffixTree::build(t, idx);

  const auto depth_m = collect_depth_m_nodes(tree, m);
  std::vector<Count> count(static_cast<std::size_t>(tree.node_count()), 0);
  perform_count(tree, m, depth_m, count);

  MappabilityResult res;
  res.m = m;
  res.source_name = t.source_name();
  res.c0 = zero_map(idx, m);
  res.c1 = project_counts(tree, depth_m, count, m);
  return res;
}

}  // namespace mapcount
