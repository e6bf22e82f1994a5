#include "mapcount/suffix_tree.hpp"

#include <algorithm>

namespace mapcount {

Rank SuffixTree::letter_at(Index v, Index offset) const {
  return (*text_)[nodes_[v].repr + offset];
}

SuffixTree SuffixTree::build(const IntText& text, const SuffixIndex& idx) {
  SuffixTree t;
  t.text_ = &text;
  t.idx_ = &idx;
  const Index n = idx.size();
  auto sa = idx.sa();
  auto lcp = idx.lcp();

  t.nodes_.reserve(static_cast<std::size_t>(2 * n));
  t.children_.reserve(static_cast<std::size_t>(2 * n));
  auto new_node = [&](Index parent, Index depth) {
    Node nd;
    nd.parent = parent;
    nd.depth = depth;
    t.nodes_.push_back(nd);
    t.children_.emplace_back();
    return static_cast<Index>(t.nodes_.size() - 1);
  };

  // Left-to-right insertion over the SA with a stack of the rightmost path.
  new_node(-1, 0);
  std::vector<Index> stack{0};
  for (Index r = 0; r < n; ++r) {
    const Index l = lcp[r];
    Index last = -1;
    while (t.nodes_[stack.back()].depth > l) {
      last = stack.back();
      stack.pop_back();
    }
    Index par = stack.back();
    if (t.nodes_[par].depth < l) {
      // split the edge to `last` at depth l
      Index mid = new_node(par, l);
      auto& siblings = t.children_[par];
      siblings.back().node = mid;
      t.children_[mid].push_back(Child{0, last});
      t.nodes_[last].parent = mid;
      stack.push_back(mid);
      par = mid;
    }
    const Index suffix_depth = n - sa[r];
    if (suffix_depth == t.nodes_[par].depth) {
      t.nodes_[par].terminal = sa[r];  // suffix ends at an existing node
    } else {
      Index leaf = new_node(par, suffix_depth);
      t.nodes_[leaf].terminal = sa[r];
      t.children_[par].push_back(Child{0, leaf});
      stack.push_back(leaf);
    }
  }

  // SA ranges bottom-up; strictly decreasing depth is a topological order.
  const Index count = t.node_count();
  for (auto& nd : t.nodes_) {
    nd.sa_lo = n;
    nd.sa_hi = -1;
  }
  std::vector<Index> order(static_cast<std::size_t>(count));
  {
    // counting sort by decreasing depth
    std::vector<Index> offset(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& nd : t.nodes_) ++offset[nd.depth];
    Index placed = 0;
    for (Index d = n; d >= 0; --d) {
      const Index c = offset[d];
      offset[d] = placed;
      placed += c;
    }
    for (Index v = 0; v < count; ++v) order[offset[t.nodes_[v].depth]++] = v;
  }
  auto isa = idx.isa();
  for (Index v : order) {
    Node& nd = t.nodes_[v];
    if (nd.terminal >= 0) {
      Index r = isa[nd.terminal];
      nd.sa_lo = std::min(nd.sa_lo, r);
      nd.sa_hi = std::max(nd.sa_hi, r);
    }
    if (nd.parent >= 0) {
      Node& p = t.nodes_[nd.parent];
      p.sa_lo = std::min(p.sa_lo, nd.sa_lo);
      p.sa_hi = std::max(p.sa_hi, nd.sa_hi);
    }
  }
  for (auto& nd : t.nodes_) nd.repr = sa[nd.sa_lo];

  // First letters of edges; children were appended in SA order and are
  // therefore already sorted by letter.
  for (Index v = 0; v < count; ++v)
    for (auto& c : t.children_[v]) c.letter = t.letter_at(c.node, t.nodes_[v].depth);

  t.terminal_node_of_.assign(static_cast<std::size_t>(n), -1);
  for (Index v = 0; v < count; ++v)
    if (t.nodes_[v].terminal >= 0) t.terminal_node_of_[t.nodes_[v].terminal] = v;

  // Heavy decomposition: heavy child maximizes the suffix count of its
  // subtree, first (smallest-letter) maximum wins.
  auto& h = t.heavy_;
  h.heavy_child.assign(static_cast<std::size_t>(count), -1);
  h.head.assign(static_cast<std::size_t>(count), -1);
  h.path_id.assign(static_cast<std::size_t>(count), -1);
  h.path_pos.assign(static_cast<std::size_t>(count), -1);
  for (Index v = 0; v < count; ++v) {
    Index best = -1, best_weight = -1;
    for (const auto& c : t.children_[v]) {
      Index w = t.leaf_weight(c.node);
      if (w > best_weight) {
        best_weight = w;
        best = c.node;
      }
    }
    h.heavy_child[v] = best;
  }
  // Increasing depth is topological from the root.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Index v = *it;
    Index p = t.nodes_[v].parent;
    h.head[v] = (p >= 0 && h.heavy_child[p] == v) ? h.head[p] : v;
    if (h.head[v] == v) {
      Index id = static_cast<Index>(h.paths.size());
      h.paths.emplace_back();
      h.path_id[v] = id;
    } else {
      h.path_id[v] = h.path_id[p];
    }
    auto& path = h.paths[h.path_id[v]];
    h.path_pos[v] = static_cast<Index>(path.size());
    path.push_back(v);
  }
  return t;
}

std::pair<Index, Index> SuffixTree::sa_range(const NodeRef& u) const {
  return {nodes_[u.node].sa_lo, nodes_[u.node].sa_hi};
}

Index SuffixTree::occurrences(const NodeRef& u) const {
  return nodes_[u.node].sa_hi - nodes_[u.node].sa_lo + 1;
}

std::optional<NodeRef> SuffixTree::child(const NodeRef& u, Rank c) const {
  if (u.depth < depth(u.node)) {
    // implicit: the only continuation is the next letter on the edge
    if (letter_at(u.node, u.depth) != c) return std::nullopt;
    return NodeRef{u.node, u.depth + 1};
  }
  const auto& kids = children_[u.node];
  auto it = std::lower_bound(kids.begin(), kids.end(), c,
                             [](const Child& ch, Rank l) { return ch.letter < l; });
  if (it == kids.end() || it->letter != c) return std::nullopt;
  return NodeRef{it->node, u.depth + 1};
}

NodeRef SuffixTree::ascend(const NodeRef& u) const {
  detail::require(u.depth >= 1, "ascend called on the root");
  const Index d = u.depth - 1;
  const Index p = parent(u.node);
  if (d == depth(p)) return NodeRef{p, d};
  return NodeRef{u.node, d};
}

NodeRef SuffixTree::level_ancestor(const NodeRef& u, Index d) const {
  detail::require(d >= 0 && d <= u.depth, "level ancestor below the node");
  if (d == u.depth) return u;
  if (d > depth(parent(u.node))) return NodeRef{u.node, d};
  Index v = parent(u.node);  // explicit, D(v) >= d
  while (true) {
    Index h = heavy_.head[v];
    if (depth(h) <= d) break;
    Index p = parent(h);
    if (depth(p) < d) return NodeRef{h, d};  // mid light edge
    v = p;
  }
  const auto& path = heavy_.paths[heavy_.path_id[v]];
  // smallest position in [0, pos(v)] with depth >= d
  Index lo = 0, hi = heavy_.path_pos[v];
  while (lo < hi) {
    Index mid = (lo + hi) / 2;
    if (depth(path[mid]) >= d)
      hi = mid;
    else
      lo = mid + 1;
  }
  return NodeRef{path[lo], d};
}

NodeRef SuffixTree::suf_node(const NodeRef& u, Index drop) const {
  detail::require(drop >= 0 && drop <= u.depth, "suf drop longer than label");
  if (drop == 0) return u;
  if (drop == u.depth) return root_ref();
  const Index pos = index().sa()[nodes_[u.node].sa_lo] + drop;
  const Index term = terminal_node_of_[pos];
  return level_ancestor(ref(term), u.depth - drop);
}

std::optional<SuffixTree::Located> SuffixTree::concat_nodes(const NodeRef& u,
                                                            const NodeRef& v) const {
  if (v.depth == 0) {
    auto [lo, hi] = sa_range(u);
    return Located{u, lo, hi};
  }
  if (u.depth == 0) {
    auto [lo, hi] = sa_range(v);
    return Located{v, lo, hi};
  }
  const auto sa = index().sa();
  const Index n = index().size();
  const Index rep = sa[nodes_[v.node].sa_lo];  // an occurrence of L(v)
  // Compare L(v) against the tail of the rank-r suffix after L(u).
  auto cmp = [&](Index r) -> int {
    const Index s = sa[r] + u.depth;
    if (s == n) return -1;
    const Index e = index().lce_forward(s, rep);
    if (e >= v.depth) return 0;
    if (s + e == n) return -1;
    return (*text_)[s + e] < (*text_)[rep + e] ? -1 : 1;
  };
  auto [ulo, uhi] = sa_range(u);
  Index lo = ulo, hi = uhi + 1;
  while (lo < hi) {  // first rank with tail >= L(v)
    Index mid = (lo + hi) / 2;
    if (cmp(mid) < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  const Index first = lo;
  hi = uhi + 1;
  while (lo < hi) {  // first rank with tail > L(v)
    Index mid = (lo + hi) / 2;
    if (cmp(mid) <= 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (first == lo) return std::nullopt;
  const Index term = terminal_node_of_[sa[first]];
  NodeRef w = level_ancestor(ref(term), u.depth + v.depth);
  return Located{w, first, lo - 1};
}

std::vector<Rank> SuffixTree::label(const NodeRef& u) const {
  std::vector<Rank> out;
  out.reserve(static_cast<std::size_t>(u.depth));
  const Index start = nodes_[u.node].repr;
  for (Index k = 0; k < u.depth; ++k) out.push_back((*text_)[start + k]);
  return out;
}

}  // namespace mapcount
