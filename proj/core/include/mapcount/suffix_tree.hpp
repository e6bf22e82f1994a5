#pragma once

#include <optional>
#include <vector>

#include "mapcount/suffix_index.hpp"

namespace mapcount {

/// A position in the suffix tree, explicit or implicit. `node` is the
/// deeper explicit endpoint of the edge the position lies on and `depth`
/// its string depth; the position is explicit iff depth == D(node).
/// The (node, depth) pair is canonical: equal factors yield equal refs.
struct NodeRef {
  Index node = -1;
  Index depth = 0;
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct HeavyDecomposition {
  std::vector<Index> heavy_child;           // -1 for childless nodes
  std::vector<Index> head;                  // head node of each node's heavy path
  std::vector<Index> path_id, path_pos;
  std::vector<std::vector<Index>> paths;    // node lists ordered by depth
};

/// Suffix tree built from a suffix array + LCP array. No terminator letter
/// is appended: suffixes that are prefixes of other suffixes terminate at
/// explicit internal nodes carrying a terminal label. Immutable after
/// build; keeps references to the text and index it was built from.
class SuffixTree {
public:
  static SuffixTree build(const IntText& text, const SuffixIndex& idx);

  Index node_count() const { return static_cast<Index>(nodes_.size()); }
  Index root() const { return 0; }
  Index parent(Index v) const { return nodes_[v].parent; }
  Index depth(Index v) const { return nodes_[v].depth; }
  Index sa_lo(Index v) const { return nodes_[v].sa_lo; }
  Index sa_hi(Index v) const { return nodes_[v].sa_hi; }
  /// Suffix start position when L(v) is a suffix of the text, else -1.
  Index terminal_suffix(Index v) const { return nodes_[v].terminal; }
  /// Number of suffixes below v == occurrences of L(v) in the text.
  Index leaf_weight(Index v) const { return nodes_[v].sa_hi - nodes_[v].sa_lo + 1; }
  /// Explicit node whose path-label is the suffix starting at pos.
  Index terminal_node_of(Index pos) const { return terminal_node_of_[pos]; }
  /// Count of terminal labels; always n (suffixes <-> terminals).
  Index terminal_count() const { return static_cast<Index>(terminal_node_of_.size()); }

  struct Child {
    Rank letter;  // first letter of the edge
    Index node;
  };
  std::span<const Child> children(Index v) const { return children_[v]; }

  bool is_explicit(const NodeRef& u) const { return u.depth == depth(u.node); }
  NodeRef ref(Index v) const { return NodeRef{v, depth(v)}; }
  NodeRef root_ref() const { return ref(root()); }

  /// SA range of the factor L(u); for implicit refs this is the range of
  /// the deeper endpoint, which represents the same occurrence set.
  std::pair<Index, Index> sa_range(const NodeRef& u) const;
  Index occurrences(const NodeRef& u) const;

  /// Child of u along letter c, i.e. the position of L(u)·c, if that
  /// factor occurs.
  std::optional<NodeRef> child(const NodeRef& u, Rank c) const;

  /// The position one letter up the root path; u must not be the root.
  NodeRef ascend(const NodeRef& u) const;

  /// Ancestor of u at string depth d (level ancestor), 0 <= d <= D(u).
  /// Heavy-path jumps plus one binary search, O(log n).
  NodeRef level_ancestor(const NodeRef& u, Index d) const;

  /// Position of L(u) with its first `drop` letters removed.
  NodeRef suf_node(const NodeRef& u, Index drop) const;

  struct Located {
    NodeRef node;
    Index sa_lo, sa_hi;
  };
  /// Position and SA range of L(u)·L(v) if that string occurs; two binary
  /// searches inside the range of u, O(log n) LCE probes.
  std::optional<Located> concat_nodes(const NodeRef& u, const NodeRef& v) const;

  const HeavyDecomposition& heavy() const { return heavy_; }
  const SuffixIndex& index() const { return *idx_; }
  const IntText& text() const { return *text_; }

  /// The factor a ref stands for, spelled out; intended for diagnostics.
  std::vector<Rank> label(const NodeRef& u) const;

private:
  struct Node {
    Index parent = -1;
    Index depth = 0;
    Index sa_lo = 0, sa_hi = -1;
    Index terminal = -1;
    Index repr = 0;  // start of some suffix below this node
  };

  Rank letter_at(Index v, Index offset) const;  // offset-th letter of L(v)

  std::vector<Node> nodes_;
  std::vector<std::vector<Child>> children_;
  std::vector<Index> terminal_node_of_;
  HeavyDecomposition heavy_;
  const IntText* text_ = nullptr;
  const SuffixIndex* idx_ = nullptr;
};

}  // namespace mapcount
