#pragma once

#include "mapcount/mappability.hpp"
#include "mapcount/suffix_tree.hpp"

namespace mapcount {

/// A distinct length-m factor: its canonical tree position and SA range.
struct DepthMNode {
  NodeRef node;
  Index sa_lo, sa_hi;

  Index occurrences() const { return sa_hi - sa_lo + 1; }
};

/// All positions of string depth m, one per distinct length-m factor.
std::vector<DepthMNode> collect_depth_m_nodes(const SuffixTree& tree, Index m);

/// Heavy-path recursion: for every depth-m node z hanging off a heavy
/// path at node u via letter c, add the occurrence count of each
/// single-letter variant L(u)c'tail(z) to Count(z), and push |I_z| onto
/// the heavy-direction variant. Accumulates into count_by_endpoint,
/// indexed by the canonical endpoint of each depth-m node. When
/// enumeration_counts is given it tallies how often each depth-m node was
/// processed as a side-tree member (bounded by the leaf-halving depth).
void perform_count(const SuffixTree& tree, Index m,
                   const std::vector<DepthMNode>& depth_m_nodes,
                   std::vector<Count>& count_by_endpoint,
                   std::vector<Index>* enumeration_counts = nullptr);

/// Spreads per-factor counts onto window positions through the SA ranges.
std::vector<Count> project_counts(const SuffixTree& tree,
                                  const std::vector<DepthMNode>& depth_m_nodes,
                                  const std::vector<Count>& count_by_endpoint,
                                  Index m);

/// The O(n log^2 n) algorithm. The per-node letter loop costs O(sigma);
/// meant for small alphabets.
MappabilityResult run_heavypath(const IntText& t, Index m);

}  // namespace mapcount
