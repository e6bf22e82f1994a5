#pragma once

#include "mapcount/mappability.hpp"
#include "mapcount/suffix_tree.hpp"

namespace mapcount {

/// One window's contribution at mismatch offset j: the tree position of
/// its prefix before the mismatch, the mismatch letter, and its start.
struct Triple {
  Index prefix_node;  // canonical endpoint of u_{i,j}; depths are uniform per j
  Rank letter;
  Index pos;
};

/// Scratch for grouping triples; letter tallies and group slots are
/// zeroed in time proportional to the bucket after each use.
struct GroupScratch {
  GroupScratch(Rank sigma, Index node_count)
      : letter_count(static_cast<std::size_t>(sigma), 0),
        slot_of(static_cast<std::size_t>(node_count), -1) {}
  std::vector<Count> letter_count;
  std::vector<Rank> touched_letters;
  std::vector<Index> slot_of;  // prefix node -> group slot, -1 when unused
  std::vector<Index> used_nodes;
  std::vector<std::vector<Triple>> groups;
};

/// Groups a bucket of triples (all sharing one suffix node) by prefix
/// node with one bucket-sort pass; inside a group of size q with r_c
/// triples carrying letter c, every triple's window gains q - r_c.
void group_and_count(const std::vector<Triple>& bucket, std::span<Count> c1,
                     GroupScratch& scratch);

/// The O(mn) sweep: for each mismatch offset j, pair the prefix node in
/// the tree of x with the suffix node in the tree of rev(x) and count
/// letter multiplicities per group.
MappabilityResult run_treewalk(const IntText& t, Index m);

}  // namespace mapcount
