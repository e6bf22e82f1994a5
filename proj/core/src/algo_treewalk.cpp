#include "mapcount/algo_treewalk.hpp"

namespace mapcount {

void group_and_count(const std::vector<Triple>& bucket, std::span<Count> c1,
                     GroupScratch& scratch) {
  std::size_t used = 0;
  for (const Triple& tr : bucket) {
    Index& slot = scratch.slot_of[tr.prefix_node];
    if (slot < 0) {
      slot = static_cast<Index>(used++);
      if (scratch.groups.size() < used) scratch.groups.emplace_back();
      scratch.used_nodes.push_back(tr.prefix_node);
    }
    scratch.groups[slot].push_back(tr);
  }
  for (std::size_t g = 0; g < used; ++g) {
    auto& group = scratch.groups[g];
    const Count q = static_cast<Count>(group.size());
    for (const Triple& tr : group) {
      if (scratch.letter_count[tr.letter]++ == 0)
        scratch.touched_letters.push_back(tr.letter);
    }
    for (const Triple& tr : group) c1[tr.pos] += q - scratch.letter_count[tr.letter];
    for (Rank c : scratch.touched_letters) scratch.letter_count[c] = 0;
    scratch.touched_letters.clear();
    group.clear();
  }
  for (Index u : scratch.used_nodes) scratch.slot_of[u] = -1;
  scratch.used_nodes.clear();
}

MappabilityResult run_treewalk(const IntText& t, Index m) {
  const Index n = t.size();
  detail::require(m >= 1 && m <= n, "window length out of range");
  const Index windows = n - m + 1;

  const SuffixIndex fwd_idx = SuffixIndex::build(t);
  const SuffixTree fwd = SuffixTree::build(t, fwd_idx);
  const IntText rev = reverse_text(t);
  const SuffixIndex rev_idx = SuffixIndex::build(rev);
  const SuffixTree bwd = SuffixTree::build(rev, rev_idx);

  MappabilityResult res;
  res.m = m;
  res.source_name = t.source_name();
  res.c0 = zero_map(fwd_idx, m);
  res.c1.assign(static_cast<std::size_t>(windows), 0);

  std::vector<NodeRef> prefix(windows), suffix(windows);
  std::vector<std::vector<Triple>> buckets(static_cast<std::size_t>(bwd.node_count()));
  std::vector<Index> dirty;
  GroupScratch scratch(t.alphabet().size(), fwd.node_count());

  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < windows; ++i) {
      if (j == 0) {
        prefix[i] = fwd.root_ref();
        // descend rev(x)[n-i-m .. n-i-2], the reversed window tail
        NodeRef v = bwd.root_ref();
        for (Index k = n - i - m; k <= n - i - 2; ++k) {
          auto next = bwd.child(v, rev[k]);
          detail::internal_check(next.has_value(), "window tail missing from tree");
          v = *next;
        }
        suffix[i] = v;
      } else {
        auto next = fwd.child(prefix[i], t[i + j - 1]);
        detail::internal_check(next.has_value(), "window prefix missing from tree");
        prefix[i] = *next;
        suffix[i] = bwd.ascend(suffix[i]);
      }
      auto& bucket = buckets[suffix[i].node];
      if (bucket.empty()) dirty.push_back(suffix[i].node);
      bucket.push_back(Triple{prefix[i].node, t[i + j], i});
    }
    for (Index v : dirty) {
      group_and_count(buckets[v], res.c1, scratch);
      buckets[v].clear();
    }
    dirty.clear();
  }
  return res;
}

}  // namespace mapcount
