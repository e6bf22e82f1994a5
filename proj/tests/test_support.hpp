#pragma once

// Shared helpers for the test suites: seeded text generation and naive
// reference implementations, all independent of the structures they check.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mapcount/mappability.hpp"
#include "mapcount/suffix_tree.hpp"

namespace testsupport {

using mapcount::Count;
using mapcount::Index;
using mapcount::IntText;
using mapcount::NodeRef;
using mapcount::Rank;
using mapcount::SuffixTree;

inline IntText random_text(Index n, Rank sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rank> ranks(static_cast<std::size_t>(n));
  for (auto& r : ranks) r = static_cast<Rank>(rng() % static_cast<std::uint64_t>(sigma));
  return IntText(std::move(ranks), mapcount::Alphabet::of_size(sigma));
}

inline IntText text_of(const std::string& s) {
  return mapcount::ingest(s, mapcount::InputFormat::Raw).front();
}

inline std::vector<Rank> window(const IntText& t, Index start, Index len) {
  std::vector<Rank> w;
  w.reserve(static_cast<std::size_t>(len));
  for (Index k = 0; k < len; ++k) w.push_back(t[start + k]);
  return w;
}

inline std::vector<Index> naive_sa(const IntText& t) {
  const Index n = t.size();
  std::vector<Index> sa(static_cast<std::size_t>(n));
  std::iota(sa.begin(), sa.end(), Index{0});
  auto ranks = t.ranks();
  std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
    return std::lexicographical_compare(ranks.begin() + a, ranks.end(),
                                        ranks.begin() + b, ranks.end());
  });
  return sa;
}

inline std::vector<Index> naive_lcp(const IntText& t, const std::vector<Index>& sa) {
  const Index n = t.size();
  std::vector<Index> lcp(static_cast<std::size_t>(n), 0);
  for (Index r = 1; r < n; ++r) {
    Index i = sa[r - 1], j = sa[r], h = 0;
    while (i + h < n && j + h < n && t[i + h] == t[j + h]) ++h;
    lcp[r] = h;
  }
  return lcp;
}

inline Index naive_lce_forward(const IntText& t, Index i, Index j) {
  const Index n = t.size();
  Index h = 0;
  while (i + h < n && j + h < n && t[i + h] == t[j + h]) ++h;
  return h;
}

inline Index naive_lce_backward(const IntText& t, Index i, Index j) {
  Index h = 0;
  while (i - h >= 0 && j - h >= 0 && t[i - h] == t[j - h]) ++h;
  return h;
}

/// Occurrences of a factor by sliding-window scan.
inline Index naive_occurrences(const IntText& t, const std::vector<Rank>& f) {
  const Index n = t.size();
  const Index len = static_cast<Index>(f.size());
  Index count = 0;
  for (Index i = 0; i + len <= n; ++i) {
    bool match = true;
    for (Index k = 0; k < len && match; ++k) match = t[i + k] == f[k];
    if (match) ++count;
  }
  return count;
}

inline std::vector<Rank> ref_label(const SuffixTree& tree, const NodeRef& u) {
  return tree.label(u);
}

/// Walks a factor letter-by-letter from the root; empty optional when the
/// factor does not occur.
inline std::optional<NodeRef> walk(const SuffixTree& tree, const std::vector<Rank>& f) {
  NodeRef u = tree.root_ref();
  for (Rank c : f) {
    auto next = tree.child(u, c);
    if (!next) return std::nullopt;
    u = *next;
  }
  return u;
}

}  // namespace testsupport
