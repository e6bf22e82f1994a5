#include "mapcount/suffix_index.hpp"

#include <algorithm>
#include <bit>

namespace mapcount {

namespace {

// Prefix-doubling construction with counting sorts, O(n log n).
std::vector<Index> build_sa(std::span<const Rank> s) {
  const Index n = static_cast<Index>(s.size());
  std::vector<Index> sa(n), rank(n), tmp(n), cnt;

  Rank sigma = 0;
  for (Rank c : s) sigma = std::max(sigma, static_cast<Rank>(c + 1));
  cnt.assign(static_cast<std::size_t>(sigma) + 1, 0);
  for (Rank c : s) ++cnt[static_cast<std::size_t>(c) + 1];
  for (std::size_t k = 1; k < cnt.size(); ++k) cnt[k] += cnt[k - 1];
  for (Index i = 0; i < n; ++i) sa[cnt[s[i]]++] = i;

  Index classes = 1;
  rank[sa[0]] = 0;
  for (Index r = 1; r < n; ++r) {
    if (s[sa[r]] != s[sa[r - 1]]) ++classes;
    rank[sa[r]] = classes - 1;
  }

  std::vector<Index> order(n);
  for (Index len = 1; classes < n; len <<= 1) {
    // sort by second key: positions with no tail first, then shifted SA order
    Index idx = 0;
    for (Index i = n - len; i < n; ++i) order[idx++] = i;
    for (Index r = 0; r < n; ++r)
      if (sa[r] >= len) order[idx++] = sa[r] - len;
    // stable counting sort by first key
    cnt.assign(classes + 1, 0);
    for (Index i = 0; i < n; ++i) ++cnt[rank[i] + 1];
    for (std::size_t k = 1; k < cnt.size(); ++k) cnt[k] += cnt[k - 1];
    for (Index i = 0; i < n; ++i) sa[cnt[rank[order[i]]]++] = order[i];

    auto second = [&](Index i) { return i + len < n ? rank[i + len] : -1; };
    tmp[sa[0]] = 0;
    classes = 1;
    for (Index r = 1; r < n; ++r) {
      bool differs = rank[sa[r]] != rank[sa[r - 1]] || second(sa[r]) != second(sa[r - 1]);
      if (differs) ++classes;
      tmp[sa[r]] = classes - 1;
    }
    rank.swap(tmp);
  }
  return sa;
}

// Kasai's algorithm.
std::vector<Index> build_lcp(std::span<const Rank> s, std::span<const Index> sa,
                             std::span<const Index> isa) {
  const Index n = static_cast<Index>(s.size());
  std::vector<Index> lcp(n, 0);
  Index h = 0;
  for (Index i = 0; i < n; ++i) {
    if (isa[i] == 0) {
      h = 0;
      continue;
    }
    Index j = sa[isa[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[isa[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace

RangeMin::RangeMin(std::span<const Index> values) {
  const std::size_t n = values.size();
  if (n == 0) return;
  levels_.emplace_back(values.begin(), values.end());
  for (std::size_t span = 2; span <= n; span <<= 1) {
    const auto& prev = levels_.back();
    std::vector<Index> next(n - span + 1);
    for (std::size_t i = 0; i + span <= n; ++i)
      next[i] = std::min(prev[i], prev[i + span / 2]);
    levels_.push_back(std::move(next));
  }
}

Index RangeMin::min_in(Index lo, Index hi) const {
  detail::require(lo >= 0 && lo <= hi &&
                      hi < static_cast<Index>(levels_[0].size()),
                  "range-min query out of bounds");
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  const int k = std::bit_width(width) - 1;
  const std::size_t span = std::size_t{1} << k;
  return std::min(levels_[k][static_cast<std::size_t>(lo)],
                  levels_[k][static_cast<std::size_t>(hi) - span + 1]);
}

SuffixIndex SuffixIndex::build(const IntText& text) {
  SuffixIndex idx;
  idx.n_ = text.size();
  idx.sa_ = build_sa(text.ranks());
  idx.isa_.assign(idx.n_, 0);
  for (Index r = 0; r < idx.n_; ++r) idx.isa_[idx.sa_[r]] = r;
  idx.lcp_ = build_lcp(text.ranks(), idx.sa_, idx.isa_);
  idx.rmq_ = RangeMin(idx.lcp_);
  return idx;
}

Index SuffixIndex::lcp_of_ranks(Index r, Index s) const {
  detail::require(r >= 0 && r < n_ && s >= 0 && s < n_, "rank out of range");
  if (r == s) return n_ - sa_[r];
  auto [lo, hi] = std::minmax(r, s);
  return rmq_.min_in(lo + 1, hi);
}

Index SuffixIndex::lce_forward(Index i, Index j) const {
  detail::require(i >= 0 && i <= n_ && j >= 0 && j <= n_,
                  "lce_forward position out of range");
  if (i == j) return n_ - i;
  if (i == n_ || j == n_) return 0;
  return lcp_of_ranks(isa_[i], isa_[j]);
}

DualIndex DualIndex::build(const IntText& text) {
  DualIndex d;
  d.n_ = text.size();
  d.fwd_ = SuffixIndex::build(text);
  d.rev_ = SuffixIndex::build(reverse_text(text));
  return d;
}

Index DualIndex::lce_backward(Index i, Index j) const {
  detail::require(i >= -1 && i < n_ && j >= -1 && j < n_,
                  "lce_backward position out of range");
  if (i < 0 || j < 0) return 0;
  if (i == j) return i + 1;
  return rev_.lce_forward(n_ - 1 - i, n_ - 1 - j);
}

}  // namespace mapcount
