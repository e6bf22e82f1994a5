#pragma once

#include <vector>

#include "mapcount/text.hpp"

namespace mapcount {

/// Range-minimum over a fixed array via a sparse table.
/// O(n log n) space instead of the O(n) achievable with more machinery;
/// queries are a pair of table reads.
class RangeMin {
public:
  RangeMin() = default;
  explicit RangeMin(std::span<const Index> values);

  /// Minimum of values[lo..hi], inclusive; requires lo <= hi.
  Index min_in(Index lo, Index hi) const;

private:
  std::vector<std::vector<Index>> levels_;
};

/// Suffix array, inverse, LCP array and an RMQ structure over one text.
/// Immutable after build; all queries are read-only.
class SuffixIndex {
public:
  static SuffixIndex build(const IntText& text);

  Index size() const { return n_; }
  std::span<const Index> sa() const { return sa_; }
  std::span<const Index> isa() const { return isa_; }
  std::span<const Index> lcp() const { return lcp_; }

  /// lcp of the suffixes ranked r and s (r != s allowed in any order).
  Index lcp_of_ranks(Index r, Index s) const;

  /// Longest common prefix of suffixes starting at i and j.
  /// Positions equal to n denote the empty suffix.
  Index lce_forward(Index i, Index j) const;

private:
  Index n_ = 0;
  std::vector<Index> sa_, isa_, lcp_;
  RangeMin rmq_;
};

/// Indexes of a text and its reverse; adds backward (longest common
/// suffix of two prefixes) extension queries.
class DualIndex {
public:
  static DualIndex build(const IntText& text);

  Index size() const { return n_; }
  const SuffixIndex& forward() const { return fwd_; }
  const SuffixIndex& reversed() const { return rev_; }

  Index lce_forward(Index i, Index j) const { return fwd_.lce_forward(i, j); }

  /// Longest common suffix of the prefixes x[0..i] and x[0..j];
  /// i or j equal to -1 denotes the empty prefix.
  Index lce_backward(Index i, Index j) const;

private:
  Index n_ = 0;
  SuffixIndex fwd_, rev_;
};

}  // namespace mapcount
