#include "mapcount/mappability.hpp"

#include <string>

namespace mapcount {

std::vector<Count> at_most_one(const MappabilityResult& r) {
  detail::require(r.c0.size() == r.c1.size(), "c0/c1 length mismatch");
  std::vector<Count> out(r.c0.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.c0[i] + r.c1[i];
  return out;
}

std::vector<Count> ScaledCounter::finalize() const {
  std::vector<Count> out(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] % scale != 0)
      throw std::logic_error("fractional residue at position " + std::to_string(i));
    out[i] = cells_[i] / scale;
  }
  return out;
}

std::vector<Count> brute_force(const IntText& t, Index m, Index k) {
  const Index n = t.size();
  detail::require(m >= 1 && m <= n, "window length out of range");
  detail::require(k >= 0, "distance must be nonnegative");
  const Index windows = n - m + 1;
  std::vector<Count> counts(static_cast<std::size_t>(windows), 0);
  auto ranks = t.ranks();
  for (Index i = 0; i < windows; ++i) {
    for (Index j = i + 1; j < windows; ++j) {
      Index d = 0;
      for (Index off = 0; off < m; ++off) {
        if (ranks[i + off] != ranks[j + off] && ++d > k) break;
      }
      if (d == k) {
        ++counts[i];
        ++counts[j];
      }
    }
  }
  return counts;
}

std::vector<Count> zero_map(const SuffixIndex& idx, Index m) {
  const Index n = idx.size();
  detail::require(m >= 1 && m <= n, "window length out of range");
  auto sa = idx.sa();
  auto lcp = idx.lcp();
  std::vector<Count> counts(static_cast<std::size_t>(n - m + 1), 0);
  // Walk ranks once; group windows whose suffixes keep lcp >= m.
  std::vector<Index> group;
  Index chain_min = 0;  // min lcp since the previous window rank
  auto flush = [&]() {
    for (Index pos : group) counts[pos] = static_cast<Count>(group.size()) - 1;
    group.clear();
  };
  for (Index r = 0; r < n; ++r) {
    chain_min = group.empty() ? 0 : std::min(chain_min, lcp[r]);
    if (sa[r] > n - m) continue;  // suffix too short for a window
    if (!group.empty() && chain_min < m) flush();
    group.push_back(sa[r]);
    chain_min = n;  // reset: next gap starts after this rank
  }
  flush();
  return counts;
}

}  // namespace mapcount
