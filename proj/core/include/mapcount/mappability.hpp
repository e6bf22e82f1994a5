#pragma once

#include <cstdint>
#include <vector>

#include "mapcount/suffix_index.hpp"

namespace mapcount {

using Count = std::int64_t;

/// Per-window counts for one record: c0[i] is the number of other
/// identical length-m windows, c1[i] the number at Hamming distance
/// exactly one.
struct MappabilityResult {
  Index m = 0;
  std::vector<Count> c0;
  std::vector<Count> c1;
  std::string source_name;
};

/// Element-wise c0 + c1, the at-most-one-mismatch counts.
std::vector<Count> at_most_one(const MappabilityResult& r);

/// Accumulates fractional 1/t increments exactly, as integers scaled by
/// lcm(1..10). A finished run must leave every cell divisible by the
/// scale; finalize() checks that.
class ScaledCounter {
public:
  static constexpr Count scale = 2520;  // lcm(1..10)

  explicit ScaledCounter(std::size_t cells) : cells_(cells, 0) {}

  std::size_t size() const { return cells_.size(); }
  Count raw(std::size_t pos) const { return cells_[pos]; }

  void add_fraction(std::size_t pos, int t) {
    detail::internal_check(t >= 1 && t <= 10, "fraction denominator outside [1,10]");
    cells_[pos] += scale / t;
  }

  /// Divides every cell by the scale; throws "fractional residue" if an
  /// algorithm failed to contribute whole pairs.
  std::vector<Count> finalize() const;

private:
  std::vector<Count> cells_;
};

/// O((n-m+1)^2 m) reference: counts[i] = #{j != i : d_H(window i, window j) = k}.
std::vector<Count> brute_force(const IntText& t, Index m, Index k);

/// Distance-0 counts from one scan of the SA in rank order: maximal runs
/// with neighbouring lcp >= m are groups of identical windows.
std::vector<Count> zero_map(const SuffixIndex& idx, Index m);

}  // namespace mapcount
