#pragma once

#include <functional>
#include <optional>

#include "mapcount/mappability.hpp"

namespace mapcount {

/// Aligned block layout: blocks of length floor(m/3) start at multiples
/// of the block length; the short tail of the text is not a block.
struct BlockPlan {
  Index block_len = 0;   // L
  Index block_count = 0; // floor(n / L)

  bool is_block_start(Index pos, Index n) const {
    return pos % block_len == 0 && pos + block_len <= n;
  }
};

/// Requires 3 <= m <= n (callers fall back to a worst-case algorithm
/// for shorter windows).
BlockPlan plan_blocks(Index n, Index m);

/// Emits every maximal run of SA ranks whose neighbouring lcp is at least
/// L, converted to text positions (SA-rank order), provided the run has
/// at least two members and contains a block start.
void lcp_groups(const SuffixIndex& idx, Index L, const BlockPlan& plan,
                const std::function<void(std::span<const Index>)>& emit);

/// Mismatch structure around the shared block at (i, j): first and second
/// mismatch positions going left from the block start and right from the
/// block end. Out-of-text sentinels: left positions may be -1 or below,
/// right positions n or above.
struct Extension {
  Index i = 0, j = 0;
  Index l1 = 0, l1_other = 0, l2 = 0;
  Index r1 = 0, r1_other = 0, r2 = 0;
};

Extension extend_pair(const DualIndex& d, Index i, Index j, Index m, Index L);

struct WindowPair {
  Index p, p_other;
  Index mu;  // absolute mismatch position inside window p
};

/// All windows around the (i, j) block match that pair with Hamming
/// distance exactly one: windows covering the left mismatch and ending
/// before the right one, and symmetrically for the right mismatch.
void enumerate_windows(const Extension& e, Index m, Index L, Index n,
                       std::vector<WindowPair>& out);

/// Number of discovery events for the pair (p, p'): aligned full blocks
/// inside either window that avoid its mismatch position.
int t_value(Index p, Index p_other, Index mu_p, Index mu_p_other, Index m, Index L);

struct AverageOutcome {
  std::optional<MappabilityResult> result;  // empty when the budget ran out
  std::uint64_t pair_events = 0;
};

/// The block-filtering algorithm; linear on average for random texts when
/// m is large enough, quadratic in adversarial cases. Stops early and
/// returns an empty result once more than max_pair_events (i, j) pairs
/// have been processed.
AverageOutcome run_average_budgeted(const IntText& t, Index m,
                                    std::uint64_t max_pair_events);

MappabilityResult run_average(const IntText& t, Index m);

}  // namespace mapcount
