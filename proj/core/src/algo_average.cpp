#include "mapcount/algo_average.hpp"

#include <algorithm>

namespace mapcount {

BlockPlan plan_blocks(Index n, Index m) {
  detail::require(m >= 3, "average algorithm requires m >= 3");
  detail::require(m <= n, "window length out of range");
  BlockPlan plan;
  plan.block_len = m / 3;
  plan.block_count = n / plan.block_len;
  return plan;
}

void lcp_groups(const SuffixIndex& idx, Index L, const BlockPlan& plan,
                const std::function<void(std::span<const Index>)>& emit) {
  const Index n = idx.size();
  auto sa = idx.sa();
  auto lcp = idx.lcp();
  std::vector<Index> run;
  bool has_block = false;
  auto flush = [&]() {
    if (run.size() >= 2 && has_block) emit(run);
    run.clear();
    has_block = false;
  };
  for (Index r = 0; r < n; ++r) {
    if (!run.empty() && lcp[r] < L) flush();
    run.push_back(sa[r]);
    has_block = has_block || plan.is_block_start(sa[r], n);
  }
  flush();
}

Extension extend_pair(const DualIndex& d, Index i, Index j, Index m, Index L) {
  (void)m;
  Extension e;
  e.i = i;
  e.j = j;
  const Index n = d.size();
  const Index a = d.lce_backward(i - 1, j - 1);
  e.l1 = i - 1 - a;
  e.l1_other = j - 1 - a;
  Index a2 = 0;
  if (e.l1 >= 0 && e.l1_other >= 0) a2 = d.lce_backward(e.l1 - 1, e.l1_other - 1);
  e.l2 = e.l1 - 1 - a2;
  const Index c = d.lce_forward(i + L, j + L);
  e.r1 = i + L + c;
  e.r1_other = j + L + c;
  Index c2 = 0;
  if (e.r1 <= n - 1 && e.r1_other <= n - 1) c2 = d.lce_forward(e.r1 + 1, e.r1_other + 1);
  e.r2 = e.r1 + 1 + c2;
  return e;
}

void enumerate_windows(const Extension& e, Index m, Index L, Index n,
                       std::vector<WindowPair>& out) {
  const Index shift = e.j - e.i;
  // windows whose single mismatch is the left one
  if (e.l1 >= 0 && e.l1_other >= 0) {
    const Index lo = std::max({e.l2 + 1, e.i + L - m, e.i - e.j, Index{0}});
    const Index hi = std::min(e.l1, e.r1 - m);
    for (Index p = lo; p <= hi; ++p)
      out.push_back(WindowPair{p, p + shift, e.l1});
  }
  // windows whose single mismatch is the right one
  if (e.r1 <= n - 1 && e.r1_other <= n - 1) {
    const Index lo = std::max({e.l1 + 1, e.r1 - m + 1, e.i - e.j, Index{0}});
    const Index hi = std::min(e.i, e.r2 - m);
    for (Index q = lo; q <= hi; ++q)
      out.push_back(WindowPair{q, q + shift, e.r1});
  }
}

namespace {

// Aligned full blocks inside the window at w that do not contain mu.
inline int blocks_avoiding(Index w, Index mu, Index m, Index L) {
  const Index first = ((w + L - 1) / L) * L;
  const Index last = ((w + m - L) / L) * L;
  if (last < first) return 0;
  int count = static_cast<int>((last - first) / L + 1);
  const Index mu_block = (mu / L) * L;
  if (mu_block >= first && mu_block <= last) --count;
  return count;
}

}  // namespace

int t_value(Index p, Index p_other, Index mu_p, Index mu_p_other, Index m, Index L) {
  const int t = blocks_avoiding(p, mu_p, m, L) + blocks_avoiding(p_other, mu_p_other, m, L);
  detail::internal_check(t >= 1, "window pair discovered zero times");
  return t;
}

AverageOutcome run_average_budgeted(const IntText& t, Index m,
                                    std::uint64_t max_pair_events) {
  const Index n = t.size();
  const BlockPlan plan = plan_blocks(n, m);
  const Index L = plan.block_len;
  const DualIndex dual = DualIndex::build(t);

  AverageOutcome outcome;
  ScaledCounter counter(static_cast<std::size_t>(n - m + 1));
  std::vector<WindowPair> pairs;
  bool exhausted = false;
  lcp_groups(dual.forward(), L, plan, [&](std::span<const Index> group) {
    if (exhausted) return;
    for (Index i : group) {
      if (!plan.is_block_start(i, n)) continue;
      for (Index j : group) {
        if (j == i) continue;
        if (++outcome.pair_events > max_pair_events) {
          exhausted = true;
          return;
        }
        const Extension e = extend_pair(dual, i, j, m, L);
        pairs.clear();
        enumerate_windows(e, m, L, n, pairs);
        for (const WindowPair& wp : pairs) {
          const Index mu_other = wp.mu - wp.p + wp.p_other;
          const int tv = t_value(wp.p, wp.p_other, wp.mu, mu_other, m, L);
          counter.add_fraction(static_cast<std::size_t>(wp.p), tv);
          counter.add_fraction(static_cast<std::size_t>(wp.p_other), tv);
        }
      }
    }
  });
  if (exhausted) return outcome;

  MappabilityResult res;
  res.m = m;
  res.source_name = t.source_name();
  res.c0 = zero_map(dual.forward(), m);
  res.c1 = counter.finalize();
  outcome.result = std::move(res);
  return outcome;
}

MappabilityResult run_average(const IntText& t, Index m) {
  auto outcome = run_average_budgeted(t, m, std::numeric_limits<std::uint64_t>::max());
  detail::internal_check(outcome.result.has_value(), "unbounded run cannot exhaust budget");
  return std::move(*outcome.result);
}

}  // namespace mapcount
