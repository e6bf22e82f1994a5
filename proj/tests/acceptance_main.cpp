// Acceptance suite: runs every release criterion and prints one line per
// criterion. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <vector>

#include "mapcount/algo_average.hpp"
#include "mapcount/algo_heavypath.hpp"
#include "mapcount/algo_treewalk.hpp"
#include "test_support.hpp"

using namespace mapcount;
using namespace testsupport;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  const char* name;
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    passed = false;
    if (detail.empty()) detail = why;
  }
};

bool equal(const std::vector<Count>& a, const std::vector<Count>& b) {
  return a == b;
}

// ---- criterion 1: golden example ------------------------------------------

void golden_example(Criterion& c) {
  const auto start = Clock::now();
  IntText t = text_of("aabaaabbbb");
  const std::vector<Count> zero{1, 0, 0, 0, 1, 0, 1, 1};
  const std::vector<Count> at_most{3, 2, 1, 4, 3, 5, 2, 2};

  MappabilityResult naive;
  naive.m = 3;
  naive.c0 = brute_force(t, 3, 0);
  naive.c1 = brute_force(t, 3, 1);
  const MappabilityResult results[] = {std::move(naive), run_average(t, 3),
                                       run_treewalk(t, 3), run_heavypath(t, 3)};
  const char* names[] = {"naive", "average", "treewalk", "heavypath"};
  for (int a = 0; a < 4; ++a) {
    if (!equal(results[a].c0, zero))
      c.fail(std::string(names[a]) + " 0-mappability mismatch");
    if (!equal(at_most_one(results[a]), at_most))
      c.fail(std::string(names[a]) + " at-most-1 mismatch");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) c.fail("took " + std::to_string(elapsed) + " s, limit 1 s");
  c.detail = c.passed ? "4 algorithms, " + std::to_string(elapsed) + " s" : c.detail;
}

// ---- criteria 2-4: oracle grid ---------------------------------------------

struct GridOutcome {
  long instances = 0;
  long average_runs = 0;
  bool residue_free = true;
  bool parity_ok = true;
  std::string residue_detail, parity_detail;
};

void oracle_grid(Criterion& c, GridOutcome& grid) {
  const auto start = Clock::now();
  const Rank sigmas[] = {2, 4, 20};
  const Index sizes[] = {50, 200, 1000};
  const int trials = 200;

  for (Rank sigma : sigmas) {
    for (Index n : sizes) {
      const Index ms[] = {2, 3, 5, 17, n / 2};
      for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t seed =
            1000003ull * static_cast<std::uint64_t>(sigma) +
            1009ull * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(trial);
        IntText t = random_text(n, sigma, seed);
        SuffixIndex idx = SuffixIndex::build(t);
        for (Index m : ms) {
          if (m >= n) continue;
          ++grid.instances;
          const auto oracle0 = brute_force(t, m, 0);
          const auto oracle1 = brute_force(t, m, 1);
          auto describe = [&](const char* what) {
            return std::string(what) + " diverged at sigma=" + std::to_string(sigma) +
                   " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   " trial=" + std::to_string(trial);
          };

          if (!equal(zero_map(idx, m), oracle0)) c.fail(describe("zero_map"));

          std::vector<std::pair<const char*, MappabilityResult>> runs;
          runs.emplace_back("treewalk", run_treewalk(t, m));
          runs.emplace_back("heavypath", run_heavypath(t, m));
          if (m >= 3) {
            try {
              runs.emplace_back("average", run_average(t, m));
              ++grid.average_runs;
            } catch (const std::logic_error& e) {
              grid.residue_free = false;
              grid.residue_detail = describe("average finalize") + ": " + e.what();
            }
          }
          for (const auto& [name, res] : runs) {
            if (!equal(res.c1, oracle1)) c.fail(describe(name));
            const Count sum0 = std::accumulate(res.c0.begin(), res.c0.end(), Count{0});
            const Count sum1 = std::accumulate(res.c1.begin(), res.c1.end(), Count{0});
            if (sum0 % 2 != 0 || sum1 % 2 != 0) {
              grid.parity_ok = false;
              grid.parity_detail = describe(name) + " (odd pair sum)";
            }
          }
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 600.0) c.fail("took " + std::to_string(elapsed) + " s, limit 600 s");
  if (c.passed)
    c.detail = std::to_string(grid.instances) + " instances, " +
               std::to_string(elapsed) + " s";
}

// ---- criterion 5: structure suite ------------------------------------------

void structure_suite(Criterion& c) {
  std::mt19937_64 rng(424243);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 299);
    const Rank sigma = 1 + static_cast<Rank>(rng() % 4);
    IntText t = random_text(n, sigma, rng());
    auto describe = [&](const char* what) {
      return std::string(what) + " mismatch at trial " + std::to_string(trial) +
             " (n=" + std::to_string(n) + ", sigma=" + std::to_string(sigma) + ")";
    };

    DualIndex dual = DualIndex::build(t);
    const SuffixIndex& idx = dual.forward();
    auto sa = naive_sa(t);
    if (!std::ranges::equal(idx.sa(), sa)) {
      c.fail(describe("suffix array"));
      return;
    }
    if (!std::ranges::equal(idx.lcp(), naive_lcp(t, sa))) {
      c.fail(describe("lcp array"));
      return;
    }
    for (int probe = 0; probe < 300; ++probe) {
      Index i = static_cast<Index>(rng() % (n + 1));
      Index j = static_cast<Index>(rng() % (n + 1));
      if (dual.lce_forward(i, j) != naive_lce_forward(t, i, j)) {
        c.fail(describe("lce_forward"));
        return;
      }
      Index bi = static_cast<Index>(rng() % (n + 1)) - 1;
      Index bj = static_cast<Index>(rng() % (n + 1)) - 1;
      Index expect = (bi < 0 || bj < 0) ? 0 : naive_lce_backward(t, bi, bj);
      if (dual.lce_backward(bi, bj) != expect) {
        c.fail(describe("lce_backward"));
        return;
      }
    }

    SuffixTree tree = SuffixTree::build(t, idx);
    const auto& heavy = tree.heavy();
    for (Index v = 0; v < tree.node_count(); ++v)
      for (const auto& ch : tree.children(v))
        if (ch.node != heavy.heavy_child[v] &&
            2 * tree.leaf_weight(ch.node) > tree.leaf_weight(v)) {
          c.fail(describe("heavy decomposition halving"));
          return;
        }

    for (int probe = 0; probe < 200; ++probe) {
      Index i = static_cast<Index>(rng() % n);
      Index len = 1 + static_cast<Index>(rng() % (n - i));
      const auto factor = window(t, i, len);
      auto u = walk(tree, factor);
      if (!u || tree.label(*u) != factor) {
        c.fail(describe("child walk"));
        return;
      }
      if (tree.level_ancestor(tree.ref(tree.terminal_node_of(i)), len) != *u) {
        c.fail(describe("level_ancestor"));
        return;
      }
      if (len >= 2 && tree.label(tree.ascend(*u)) != window(t, i, len - 1)) {
        c.fail(describe("ascend"));
        return;
      }
      Index drop = static_cast<Index>(rng() % (len + 1));
      if (tree.label(tree.suf_node(*u, drop)) != window(t, i + drop, len - drop)) {
        c.fail(describe("suf_node"));
        return;
      }
      for (Rank letter = 0; letter < sigma; ++letter) {
        auto extended = factor;
        extended.push_back(letter);
        auto vchild = tree.child(*u, letter);
        if (vchild.has_value() != (naive_occurrences(t, extended) > 0)) {
          c.fail(describe("child presence"));
          return;
        }
      }
      Index j = static_cast<Index>(rng() % n);
      Index len2 = 1 + static_cast<Index>(rng() % (n - j));
      auto v = walk(tree, window(t, j, len2));
      auto joined = factor;
      auto second = window(t, j, len2);
      joined.insert(joined.end(), second.begin(), second.end());
      const Index occ = naive_occurrences(t, joined);
      auto w = tree.concat_nodes(*u, *v);
      if (w.has_value() != (occ > 0) ||
          (w && (w->sa_hi - w->sa_lo + 1 != occ || tree.label(w->node) != joined))) {
        c.fail(describe("concat_nodes"));
        return;
      }
    }
  }
  c.detail = "100 texts";
}

// ---- criterion 6: asymptotic sanity ----------------------------------------

void asymptotic_sanity(Criterion& c) {
  // (a) the average-case algorithm stays linear-ish on a large random text
  {
    const Index n = 200000;
    const Index m = 64;
    IntText t = random_text(n, 4, 202600);
    const auto start = Clock::now();
    AverageOutcome out =
        run_average_budgeted(t, m, 64ull * static_cast<std::uint64_t>(n));
    const double elapsed = seconds_since(start);
    if (!out.result.has_value())
      c.fail("average exceeded its event budget (" +
             std::to_string(out.pair_events) + " events)");
    if (elapsed >= 30.0)
      c.fail("average took " + std::to_string(elapsed) + " s, limit 30 s");
    c.detail = "average " + std::to_string(elapsed) + " s, " +
               std::to_string(out.pair_events) + " events";
  }
  // (b) the worst-case crossover: heavypath is insensitive to m, treewalk is not
  {
    const Index n = 50000;
    IntText t = random_text(n, 4, 515253);
    auto timed = [&](auto&& fn) {  // best of two, to shave scheduling noise
      double best = 1e100;
      for (int rep = 0; rep < 2; ++rep) {
        const auto start = Clock::now();
        fn();
        best = std::min(best, seconds_since(start));
      }
      return best;
    };
    const double hp64 = timed([&] { run_heavypath(t, 64); });
    const double hp1024 = timed([&] { run_heavypath(t, 1024); });
    const double tw64 = timed([&] { run_treewalk(t, 64); });
    const double tw1024 = timed([&] { run_treewalk(t, 1024); });
    const double hp_ratio = hp1024 / hp64;
    const double tw_ratio = tw1024 / tw64;
    if (hp_ratio >= 2.5)
      c.fail("heavypath grew " + std::to_string(hp_ratio) + "x, limit 2.5x");
    if (tw_ratio <= 8.0)
      c.fail("treewalk grew only " + std::to_string(tw_ratio) + "x, needs > 8x");
    c.detail += "; heavypath x" + std::to_string(hp_ratio) + ", treewalk x" +
                std::to_string(tw_ratio);
  }
}

void report(const Criterion& c, int number) {
  std::printf("criterion %d [%s]: %s%s%s\n", number, c.name,
              c.passed ? "PASS" : "FAIL", c.detail.empty() ? "" : " — ",
              c.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  Criterion c1{"golden example"};
  golden_example(c1);
  report(c1, 1);

  Criterion c2{"oracle equivalence"};
  GridOutcome grid;
  oracle_grid(c2, grid);
  report(c2, 2);

  Criterion c3{"fractional-counter integrality"};
  if (!grid.residue_free) c3.fail(grid.residue_detail);
  if (grid.average_runs == 0) c3.fail("no average runs were exercised");
  if (c3.passed)
    c3.detail = std::to_string(grid.average_runs) + " finalizations divisible by 2520";
  report(c3, 3);

  Criterion c4{"pair-sum parity"};
  if (!grid.parity_ok) c4.fail(grid.parity_detail);
  if (c4.passed)
    c4.detail = std::to_string(grid.instances) + " instances with even sums";
  report(c4, 4);

  Criterion c5{"structure suite"};
  structure_suite(c5);
  report(c5, 5);

  Criterion c6{"asymptotic sanity"};
  asymptotic_sanity(c6);
  report(c6, 6);

  const int failures = !c1.passed + !c2.passed + !c3.passed + !c4.passed +
                       !c5.passed + !c6.passed;
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
