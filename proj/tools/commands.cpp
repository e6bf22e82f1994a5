#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "mapcount/algo_average.hpp"
#include "mapcount/algo_heavypath.hpp"
#include "mapcount/algo_treewalk.hpp"

namespace mapcount::cli {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::Auto: return "auto";
    case Algo::Naive: return "naive";
    case Algo::Average: return "average";
    case Algo::Treewalk: return "treewalk";
    case Algo::Heavypath: return "heavypath";
  }
  return "?";
}

std::optional<Algo> algo_from_name(std::string_view name) {
  for (Algo a : {Algo::Auto, Algo::Naive, Algo::Average, Algo::Treewalk, Algo::Heavypath})
    if (name == algo_name(a)) return a;
  return std::nullopt;
}

bool average_applicable(Index n, Index m, Rank sigma) {
  if (sigma <= 1 || m < 3) return false;
  return static_cast<double>(m) >=
         3.0 * std::log(static_cast<double>(n)) / std::log(static_cast<double>(sigma)) + 3.0;
}

Algo pick_worst_case(Index n, Index m) {
  const double lg = std::log2(static_cast<double>(n));
  return static_cast<double>(m) > std::ceil(lg * lg) ? Algo::Heavypath : Algo::Treewalk;
}

MappabilityResult compute_record(const IntText& text, Index m, Algo algo,
                                 std::uint64_t budget_per_n, std::ostream& err,
                                 Algo& used) {
  const Index n = text.size();
  if (algo == Algo::Auto) {
    if (average_applicable(n, m, text.alphabet().size())) {
      const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
      const std::uint64_t budget =
          budget_per_n > cap / static_cast<std::uint64_t>(n)
              ? cap
              : budget_per_n * static_cast<std::uint64_t>(n);
      auto outcome = run_average_budgeted(text, m, budget);
      if (outcome.result) {
        used = Algo::Average;
        return std::move(*outcome.result);
      }
      err << "warning: average-case work budget exceeded after " << outcome.pair_events
          << " pair events, falling back to a worst-case algorithm\n";
    }
    algo = pick_worst_case(n, m);
  }
  used = algo;
  switch (algo) {
    case Algo::Naive: {
      MappabilityResult res;
      res.m = m;
      res.source_name = text.source_name();
      res.c0 = brute_force(text, m, 0);
      res.c1 = brute_force(text, m, 1);
      return res;
    }
    case Algo::Average:
      return run_average(text, m);
    case Algo::Treewalk:
      return run_treewalk(text, m);
    case Algo::Heavypath:
      if (text.alphabet().size() > 64)
        err << "warning: heavypath scans every sibling letter; alphabet size "
            << text.alphabet().size() << " will be slow\n";
      return run_heavypath(text, m);
    default:
      break;
  }
  throw std::logic_error("unreachable algorithm choice");
}

namespace {

std::string record_name(const IntText& text, std::size_t index) {
  if (!text.source_name().empty()) return text.source_name();
  return index == 0 ? "seq" : "seq" + std::to_string(index);
}

struct Track {
  std::string record;
  Index n;
  std::vector<Count> counts;
  std::string used;
};

void write_tsv(std::ostream& os, const Track& t, const RunConfig& cfg, CountMode mode) {
  os << "# record=" << t.record << " n=" << t.n << " m=" << cfg.m << " k=" << cfg.k
     << " mode=" << (cfg.k == 0 || mode == CountMode::Exact ? "exact" : "at-most")
     << " algorithm=" << t.used << "\n";
  for (std::size_t i = 0; i < t.counts.size(); ++i)
    os << i << "\t" << t.counts[i] << "\n";
}

void write_json(std::ostream& os, const std::vector<Track>& tracks,
                const RunConfig& cfg, CountMode mode) {
  nlohmann::json root = nlohmann::json::array();
  for (const Track& t : tracks) {
    nlohmann::json rec;
    rec["record"] = t.record;
    rec["n"] = t.n;
    rec["m"] = cfg.m;
    rec["k"] = cfg.k;
    rec["mode"] = cfg.k == 0 || mode == CountMode::Exact ? "exact" : "at-most";
    rec["algorithm"] = t.used;
    rec["counts"] = t.counts;
    root.push_back(std::move(rec));
  }
  os << root.dump(2) << "\n";
}

// Genome-browser convention: 1-based fixed-step track per record.
void write_wig(std::ostream& os, const Track& t) {
  os << "fixedStep chrom=" << t.record << " start=1 step=1\n";
  for (Count c : t.counts) os << c << "\n";
}

}  // namespace

int cmd_map(const RunConfig& cfg, std::ostream& err) {
  if (cfg.k != 0 && cfg.k != 1) {
    err << "error: k must be 0 or 1\n";
    return exit_usage;
  }
  if (cfg.k == 0 && cfg.mode == CountMode::AtMost) {
    err << "error: count mode at-most applies to k=1 only\n";
    return exit_usage;
  }
  const CountMode mode = cfg.mode.value_or(CountMode::AtMost);

  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) {
    err << "error: cannot open input file '" << cfg.input << "'\n";
    return exit_io;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  std::vector<IntText> records;
  try {
    records = ingest(buf.str(), cfg.format, cfg.case_fold);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_io;
  }

  std::vector<Track> tracks;
  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    const IntText& rec = records[idx];
    if (cfg.m < 1 || cfg.m >= rec.size()) {
      err << "error: record '" << record_name(rec, idx) << "' has length " << rec.size()
          << ", window length must satisfy 1 <= m < n\n";
      return exit_usage;
    }
    Track t;
    t.record = record_name(rec, idx);
    t.n = rec.size();
    if (cfg.k == 0) {
      if (cfg.algo == Algo::Naive) {
        t.counts = brute_force(rec, cfg.m, 0);
        t.used = "naive";
      } else {
        t.counts = zero_map(SuffixIndex::build(rec), cfg.m);
        t.used = "lcp-scan";
      }
    } else {
      Algo used = cfg.algo;
      MappabilityResult res = compute_record(rec, cfg.m, cfg.algo, cfg.budget_per_n, err, used);
      t.used = algo_name(used);
      t.counts = mode == CountMode::Exact ? std::move(res.c1) : at_most_one(res);
    }
    tracks.push_back(std::move(t));
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file '" << cfg.out << "'\n";
      return exit_io;
    }
    os = &file;
  }
  switch (cfg.out_format) {
    case OutFormat::Tsv:
      for (const Track& t : tracks) write_tsv(*os, t, cfg, mode);
      break;
    case OutFormat::Json:
      write_json(*os, tracks, cfg, mode);
      break;
    case OutFormat::Wig:
      for (const Track& t : tracks) write_wig(*os, t);
      break;
  }
  os->flush();
  if (!*os) {
    err << "error: writing output failed\n";
    return exit_io;
  }
  return exit_ok;
}

IntText random_text(Index n, Rank sigma, std::uint64_t seed) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(sigma)};
  std::mt19937_64 rng(seq);
  std::vector<Rank> ranks(static_cast<std::size_t>(n));
  for (auto& r : ranks) r = static_cast<Rank>(rng() % static_cast<std::uint64_t>(sigma));
  return IntText(std::move(ranks), Alphabet::of_size(sigma));
}

bool counts_equal(std::span<const Count> a, std::span<const Count> b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

void dump_divergence(std::ostream& err, const IntText& text, Index m,
                     const std::string& what, std::span<const Count> expected,
                     std::span<const Count> actual) {
  err << "divergence: " << what << " (n=" << text.size() << " m=" << m << ")\n";
  err << "  text: " << text.to_bytes() << "\n";
  auto dump = [&](const char* label, std::span<const Count> v) {
    err << "  " << label << ":";
    for (Count c : v) err << " " << c;
    err << "\n";
  };
  dump("expected", expected);
  dump("actual  ", actual);
}

int cmd_validate(Index n, Rank sigma, const std::vector<Index>& ms, int trials,
                 std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (n < 2 || sigma < 1 || trials < 0) {
    err << "error: validate needs n >= 2, sigma >= 1, trials >= 0\n";
    return exit_usage;
  }
  for (Index m : ms)
    if (m < 1 || m >= n) {
      err << "error: every m must satisfy 1 <= m < n\n";
      return exit_usage;
    }

  for (int trial = 0; trial < trials; ++trial) {
    const IntText text = random_text(n, sigma, seed + static_cast<std::uint64_t>(trial));
    const SuffixIndex idx = SuffixIndex::build(text);
    for (Index m : ms) {
      const auto oracle0 = brute_force(text, m, 0);
      const auto oracle1 = brute_force(text, m, 1);

      const auto zero = zero_map(idx, m);
      if (!counts_equal(zero, oracle0)) {
        dump_divergence(err, text, m, "zero_map vs brute-force k=0", oracle0, zero);
        return exit_divergence;
      }
      struct Candidate {
        const char* name;
        MappabilityResult result;
      };
      std::vector<Candidate> candidates;
      candidates.push_back({"treewalk", run_treewalk(text, m)});
      candidates.push_back({"heavypath", run_heavypath(text, m)});
      if (m >= 3) candidates.push_back({"average", run_average(text, m)});
      for (const Candidate& c : candidates) {
        if (!counts_equal(c.result.c0, oracle0)) {
          dump_divergence(err, text, m, std::string(c.name) + " c0 vs brute-force k=0",
                          oracle0, c.result.c0);
          return exit_divergence;
        }
        if (!counts_equal(c.result.c1, oracle1)) {
          dump_divergence(err, text, m, std::string(c.name) + " c1 vs brute-force k=1",
                          oracle1, c.result.c1);
          return exit_divergence;
        }
      }
    }
  }
  out << "OK: " << trials << " trials, n=" << n << ", sigma=" << sigma << ", "
      << ms.size() << " window lengths, all algorithms agree\n";
  return exit_ok;
}

int cmd_bench(const std::vector<Index>& sizes, const std::vector<Index>& ms,
              const std::vector<Algo>& algos, bool algos_forced, std::uint64_t seed,
              std::ostream& out, std::ostream& err) {
  for (Index n : sizes)
    if (n < 2) {
      err << "error: bench sizes must be >= 2\n";
      return exit_usage;
    }
  constexpr Rank sigma = 4;
  out << "# algorithm\tn\tm\tseconds\n";
  for (Index n : sizes) {
    const IntText text = random_text(n, sigma, seed);
    for (Index m : ms) {
      if (m < 1 || m >= n) continue;
      for (Algo a : algos) {
        if (a == Algo::Average && !algos_forced && !average_applicable(n, m, sigma))
          continue;
        const auto start = std::chrono::steady_clock::now();
        Algo used = a;
        compute_record(text, m, a, std::numeric_limits<std::uint64_t>::max() / 2, err, used);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        out << algo_name(used) << "\t" << n << "\t" << m << "\t" << elapsed.count()
            << "\n";
      }
    }
  }
  return exit_ok;
}

}  // namespace mapcount::cli
