#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mapcount/mappability.hpp"

namespace mapcount::cli {

enum class Algo { Auto, Naive, Average, Treewalk, Heavypath };
enum class CountMode { Exact, AtMost };
enum class OutFormat { Tsv, Json, Wig };

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;
constexpr int exit_divergence = 4;

struct RunConfig {
  std::string input;
  InputFormat format = InputFormat::Raw;
  bool case_fold = false;
  Index m = 0;
  int k = 1;
  std::optional<CountMode> mode;  // default depends on k
  Algo algo = Algo::Auto;
  std::string out;                // empty: stdout
  OutFormat out_format = OutFormat::Tsv;
  std::uint64_t seed = 0;
  std::uint64_t budget_per_n = 64;  // auto-mode event budget multiplier
};

const char* algo_name(Algo a);
std::optional<Algo> algo_from_name(std::string_view name);

/// Window-length threshold (3 log n / log sigma + 3) above which the
/// block-filtering algorithm is expected to stay linear on random text.
bool average_applicable(Index n, Index m, Rank sigma);
/// Worst-case choice mirroring min{mn, n log^2 n}.
Algo pick_worst_case(Index n, Index m);

/// Computes one record with a forced algorithm, or picks one in auto
/// mode (budgeted average first when the random-text threshold is met,
/// with a warning on fallback). `used` reports the algorithm that
/// produced the result.
MappabilityResult compute_record(const IntText& text, Index m, Algo algo,
                                 std::uint64_t budget_per_n, std::ostream& err,
                                 Algo& used);

int cmd_map(const RunConfig& cfg, std::ostream& err);

int cmd_validate(Index n, Rank sigma, const std::vector<Index>& ms, int trials,
                 std::uint64_t seed, std::ostream& out, std::ostream& err);

int cmd_bench(const std::vector<Index>& sizes, const std::vector<Index>& ms,
              const std::vector<Algo>& algos, bool algos_forced, std::uint64_t seed,
              std::ostream& out, std::ostream& err);

IntText random_text(Index n, Rank sigma, std::uint64_t seed);

/// Divergence reporting, exposed so the harness can be exercised directly.
bool counts_equal(std::span<const Count> a, std::span<const Count> b);
void dump_divergence(std::ostream& err, const IntText& text, Index m,
                     const std::string& what, std::span<const Count> expected,
                     std::span<const Count> actual);

}  // namespace mapcount::cli
