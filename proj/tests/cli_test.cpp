#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "mapcount/text.hpp"

using namespace mapcount;
using namespace mapcount::cli;

namespace {

namespace fs = std::filesystem;

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ostringstream ss;
  ss << std::ifstream(p, std::ios::binary).rdbuf();
  return ss.str();
}

std::string data_rows(const std::string& tsv) {
  std::istringstream in(tsv);
  std::string line, out;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out += line + "\n";
  return out;
}

RunConfig base_config(const fs::path& input, const fs::path& output) {
  RunConfig cfg;
  cfg.input = input.string();
  cfg.out = output.string();
  cfg.m = 3;
  return cfg;
}

}  // namespace

TEST_CASE("map emits the worked example as tsv") {
  auto in = write_temp("cli_golden.txt", "aabaaabbbb");
  auto out = fs::temp_directory_path() / "cli_golden.tsv";
  RunConfig cfg = base_config(in, out);
  std::ostringstream err;
  REQUIRE(cmd_map(cfg, err) == exit_ok);
  const std::string tsv = slurp(out);
  CHECK(tsv.find("# record=seq n=10 m=3 k=1 mode=at-most") != std::string::npos);
  CHECK(data_rows(tsv) == "0\t3\n1\t2\n2\t1\n3\t4\n4\t3\n5\t5\n6\t2\n7\t2\n");
}

TEST_CASE("auto picks the same counts as every forced algorithm") {
  auto in = write_temp("cli_auto.txt", "aabaaabbbb");
  std::string reference;
  for (Algo a : {Algo::Auto, Algo::Naive, Algo::Average, Algo::Treewalk, Algo::Heavypath}) {
    auto out = fs::temp_directory_path() / "cli_auto.tsv";
    RunConfig cfg = base_config(in, out);
    cfg.algo = a;
    std::ostringstream err;
    REQUIRE(cmd_map(cfg, err) == exit_ok);
    const std::string rows = data_rows(slurp(out));
    if (reference.empty())
      reference = rows;
    else
      CHECK(rows == reference);
  }
}

TEST_CASE("map usage and io errors") {
  auto in = write_temp("cli_err.txt", "aabaaabbbb");
  std::ostringstream err;

  RunConfig cfg = base_config(in, fs::temp_directory_path() / "cli_err.tsv");
  cfg.m = 10;  // m == n
  CHECK(cmd_map(cfg, err) == exit_usage);

  cfg = base_config(fs::temp_directory_path() / "does_not_exist_xyz", "");
  cfg.out.clear();
  CHECK(cmd_map(cfg, err) == exit_io);

  auto bad = write_temp("cli_bad.fa", "ACGT\n>r1\nACGT\n");
  cfg = base_config(bad, fs::temp_directory_path() / "cli_bad.tsv");
  cfg.format = InputFormat::Fasta;
  CHECK(cmd_map(cfg, err) == exit_io);
  CHECK(err.str().find("line 1") != std::string::npos);

  cfg = base_config(in, fs::temp_directory_path() / "cli_err.tsv");
  cfg.k = 0;
  cfg.mode = CountMode::AtMost;
  CHECK(cmd_map(cfg, err) == exit_usage);
}

TEST_CASE("k=0 reports identical-window counts") {
  auto in = write_temp("cli_k0.txt", "aaaa");
  auto out = fs::temp_directory_path() / "cli_k0.tsv";
  RunConfig cfg = base_config(in, out);
  cfg.m = 2;
  cfg.k = 0;
  std::ostringstream err;
  REQUIRE(cmd_map(cfg, err) == exit_ok);
  CHECK(data_rows(slurp(out)) == "0\t2\n1\t2\n2\t2\n");
}

TEST_CASE("fasta records yield one track each") {
  auto in = write_temp("cli_multi.fa", ">r1\nacgtacgt\n>r2\naabaaabbbb\n");
  auto out = fs::temp_directory_path() / "cli_multi.tsv";
  RunConfig cfg = base_config(in, out);
  cfg.format = InputFormat::Fasta;
  std::ostringstream err;
  REQUIRE(cmd_map(cfg, err) == exit_ok);
  const std::string tsv = slurp(out);
  CHECK(tsv.find("# record=r1") != std::string::npos);
  CHECK(tsv.find("# record=r2") != std::string::npos);
}

TEST_CASE("json output carries the counts") {
  auto in = write_temp("cli_json.txt", "aabaaabbbb");
  auto out = fs::temp_directory_path() / "cli_json.json";
  RunConfig cfg = base_config(in, out);
  cfg.out_format = OutFormat::Json;
  std::ostringstream err;
  REQUIRE(cmd_map(cfg, err) == exit_ok);
  auto doc = nlohmann::json::parse(slurp(out));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["record"] == "seq");
  CHECK(doc[0]["counts"] == std::vector<Count>{3, 2, 1, 4, 3, 5, 2, 2});
}

TEST_CASE("wig output is one-based fixed step") {
  auto in = write_temp("cli_wig.txt", "aabaaabbbb");
  auto out = fs::temp_directory_path() / "cli_wig.wig";
  RunConfig cfg = base_config(in, out);
  cfg.out_format = OutFormat::Wig;
  std::ostringstream err;
  REQUIRE(cmd_map(cfg, err) == exit_ok);
  const std::string wig = slurp(out);
  CHECK(wig.rfind("fixedStep chrom=seq start=1 step=1\n3\n2\n1\n4\n", 0) == 0);
}

TEST_CASE("validate agrees on random texts") {
  std::ostringstream out, err;
  CHECK(cmd_validate(100, 2, {3, 5, 17}, 50, 7, out, err) == exit_ok);
  CHECK(out.str().find("OK") == 0);
}

TEST_CASE("validate with zero trials is vacuously ok") {
  std::ostringstream out, err;
  CHECK(cmd_validate(100, 2, {3}, 0, 7, out, err) == exit_ok);
}

TEST_CASE("validate rejects out-of-range windows") {
  std::ostringstream out, err;
  CHECK(cmd_validate(10, 2, {10}, 5, 7, out, err) == exit_usage);
}

TEST_CASE("divergence reporting dumps the counterexample") {
  IntText t = random_text(12, 2, 3);
  std::vector<Count> expected{1, 2, 3};
  std::vector<Count> actual{1, 2, 4};
  CHECK(!counts_equal(expected, actual));
  CHECK(counts_equal(expected, expected));
  std::ostringstream err;
  dump_divergence(err, t, 3, "fault-injection self-test", expected, actual);
  CHECK(err.str().find("divergence") != std::string::npos);
  CHECK(err.str().find("expected: 1 2 3") != std::string::npos);
  CHECK(err.str().find("1 2 4") != std::string::npos);
}

TEST_CASE("bench emits one row per configuration, average gated") {
  std::ostringstream out, err;
  // n=64, sigma=4: the average-case condition needs m >= 12; m=4 fails it
  REQUIRE(cmd_bench({64}, {4, 16}, {Algo::Average, Algo::Treewalk}, false, 5, out, err) ==
          exit_ok);
  std::istringstream rows(out.str());
  std::string line;
  int average_rows = 0, treewalk_rows = 0;
  while (std::getline(rows, line)) {
    if (line.rfind("average\t", 0) == 0) ++average_rows;
    if (line.rfind("treewalk\t", 0) == 0) ++treewalk_rows;
  }
  CHECK(average_rows == 1);  // only m=16
  CHECK(treewalk_rows == 2);

  // forcing runs it regardless
  std::ostringstream out2, err2;
  REQUIRE(cmd_bench({64}, {4}, {Algo::Average}, true, 5, out2, err2) == exit_ok);
  CHECK(out2.str().find("average\t64\t4\t") != std::string::npos);
}

TEST_CASE("seeded text generation is deterministic") {
  IntText a = random_text(128, 4, 99);
  IntText b = random_text(128, 4, 99);
  CHECK(std::ranges::equal(a.ranks(), b.ranks()));
  IntText c = random_text(128, 4, 100);
  CHECK(!std::ranges::equal(a.ranks(), c.ranks()));
}
