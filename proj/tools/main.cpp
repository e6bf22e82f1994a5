#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = mapcount::cli;

int main(int argc, char** argv) {
  CLI::App app{"mapcount: per-window Hamming-distance-1 mappability tracks"};
  app.require_subcommand(1);

  // map
  cli::RunConfig cfg;
  std::string format = "raw", count_mode, algo = "auto", out_format = "tsv";
  auto* map = app.add_subcommand("map", "compute a mappability track");
  map->add_option("--input", cfg.input, "input file")->required();
  map->add_option("--format", format, "raw|fasta")->check(CLI::IsMember({"raw", "fasta"}));
  map->add_flag("--case-fold", cfg.case_fold, "fold letter case before ranking");
  map->add_option("-m", cfg.m, "window length")->required();
  map->add_option("-k", cfg.k, "mismatch count, 0 or 1")->check(CLI::IsMember({"0", "1"}));
  map->add_option("--count", count_mode, "exact|at-most (default at-most for k=1)")
      ->check(CLI::IsMember({"exact", "at-most"}));
  map->add_option("--algo", algo, "auto|naive|average|treewalk|heavypath")
      ->check(CLI::IsMember({"auto", "naive", "average", "treewalk", "heavypath"}));
  map->add_option("--out", cfg.out, "output file (default stdout)");
  map->add_option("--out-format", out_format, "tsv|json|wig")
      ->check(CLI::IsMember({"tsv", "json", "wig"}));
  map->add_option("--budget", cfg.budget_per_n,
                  "auto-mode average work budget, in pair events per text letter");

  // validate
  mapcount::Index v_n = 0;
  mapcount::Rank v_sigma = 0;
  std::vector<mapcount::Index> v_ms;
  int v_trials = 0;
  std::uint64_t v_seed = 0;
  auto* validate = app.add_subcommand("validate",
                                      "cross-check all algorithms on random texts");
  validate->add_option("--n", v_n, "text length")->required();
  validate->add_option("--sigma", v_sigma, "alphabet size")->required();
  validate->add_option("--m", v_ms, "window lengths")->required()->delimiter(',');
  validate->add_option("--trials", v_trials, "number of random texts")->required();
  validate->add_option("--seed", v_seed, "random seed");

  // bench
  std::vector<mapcount::Index> b_sizes, b_ms;
  std::vector<std::string> b_algos;
  std::uint64_t b_seed = 0;
  auto* bench = app.add_subcommand("bench", "wall-clock timings on random texts");
  bench->add_option("--sizes", b_sizes, "text lengths")->required()->delimiter(',');
  bench->add_option("--m", b_ms, "window lengths")->required()->delimiter(',');
  bench->add_option("--algos", b_algos, "algorithms to time (forces them)")
      ->delimiter(',');
  bench->add_option("--seed", b_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_usage;
  }

  try {
    if (map->parsed()) {
      cfg.format = format == "fasta" ? mapcount::InputFormat::Fasta
                                     : mapcount::InputFormat::Raw;
      if (!count_mode.empty())
        cfg.mode = count_mode == "exact" ? cli::CountMode::Exact : cli::CountMode::AtMost;
      cfg.algo = *cli::algo_from_name(algo);
      cfg.out_format = out_format == "json"  ? cli::OutFormat::Json
                       : out_format == "wig" ? cli::OutFormat::Wig
                                             : cli::OutFormat::Tsv;
      return cli::cmd_map(cfg, std::cerr);
    }
    if (validate->parsed())
      return cli::cmd_validate(v_n, v_sigma, v_ms, v_trials, v_seed, std::cout, std::cerr);
    if (bench->parsed()) {
      std::vector<cli::Algo> algos;
      for (const std::string& name : b_algos) {
        auto a = cli::algo_from_name(name);
        if (!a || *a == cli::Algo::Auto) {
          std::cerr << "error: unknown bench algorithm '" << name << "'\n";
          return cli::exit_usage;
        }
        algos.push_back(*a);
      }
      const bool forced = !algos.empty();
      if (!forced)
        algos = {cli::Algo::Average, cli::Algo::Treewalk, cli::Algo::Heavypath};
      return cli::cmd_bench(b_sizes, b_ms, algos, forced, b_seed, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_io;
  }
  return cli::exit_usage;
}
