// Command-line driver: run programs, print the mode comparison, time the
// closure-tangent strategies.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tagad/driver.hpp"
#include "tagad/error.hpp"
#include "tagad/eval.hpp"
#include "tagad/tag.hpp"

#ifndef TAGAD_DEFAULT_CORPUS
#define TAGAD_DEFAULT_CORPUS "corpus"
#endif

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse_error = 1;
constexpr int exit_eval_error = 2;

int cmd_run(const std::string& path, const std::string& mode_name, bool json, bool internals,
            std::optional<std::uint64_t> seed) {
  auto mode = tagad::parse_mode(mode_name);
  if (!mode) {
    std::cerr << "unknown mode '" << mode_name << "'\n";
    return exit_parse_error;
  }
  try {
    if (seed) tagad::seed_tag_counter(*seed);
    auto report = tagad::run_file(path, *mode, {.expose_internals = internals});
    if (json) {
      std::cout << tagad::to_json_line(report) << "\n";
    } else {
      std::cout << report.result << "\n";
    }
    return exit_ok;
  } catch (const tagad::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return exit_parse_error;
  } catch (const tagad::EvalError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return exit_eval_error;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return exit_parse_error;
  }
}

int cmd_demo(const std::string& corpus) {
  try {
    std::cout << tagad::render_demo(tagad::run_demo(corpus));
    std::cout << "\nnested direct use, ((D (D g)) 2) with g(x) = x^3:\n";
    const std::string direct = "((D (D (lambda (x) (* x (* x x))))) 2)";
    for (auto mode : tagad::all_modes) {
      std::cout << "  " << tagad::to_string(mode) << ": "
                << tagad::run_source("direct", direct, mode).result << "\n";
    }
    return exit_ok;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return exit_eval_error;
  }
}

int cmd_bench(const std::vector<std::uint64_t>& sizes, const std::vector<int>& depths,
              int repeats) {
  try {
    std::vector<tagad::BenchRow> rows;
    for (auto n : sizes) {
      for (int m : depths) rows.push_back(tagad::run_bench_case(n, m, repeats));
    }
    std::cout << tagad::render_bench(rows);
    return exit_ok;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return exit_eval_error;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tagged forward-mode AD interpreter"};
  app.require_subcommand(1);

  std::string path;
  std::string mode_name = "guarded";
  bool json = false;
  bool internals = false;
  std::optional<std::uint64_t> seed;
  auto* run = app.add_subcommand("run", "Evaluate a program and print its result");
  run->add_option("program", path, "Path to a .sexp program")->required();
  run->add_option("--mode", mode_name, "naive-postcompose | naive-opaque | guarded");
  run->add_flag("--json", json, "Emit one JSON object per run");
  run->add_flag("--expose-internals", internals, "Enable tangent/primal/swizzle/bundle/tag primitives");
  run->add_option("--seed-counter", seed, "Start the tag counter at this id");

  std::string corpus = TAGAD_DEFAULT_CORPUS;
  auto* demo = app.add_subcommand("demo", "Run the corpus in every mode and compare");
  demo->add_option("--corpus", corpus, "Corpus directory");

  std::vector<std::uint64_t> sizes{1000, 10000, 100000};
  std::vector<int> depths{1, 2, 3};
  int repeats = 3;
  auto* bench = app.add_subcommand("bench", "Time naive and guarded closure tangents");
  bench->add_option("--sizes", sizes, "Iteration counts (powers of ten)")->delimiter(',');
  bench->add_option("--depths", depths, "Curried argument depths")->delimiter(',');
  bench->add_option("--repeats", repeats, "Repetitions per case; the best is reported");

  CLI11_PARSE(app, argc, argv);

  if (*run) return cmd_run(path, mode_name, json, internals, seed);
  if (*demo) return cmd_demo(corpus);
  return cmd_bench(sizes, depths, repeats);
}
