#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tagad/mode.hpp"
#include "tagad/parser.hpp"

namespace tagad {

struct RunReport {
  std::string program;
  Mode mode = Mode::Guarded;
  std::string result;
  /// Set when the result is a plain real.
  std::optional<double> value;
  std::uint64_t tags_allocated = 0;
  double wall_ms = 0;
};

/// One JSON object on a single line.
std::string to_json_line(const RunReport& report);

/// Evaluates program text and reports the rendered result. Parse and
/// evaluation errors propagate as ParseError / EvalError.
RunReport run_source(const std::string& label, const std::string& source, Mode mode,
                     ParseOptions options = {});

/// Reads and runs a program file. An unreadable file throws std::runtime_error.
RunReport run_file(const std::filesystem::path& path, Mode mode, ParseOptions options = {});

std::string read_file(const std::filesystem::path& path);

/// Sorted *.sexp files of a corpus directory.
std::vector<std::filesystem::path> corpus_programs(const std::filesystem::path& dir);

struct DemoRow {
  std::string program;
  /// Rendered result per mode, in all_modes order; failures read "error: ...".
  std::vector<std::string> cells;

  bool modes_disagree() const;
};

std::vector<DemoRow> run_demo(const std::filesystem::path& corpus_dir);

/// Program-by-mode table; rows whose modes disagree are flagged.
std::string render_demo(const std::vector<DemoRow>& rows);

/// Program that applies a step function `iterations` times. The step is
/// obtained by differentiating a curried function of `depth` real arguments
/// (plus the step argument) in its first argument, and the whole chain is
/// differentiated once more at 1. With `differentiate` false the same
/// chain is built and run with no D at all. `iterations` must be a power
/// of ten.
std::string bench_program(std::uint64_t iterations, int depth, bool differentiate);

struct BenchRow {
  std::uint64_t iterations = 0;
  int depth = 0;
  double plain_ms = 0;
  double naive_ms = 0;
  double guarded_ms = 0;
  std::string naive_result;
  std::string guarded_result;

  double guarded_over_naive() const { return guarded_ms / naive_ms; }
  double naive_over_plain() const { return naive_ms / plain_ms; }
};

/// Best-of-`repeats` wall time for each variant.
BenchRow run_bench_case(std::uint64_t iterations, int depth, int repeats);

std::string render_bench(const std::vector<BenchRow>& rows);

}  // namespace tagad
