#include "tagad/driver.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tagad/error.hpp"
#include "tagad/eval.hpp"
#include "tagad/render.hpp"
#include "tagad/tag.hpp"

namespace tagad {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

}  // namespace

std::string to_json_line(const RunReport& report) {
  nlohmann::ordered_json j;
  j["program"] = report.program;
  j["mode"] = std::string(to_string(report.mode));
  j["result"] = report.result;
  if (report.value) {
    j["value"] = *report.value;
  } else {
    j["value"] = nullptr;
  }
  j["tags_allocated"] = report.tags_allocated;
  j["wall_ms"] = report.wall_ms;
  return j.dump();
}

RunReport run_source(const std::string& label, const std::string& source, Mode mode,
                     ParseOptions options) {
  ExprPtr program = parse(source, options);
  auto start = std::chrono::steady_clock::now();
  std::uint64_t before = peek_tag_counter();
  Value result = eval(*program, Env{}, mode);
  std::uint64_t after = peek_tag_counter();

  RunReport report;
  report.program = label;
  report.mode = mode;
  report.result = render(result);
  if (const auto* r = result.get_if<Real>()) report.value = r->value;
  report.tags_allocated = after - before;
  report.wall_ms = elapsed_ms(start);
  return report;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

RunReport run_file(const std::filesystem::path& path, Mode mode, ParseOptions options) {
  return run_source(path.string(), read_file(path), mode, options);
}

std::vector<std::filesystem::path> corpus_programs(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> programs;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".sexp") {
      programs.push_back(entry.path());
    }
  }
  std::sort(programs.begin(), programs.end());
  return programs;
}

bool DemoRow::modes_disagree() const {
  return std::adjacent_find(cells.begin(), cells.end(), std::not_equal_to<>()) != cells.end();
}

std::vector<DemoRow> run_demo(const std::filesystem::path& corpus_dir) {
  std::vector<DemoRow> rows;
  for (const auto& path : corpus_programs(corpus_dir)) {
    std::string source = read_file(path);
    DemoRow row{path.filename().string(), {}};
    for (Mode mode : all_modes) {
      try {
        row.cells.push_back(run_source(row.program, source, mode).result);
      } catch (const std::exception& e) {
        row.cells.push_back(std::string("error: ") + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_demo(const std::vector<DemoRow>& rows) {
  std::size_t first = 22;
  for (const auto& r : rows) first = std::max(first, r.program.size() + 2);
  constexpr std::size_t column = 20;

  std::ostringstream out;
  out << pad("program", first);
  for (Mode m : all_modes) out << pad(std::string(to_string(m)), column);
  out << "\n" << std::string(first + column * all_modes.size(), '-') << "\n";
  for (const auto& r : rows) {
    out << pad(r.program, first);
    for (const auto& c : r.cells) out << pad(c, column);
    if (r.modes_disagree()) out << "<- modes disagree";
    out << "\n";
  }
  return out.str();
}

std::string bench_program(std::uint64_t iterations, int depth, bool differentiate) {
  if (depth < 1) throw std::invalid_argument("bench depth must be at least 1");
  int tens = 0;
  for (std::uint64_t n = iterations; n > 1; n /= 10) {
    if (n % 10 != 0) throw std::invalid_argument("bench iterations must be a power of ten");
    ++tens;
  }
  if (iterations == 0) throw std::invalid_argument("bench iterations must be a power of ten");

  std::ostringstream p;
  p << "(let ((s (lambda (u) (lambda (f) (lambda (x) (f (+ x u)))))))\n"
    << "(let ((dhat (lambda (f) (lambda (y) ((((D s) 0) f) y)))))\n"
    << "(let ((ten (lambda (f) (lambda (x) (f (f (f (f (f (f (f (f (f (f x))))))))))))))\n";

  // F = λx1 ... xM a. a·x1; only the currying depth varies with M.
  p << "(let ((F (lambda (";
  for (int k = 1; k <= depth; ++k) p << "x" << k << " ";
  p << "a) (* a x1))))\n";

  p << "(let ((step (" << (differentiate ? "(dhat F)" : "F");
  for (int k = 0; k < depth; ++k) p << " 1";
  p << ")))\n";

  std::string iterate = "step";
  for (int k = 0; k < tens; ++k) iterate = "(ten " + iterate + ")";
  if (differentiate) {
    // The chain itself is differentiated, so every step sees a perturbed argument.
    p << "((D (lambda (z) (" << iterate << " z))) 1))))))\n";
  } else {
    p << "(" << iterate << " 1))))))\n";
  }
  return p.str();
}

BenchRow run_bench_case(std::uint64_t iterations, int depth, int repeats) {
  BenchRow row;
  row.iterations = iterations;
  row.depth = depth;
  ExprPtr plain = parse(bench_program(iterations, depth, false));
  ExprPtr differentiated = parse(bench_program(iterations, depth, true));

  auto best_of = [repeats](const ExprPtr& program, Mode mode, std::string* result) {
    double best = 0;
    for (int r = 0; r < std::max(1, repeats); ++r) {
      auto start = std::chrono::steady_clock::now();
      Value v = eval(*program, Env{}, mode);
      double ms = elapsed_ms(start);
      if (r == 0 || ms < best) best = ms;
      if (result) *result = render(v);
    }
    return best;
  };
  row.plain_ms = best_of(plain, Mode::NaivePostcompose, nullptr);
  row.naive_ms = best_of(differentiated, Mode::NaivePostcompose, &row.naive_result);
  row.guarded_ms = best_of(differentiated, Mode::Guarded, &row.guarded_result);
  return row;
}

std::string render_bench(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << pad("N", 10) << pad("M", 4) << pad("plain ms", 12) << pad("naive ms", 12)
      << pad("guarded ms", 12) << pad("guarded/naive", 15) << pad("naive/plain", 13) << "result\n";
  for (const auto& r : rows) {
    out << pad(std::to_string(r.iterations), 10) << pad(std::to_string(r.depth), 4)
        << pad(fixed(r.plain_ms, 2), 12) << pad(fixed(r.naive_ms, 2), 12)
        << pad(fixed(r.guarded_ms, 2), 12) << pad(fixed(r.guarded_over_naive(), 2), 15)
        << pad(fixed(r.naive_over_plain(), 2), 13) << r.naive_result << " / " << r.guarded_result
        << "\n";
  }
  return out.str();
}

}  // namespace tagad
