#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "divisible/corpus.hpp"
#include "divisible/graph.hpp"
#include "divisible/recognition.hpp"
#include "divisible/trace.hpp"

namespace divisible::harness {

enum class Command { Classify, Divide, Color, Verify, Conjecture };
enum class Mode { Two, Perfect };
enum class Format { Json, Csv };

/// Process exit statuses. A batch reports the most serious status among its
/// records: theorem violation, then verification failure, then budget, then
/// class violation.
enum class ExitCode : int {
  Ok = 0,
  VerificationFailed = 1,
  Usage = 2,
  ParseFailure = 3,
  ClassViolation = 4,
  TheoremViolation = 5,
  BudgetExceeded = 6,
  Io = 7,
};

struct RandomSource {
  int n = 0;
  double p = 0.5;
  int count = 0;
};

struct Options {
  Command command = Command::Classify;
  std::optional<std::string> in;
  /// Every order from min_n up to this one.
  std::optional<int> exhaustive;
  int min_n = 1;
  std::optional<RandomSource> random;
  std::uint64_t seed = 0;
  std::string filter;
  Mode mode = Mode::Two;
  /// "unit", "random:K" (per-graph weights 0..K), or a file of integers.
  std::string weights = "unit";
  std::optional<std::string> out;
  Format format = Format::Json;
  std::optional<std::int64_t> budget_ms;
  /// verify: stored report, and optionally the graphs to check it against.
  std::optional<std::string> division;
  std::optional<std::string> graph;
  /// conjecture: largest order searched.
  std::optional<int> max_n;
  /// conjecture: size of the odd-hole sample for the necessity side.
  int necessity_sample = 200;
  bool timings = false;
  bool trace = false;
};

struct RunResult {
  ExitCode exit_code = ExitCode::Ok;
  nlohmann::json report;
  /// The report rendered in the requested format.
  std::string text;
  /// Human-readable reason for a usage, parse or io failure.
  std::string error;
};

/// Runs one subcommand. Never throws for bad input; failures become exit codes.
RunResult run(const Options& options);

/// Runs and writes the rendered report to options.out or stdout.
int run_and_write(const Options& options);

/// The report without fields that legitimately differ between runs
/// (generation time and per-record timings).
nlohmann::json without_volatile_fields(const nlohmann::json& report);

std::string command_name(Command command);
nlohmann::json embedding_json(const Embedding& e);
nlohmann::json class_report_json(const ClassReport& report);
nlohmann::json trace_json(const Trace& trace);

/// Weights for graph g under the options' weight source.
WeightFn weights_for(const Options& options, const Graph& g, const std::string& graph6);

}  // namespace divisible::harness
