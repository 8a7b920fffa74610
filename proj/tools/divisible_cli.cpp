// Command-line front end: classify | divide | color | verify | conjecture.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "divisible/harness.hpp"

using namespace divisible::harness;

namespace {

struct Flags {
  std::string in;
  int exhaustive = 0;
  int min_n = 1;
  std::string random;
  std::uint64_t seed = 0;
  std::string filter;
  std::string mode = "two";
  std::string weights = "unit";
  std::string out;
  std::string format = "json";
  std::int64_t budget_ms = 0;
  std::string division;
  std::string graph;
  int max_n = 0;
  int necessity_sample = 200;
  bool timings = false;
  bool trace = false;
};

void add_corpus_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--in", f.in, "graph6 (one per line) or DIMACS file");
  cmd->add_option("--exhaustive", f.exhaustive, "all non-isomorphic graphs up to this order (<= 10)");
  cmd->add_option("--min-n", f.min_n, "smallest order for --exhaustive");
  cmd->add_option("--random", f.random, "N,P,COUNT");
  cmd->add_option("--filter", f.filter,
                  "comma-separated flags: p5free c5free bullfree oddholefree perfect pdclass p5c5free connected "
                  "prime; prefix not- to negate");
}

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--seed", f.seed, "seed for random corpora and weights");
  cmd->add_option("--out", f.out, "write the report here instead of stdout");
  cmd->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--budget-ms", f.budget_ms, "time budget per graph");
  cmd->add_flag("--timings", f.timings, "record per-graph wall time");
  cmd->add_flag("--trace", f.trace, "include derivation logs");
}

std::optional<RandomSource> parse_random(const std::string& text) {
  RandomSource r;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> r.n >> c1 >> r.p >> c2 >> r.count) || c1 != ',' || c2 != ',' || !in.eof())
    throw CLI::ValidationError("--random", "expected N,P,COUNT");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisibility and colouring experiments on small graphs"};
  app.require_subcommand(1);
  Flags f;

  auto* classify = app.add_subcommand("classify", "membership in the hereditary classes, with witnesses");
  auto* divide = app.add_subcommand("divide", "two-division or perfect weight division of each graph");
  auto* color = app.add_subcommand("color", "recursive colouring with its bound certificate");
  auto* verify = app.add_subcommand("verify", "re-check divisions or colourings stored in a report");
  auto* conjecture = app.add_subcommand("conjecture", "search odd-hole-free graphs for a non-2-divisible one");

  for (auto* cmd : {classify, divide, color}) {
    add_corpus_flags(cmd, f);
    add_common_flags(cmd, f);
  }
  for (auto* cmd : {divide, color})
    cmd->add_option("--mode", f.mode, "two or perfect")->check(CLI::IsMember({"two", "perfect"}));
  divide->add_option("--weights", f.weights, "unit, random:K, or a file of integers");

  verify->add_option("--division", f.division, "report written by divide or color")->required();
  verify->add_option("--graph", f.graph, "graphs to check the stored records against");
  add_common_flags(verify, f);

  conjecture->add_option("--max-n", f.max_n, "largest order searched (<= 10)");
  conjecture->add_option("--exhaustive", f.exhaustive, "same as --max-n");
  conjecture->add_option("--filter", f.filter, "extra class flags for the search side");
  conjecture->add_option("--necessity-sample", f.necessity_sample, "random graphs with an odd hole to spot-check");
  add_common_flags(conjecture, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  Options o;
  if (classify->parsed()) o.command = Command::Classify;
  if (divide->parsed()) o.command = Command::Divide;
  if (color->parsed()) o.command = Command::Color;
  if (verify->parsed()) o.command = Command::Verify;
  if (conjecture->parsed()) o.command = Command::Conjecture;

  try {
    if (!f.random.empty()) o.random = parse_random(f.random);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }
  if (!f.in.empty()) o.in = f.in;
  if (f.exhaustive > 0) o.exhaustive = f.exhaustive;
  if (f.max_n > 0) o.max_n = f.max_n;
  o.min_n = f.min_n;
  o.seed = f.seed;
  o.filter = f.filter;
  o.mode = f.mode == "perfect" ? Mode::Perfect : Mode::Two;
  o.weights = f.weights;
  if (!f.out.empty()) o.out = f.out;
  o.format = f.format == "csv" ? Format::Csv : Format::Json;
  if (f.budget_ms > 0) o.budget_ms = f.budget_ms;
  if (!f.division.empty()) o.division = f.division;
  if (!f.graph.empty()) o.graph = f.graph;
  o.necessity_sample = f.necessity_sample;
  o.timings = f.timings;
  o.trace = f.trace;
  return run_and_write(o);
}
