#include "divisible/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "divisible/coloring.hpp"
#include "divisible/divisibility.hpp"
#include "divisible/io.hpp"
#include "divisible/named_graphs.hpp"
#include "divisible/oracles.hpp"

namespace divisible::harness {
namespace {

using nlohmann::json;

enum class Status { Ok, Degenerate, ClassViolation, BudgetExceeded, InvalidInput, VerificationFailed, Counterexample, TheoremViolation };

std::string status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Degenerate: return "degenerate";
    case Status::ClassViolation: return "class-violation";
    case Status::BudgetExceeded: return "budget-exceeded";
    case Status::InvalidInput: return "invalid-input";
    case Status::VerificationFailed: return "verification-failed";
    case Status::Counterexample: return "counterexample";
    case Status::TheoremViolation: return "theorem-violation";
  }
  return "?";
}

// Higher wins when a batch picks its exit status.
int severity(Status s) {
  switch (s) {
    case Status::TheoremViolation: return 6;
    case Status::VerificationFailed:
    case Status::Counterexample: return 5;
    case Status::InvalidInput: return 4;
    case Status::BudgetExceeded: return 3;
    case Status::ClassViolation: return 2;
    default: return 0;
  }
}

ExitCode exit_for(Status s) {
  switch (s) {
    case Status::TheoremViolation: return ExitCode::TheoremViolation;
    case Status::VerificationFailed:
    case Status::Counterexample: return ExitCode::VerificationFailed;
    case Status::InvalidInput: return ExitCode::Usage;
    case Status::BudgetExceeded: return ExitCode::BudgetExceeded;
    case Status::ClassViolation: return ExitCode::ClassViolation;
    default: return ExitCode::Ok;
  }
}

struct Record {
  std::string graph6;
  Status status = Status::Ok;
  json body;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

std::vector<int> members(const VertexSet& s) { return s.members(); }

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

class WeightSource {
 public:
  explicit WeightSource(const Options& o) : seed_(o.seed) {
    const std::string& spec = o.weights;
    if (spec == "unit") return;
    if (spec.rfind("random:", 0) == 0) {
      random_ = true;
      try {
        max_weight_ = std::stoll(spec.substr(7));
      } catch (const std::exception&) {
        throw UsageError("bad weight spec '" + spec + "'");
      }
      if (max_weight_ < 0) throw UsageError("random weight bound must be non-negative");
      return;
    }
    std::ifstream in(spec);
    if (!in) throw IoError("cannot open weight file '" + spec + "'");
    std::string token;
    while (in >> token) {
      try {
        std::size_t used = 0;
        const long long value = std::stoll(token, &used);
        if (used != token.size() || value < 0) throw std::invalid_argument(token);
        fixed_.push_back(value);
      } catch (const std::exception&) {
        throw ParseError(ParseFailure::MalformedLine, "weight file entry '" + token + "' is not a non-negative integer");
      }
    }
    from_file_ = true;
  }

  WeightFn operator()(const Graph& g, const std::string& graph6) const {
    if (random_) return random_weights(g.order(), max_weight_, mix_seed(seed_, fnv1a(graph6)));
    if (from_file_) {
      if (static_cast<int>(fixed_.size()) != g.order())
        throw InvalidArgument("weight file has " + std::to_string(fixed_.size()) + " entries but graph has " +
                              std::to_string(g.order()) + " vertices");
      return WeightFn(fixed_);
    }
    return WeightFn::unit(g.order());
  }

 private:
  std::uint64_t seed_;
  bool random_ = false;
  bool from_file_ = false;
  std::int64_t max_weight_ = 0;
  std::vector<std::int64_t> fixed_;
};

Limits limits_for(const Options& o) {
  if (o.budget_ms) return Limits::with_time_budget(std::chrono::milliseconds(*o.budget_ms));
  return {};
}

// Runs body, turning library errors into record statuses.
template <class Body>
Record guarded(const Options& o, const std::string& graph6, Body&& body) {
  Record rec;
  rec.graph6 = graph6;
  rec.body["graph6"] = graph6;
  const auto start = std::chrono::steady_clock::now();
  try {
    rec.status = body(rec.body);
  } catch (const NotInClassError& e) {
    rec.status = Status::ClassViolation;
    rec.body["error"] = e.what();
    json w = json::array();
    for (const auto& emb : e.witnesses()) w.push_back(embedding_json(emb));
    rec.body["witnesses"] = w;
  } catch (const TheoremViolation& e) {
    rec.status = Status::TheoremViolation;
    rec.body["error"] = e.what();
    rec.body["trace"] = trace_json(e.trace());
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::DegenerateClique: rec.status = Status::Degenerate; break;
      case ErrorKind::BudgetExceeded: rec.status = Status::BudgetExceeded; break;
      case ErrorKind::NotInClass: rec.status = Status::ClassViolation; break;
      case ErrorKind::TheoremViolation: rec.status = Status::TheoremViolation; break;
      default: rec.status = Status::InvalidInput; break;
    }
    rec.body["error"] = e.what();
  }
  if (o.timings)
    rec.body["ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.body["status"] = status_name(rec.status);
  return rec;
}

json verdict_json(const Verdict& v) {
  json out{{"ok", v.ok}};
  if (!v.ok) out["violated"] = v.violated;
  return out;
}

CorpusSpec corpus_from(const Options& o) {
  const int sources = (o.in ? 1 : 0) + (o.exhaustive ? 1 : 0) + (o.random ? 1 : 0);
  if (sources != 1) throw UsageError("give exactly one of --in, --exhaustive, --random");
  CorpusSpec spec;
  if (o.in) {
    spec = CorpusSpec::file(*o.in);
  } else if (o.exhaustive) {
    if (*o.exhaustive > kMaxExhaustiveOrder) throw UsageError("--exhaustive is limited to n <= 10");
    if (o.min_n < 1 || o.min_n > *o.exhaustive) throw UsageError("--min-n must lie in 1..N");
    spec = CorpusSpec::exhaustive_range(o.min_n, *o.exhaustive);
  } else {
    if (o.random->count < 1) throw UsageError("random count must be at least 1");
    if (o.random->n < 0 || o.random->n > kMaxVertices) throw UsageError("random order out of range");
    if (o.random->p < 0.0 || o.random->p > 1.0) throw UsageError("edge probability must lie in [0, 1]");
    spec = CorpusSpec::random(o.random->n, o.random->p, o.random->count, o.seed);
  }
  try {
    spec.filter = ClassFilter::parse(o.filter);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  spec.seed = o.seed;
  return spec;
}

std::vector<Graph> load_corpus(const Options& o, json& options_json) {
  auto spec = corpus_from(o);
  options_json["source"] = spec.describe();
  return generate_all(spec);
}

Record classify_record(const Options& o, const Graph& g) {
  return guarded(o, emit_graph6(g), [&](json& body) {
    body["n"] = g.order();
    body["m"] = g.edge_count();
    body["class"] = class_report_json(classify(g, limits_for(o)));
    return Status::Ok;
  });
}

Record divide_record(const Options& o, const WeightSource& weights, const Graph& g) {
  const auto g6 = emit_graph6(g);
  return guarded(o, g6, [&](json& body) {
    const auto limits = limits_for(o);
    if (o.mode == Mode::Two) {
      body["mode"] = "two";
      auto d = two_divide(g, limits);
      body["division"] = {{"a", members(d.a)}, {"b", members(d.b)}};
      const auto v = verify_two_division(g, d.a, d.b, limits);
      body["verdict"] = verdict_json(v);
      if (o.trace) body["trace"] = trace_json(d.trace);
      return v ? Status::Ok : Status::VerificationFailed;
    }
    body["mode"] = "perfect";
    const auto w = weights(g, g6);
    body["weights"] = w.values();
    auto d = perfect_divide(g, w, PerfectClassHint::Any, limits);
    body["division"] = {{"p", members(d.p)}, {"w", members(d.w_side)}};
    const auto v = verify_perfect_division(g, w, d.p, d.w_side, limits);
    body["verdict"] = verdict_json(v);
    if (o.trace) body["trace"] = trace_json(d.trace);
    return v ? Status::Ok : Status::VerificationFailed;
  });
}

Record color_record(const Options& o, const Graph& g, AuditRow& row) {
  return guarded(o, emit_graph6(g), [&](json& body) {
    const auto limits = limits_for(o);
    body["mode"] = o.mode == Mode::Two ? "two" : "perfect";
    const auto outcome = o.mode == Mode::Two ? color_via_two_division(g, limits)
                                             : color_via_perfect_division(g, PerfectClassHint::Any, limits);
    const auto& cert = outcome.certificate;
    json coloring{{"assignment", outcome.coloring.assignment},
                  {"colors_used", cert.colors_used},
                  {"omega", cert.omega},
                  {"bound_kind", to_string(cert.kind)},
                  {"bound", cert.bound_value}};
    std::optional<int> chi;
    try {
      chi = chromatic_number_exact(g, limits).colors;
    } catch (const BudgetExceeded&) {
    }
    coloring["chi_exact"] = chi ? json(*chi) : json(nullptr);
    body["coloring"] = coloring;
    if (o.trace) body["trace"] = trace_json(outcome.trace);
    row.omega = cert.omega;
    row.chi = chi;
    row.used = cert.colors_used;
    row.bound = cert.bound_value;
    row.slack = cert.bound_value - cert.colors_used;
    Verdict v;
    if (!is_proper_coloring(g, outcome.coloring.assignment)) v = {false, "coloring is not proper"};
    else if (cert.colors_used > cert.bound_value) v = {false, "colors used exceed the bound"};
    else if (chi && cert.colors_used < *chi) v = {false, "fewer colors than the chromatic number"};
    body["verdict"] = verdict_json(v);
    return v ? Status::Ok : Status::VerificationFailed;
  });
}

VertexSet set_from(int n, const json& arr) {
  std::vector<int> vs;
  for (const auto& x : arr) vs.push_back(x.get<int>());
  return VertexSet(n, vs);
}

Verdict verify_stored(const Graph& g, const json& stored, const Limits& limits, std::string& checked) {
  if (stored.contains("division")) {
    const auto& d = stored.at("division");
    const std::string mode = stored.value("mode", d.contains("a") ? "two" : "perfect");
    if (mode == "two") {
      checked = "two-division";
      return verify_two_division(g, set_from(g.order(), d.at("a")), set_from(g.order(), d.at("b")), limits);
    }
    checked = "perfect-division";
    const auto w = stored.contains("weights") ? WeightFn(stored.at("weights").get<std::vector<std::int64_t>>())
                                              : WeightFn::unit(g.order());
    if (w.size() != g.order()) return {false, "stored weights do not match the graph order"};
    return verify_perfect_division(g, w, set_from(g.order(), d.at("p")), set_from(g.order(), d.at("w")), limits);
  }
  if (stored.contains("coloring")) {
    checked = "coloring";
    const auto& c = stored.at("coloring");
    const auto assignment = c.at("assignment").get<std::vector<int>>();
    if (static_cast<int>(assignment.size()) != g.order()) return {false, "assignment does not cover the graph"};
    if (!is_proper_coloring(g, assignment)) return {false, "coloring is not proper"};
    std::vector<int> distinct = assignment;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const int used = c.at("colors_used").get<int>();
    if (static_cast<int>(distinct.size()) > used) return {false, "more distinct colors than recorded"};
    const int omega = static_cast<int>(clique_number(g, limits).value);
    if (omega != c.at("omega").get<int>()) return {false, "recorded clique number is wrong"};
    const auto kind = c.at("bound_kind").get<std::string>() == to_string(BoundKind::PowerOfTwo) ? BoundKind::PowerOfTwo
                                                                                                 : BoundKind::Quadratic;
    if (c.at("bound").get<std::int64_t>() != chi_bound(kind, omega)) return {false, "recorded bound is wrong"};
    if (used > chi_bound(kind, omega)) return {false, "colors used exceed the bound"};
    return {};
  }
  checked = "nothing";
  return {};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseFailure::MalformedLine, "'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Record> run_verify(const Options& o) {
  if (!o.division) throw UsageError("verify needs --division FILE");
  const json stored = load_json_file(*o.division);
  if (!stored.contains("records") || !stored.at("records").is_array())
    throw ParseError(ParseFailure::MalformedLine, "report has no records array");
  std::vector<Record> out;
  auto check = [&](const Graph& g, const std::string& g6, const json* rec) {
    out.push_back(guarded(o, g6, [&](json& body) {
      if (!rec) {
        body["verdict"] = verdict_json({false, "no stored record for this graph"});
        return Status::VerificationFailed;
      }
      std::string checked;
      Verdict v;
      try {
        v = verify_stored(g, *rec, limits_for(o), checked);
      } catch (const json::exception& e) {
        v = {false, std::string("malformed stored record: ") + e.what()};
      }
      body["checked"] = checked;
      body["verdict"] = verdict_json(v);
      return v ? Status::Ok : Status::VerificationFailed;
    }));
  };
  if (o.graph) {
    for (const auto& g : read_graph_file(*o.graph)) {
      const auto g6 = emit_graph6(g);
      const json* match = nullptr;
      for (const auto& rec : stored.at("records"))
        if (rec.value("graph6", "") == g6) {
          match = &rec;
          break;
        }
      check(g, g6, match);
    }
  } else {
    for (const auto& rec : stored.at("records")) {
      const auto g6 = rec.value("graph6", "");
      check(parse_graph6(g6), g6, &rec);
    }
  }
  return out;
}

std::vector<Record> run_conjecture(const Options& o, json& options_json, json& extra) {
  const int max_n = o.max_n ? *o.max_n : (o.exhaustive ? *o.exhaustive : 7);
  if (max_n < 1 || max_n > kMaxExhaustiveOrder) throw UsageError("conjecture search needs 1 <= max-n <= 10");
  options_json["max_n"] = max_n;
  std::vector<Record> out;
  int counterexamples = 0;
  int necessity_failures = 0;
  int sufficiency = 0;
  int necessity = 0;

  auto spec = CorpusSpec::exhaustive_range(1, max_n);
  spec.filter = ClassFilter::parse(o.filter.empty() ? "oddholefree" : "oddholefree," + o.filter);
  generate(spec, [&](const Graph& g) {
    ++sufficiency;
    out.push_back(guarded(o, emit_graph6(g), [&](json& body) {
      body["side"] = "sufficiency";
      body["n"] = g.order();
      const auto verdict = is_two_divisible_oracle(g, limits_for(o));
      body["two_divisible"] = verdict.divisible;
      if (verdict.divisible) return Status::Ok;
      ++counterexamples;
      body["counterexample"] = members(*verdict.counterexample);
      return Status::Counterexample;
    }));
  });

  // Graphs with an odd hole cannot be 2-divisible; spot-check that direction.
  std::vector<Graph> sample;
  for (int k = 5; k <= max_n; k += 2) sample.push_back(named::cycle(k));
  if (max_n >= 5) {
    for (int i = 0; i < o.necessity_sample; ++i) {
      const int n = 5 + i % (max_n - 4);
      for (int attempt = 0; attempt < 10000; ++attempt) {
        auto g = random_graph(n, 0.5, mix_seed(o.seed, 0x6e656365ULL + static_cast<std::uint64_t>(i),
                                               static_cast<std::uint64_t>(attempt)));
        if (find_odd_hole(g)) {
          sample.push_back(std::move(g));
          break;
        }
      }
    }
  }
  for (const auto& g : sample) {
    ++necessity;
    out.push_back(guarded(o, emit_graph6(g), [&](json& body) {
      body["side"] = "necessity";
      body["n"] = g.order();
      body["odd_hole"] = embedding_json(*find_odd_hole(g));
      const auto verdict = is_two_divisible_oracle(g, limits_for(o));
      body["two_divisible"] = verdict.divisible;
      if (!verdict.divisible) return Status::Ok;
      ++necessity_failures;
      return Status::TheoremViolation;
    }));
  }
  extra = {{"max_n", max_n},
           {"sufficiency_checked", sufficiency},
           {"counterexamples", counterexamples},
           {"necessity_checked", necessity},
           {"necessity_failures", necessity_failures}};
  return out;
}

std::string join(const json& arr) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x.get<int>());
  }
  return s;
}

std::string render_csv(Command command, const std::vector<Record>& records, const std::vector<AuditRow>& audit) {
  if (command == Command::Color) return audit_to_csv(audit);
  std::ostringstream out;
  auto flag = [](const json& body, const char* key) { return body.contains("class") && body["class"].value(key, false) ? "1" : "0"; };
  switch (command) {
    case Command::Classify:
      out << "graph6,n,m,p5_free,c5_free,bull_free,odd_hole_free,perfect,status\n";
      for (const auto& r : records)
        out << r.graph6 << ',' << r.body.value("n", 0) << ',' << r.body.value("m", 0) << ',' << flag(r.body, "p5_free")
            << ',' << flag(r.body, "c5_free") << ',' << flag(r.body, "bull_free") << ','
            << flag(r.body, "odd_hole_free") << ',' << flag(r.body, "perfect") << ',' << status_name(r.status) << '\n';
      break;
    case Command::Divide:
      out << "graph6,status,first,second\n";
      for (const auto& r : records) {
        out << r.graph6 << ',' << status_name(r.status) << ',';
        if (r.body.contains("division")) {
          const auto& d = r.body["division"];
          out << join(d.contains("a") ? d["a"] : d["p"]) << ',' << join(d.contains("b") ? d["b"] : d["w"]);
        } else {
          out << ',';
        }
        out << '\n';
      }
      break;
    case Command::Verify:
      out << "graph6,checked,status,violated\n";
      for (const auto& r : records)
        out << r.graph6 << ',' << r.body.value("checked", "") << ',' << status_name(r.status) << ','
            << (r.body.contains("verdict") ? r.body["verdict"].value("violated", "") : "") << '\n';
      break;
    case Command::Conjecture:
      out << "graph6,side,n,two_divisible,status\n";
      for (const auto& r : records)
        out << r.graph6 << ',' << r.body.value("side", "") << ',' << r.body.value("n", 0) << ','
            << (r.body.value("two_divisible", false) ? 1 : 0) << ',' << status_name(r.status) << '\n';
      break;
    case Command::Color:
      break;
  }
  return out.str();
}

}  // namespace

std::string command_name(Command command) {
  switch (command) {
    case Command::Classify: return "classify";
    case Command::Divide: return "divide";
    case Command::Color: return "color";
    case Command::Verify: return "verify";
    case Command::Conjecture: return "conjecture";
  }
  return "?";
}

json embedding_json(const Embedding& e) { return {{"kind", e.name()}, {"vertices", e.vertices}}; }

json class_report_json(const ClassReport& r) {
  json out{{"p5_free", r.p5_free},
           {"c5_free", r.c5_free},
           {"bull_free", r.bull_free},
           {"odd_hole_free", r.odd_hole_free},
           {"perfect", r.perfect}};
  json witnesses = json::object();
  if (r.p5_witness) witnesses["p5"] = embedding_json(*r.p5_witness);
  if (r.c5_witness) witnesses["c5"] = embedding_json(*r.c5_witness);
  if (r.bull_witness) witnesses["bull"] = embedding_json(*r.bull_witness);
  if (r.odd_hole_witness) witnesses["odd_hole"] = embedding_json(*r.odd_hole_witness);
  if (r.imperfection_witness) witnesses["imperfection"] = embedding_json(*r.imperfection_witness);
  out["witnesses"] = witnesses;
  return out;
}

json trace_json(const Trace& trace) {
  json out = json::array();
  for (const auto& step : trace) {
    json s{{"kind", step.kind}, {"depth", step.depth}};
    if (!step.note.empty()) s["note"] = step.note;
    for (const auto& [name, vs] : step.sets) s["sets"][name] = vs;
    for (const auto& [name, v] : step.values) s["values"][name] = v;
    out.push_back(s);
  }
  return out;
}

WeightFn weights_for(const Options& options, const Graph& g, const std::string& graph6) {
  return WeightSource(options)(g, graph6);
}

json without_volatile_fields(const json& report) {
  json out = report;
  out.erase("generated_at");
  if (out.contains("records"))
    for (auto& rec : out["records"]) rec.erase("ms");
  return out;
}

RunResult run(const Options& o) {
  RunResult result;
  json options_json{{"seed", o.seed}, {"filter", o.filter}};
  std::vector<Record> records;
  std::vector<AuditRow> audit;
  json extra;
  try {
    switch (o.command) {
      case Command::Classify:
        for (const auto& g : load_corpus(o, options_json)) records.push_back(classify_record(o, g));
        break;
      case Command::Divide: {
        const WeightSource weights(o);
        options_json["mode"] = o.mode == Mode::Two ? "two" : "perfect";
        if (o.mode == Mode::Perfect) options_json["weights"] = o.weights;
        for (const auto& g : load_corpus(o, options_json)) records.push_back(divide_record(o, weights, g));
        break;
      }
      case Command::Color:
        options_json["mode"] = o.mode == Mode::Two ? "two" : "perfect";
        for (const auto& g : load_corpus(o, options_json)) {
          AuditRow row;
          row.id = emit_graph6(g);
          records.push_back(color_record(o, g, row));
          if (records.back().status != Status::Ok && records.back().body.contains("error"))
            row.error = records.back().body["error"].get<std::string>();
          audit.push_back(std::move(row));
        }
        break;
      case Command::Verify:
        if (o.division) options_json["division"] = *o.division;
        if (o.graph) options_json["graph"] = *o.graph;
        records = run_verify(o);
        break;
      case Command::Conjecture:
        records = run_conjecture(o, options_json, extra);
        break;
    }
  } catch (const UsageError& e) {
    result.exit_code = ExitCode::Usage;
    result.error = e.what();
    return result;
  } catch (const ParseError& e) {
    result.exit_code = ExitCode::ParseFailure;
    result.error = e.what();
    return result;
  } catch (const IoError& e) {
    result.exit_code = ExitCode::Io;
    result.error = e.what();
    return result;
  } catch (const BudgetExceeded& e) {
    result.exit_code = ExitCode::BudgetExceeded;
    result.error = e.what();
    return result;
  } catch (const Error& e) {
    result.exit_code = ExitCode::Usage;
    result.error = e.what();
    return result;
  }

  std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) { return a.graph6 < b.graph6; });
  std::stable_sort(audit.begin(), audit.end(), [](const AuditRow& a, const AuditRow& b) { return a.id < b.id; });

  Status worst = Status::Ok;
  std::map<std::string, int> counts;
  json recs = json::array();
  for (const auto& r : records) {
    if (severity(r.status) > severity(worst)) worst = r.status;
    ++counts[status_name(r.status)];
    recs.push_back(r.body);
  }
  json summary{{"records", records.size()}, {"status", counts}};
  if (!extra.is_null()) summary["conjecture"] = extra;
  result.report = {{"schema", 1},         {"command", command_name(o.command)}, {"generated_at", utc_now()},
                   {"options", options_json}, {"records", recs},                    {"summary", summary}};
  result.exit_code = exit_for(worst);
  result.text = o.format == Format::Csv ? render_csv(o.command, records, audit) : result.report.dump(2) + "\n";
  return result;
}

int run_and_write(const Options& o) {
  auto result = run(o);
  if (!result.error.empty()) {
    std::cerr << "error: " << result.error << "\n";
    return static_cast<int>(result.exit_code);
  }
  if (o.out) {
    std::ofstream out(*o.out);
    if (!out) {
      std::cerr << "error: cannot write '" << *o.out << "'\n";
      return static_cast<int>(ExitCode::Io);
    }
    out << result.text;
  } else {
    std::cout << result.text;
  }
  return static_cast<int>(result.exit_code);
}

}  // namespace divisible::harness
