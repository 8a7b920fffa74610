#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divisible/errors.hpp"

namespace divisible {

/// One step of a derivation log. Vertex ids are those of the top-level input graph.
struct TraceStep {
  std::string kind;
  int depth = 0;
  std::string note;
  std::vector<std::pair<std::string, std::vector<int>>> sets;
  std::vector<std::pair<std::string, std::int64_t>> values;
};

using Trace = std::vector<TraceStep>;

/// A construction that a theorem guarantees failed its own verification.
/// Either the implementation is wrong or the input falsifies the theorem.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, Trace trace)
      : Error(ErrorKind::TheoremViolation, what), trace_(std::move(trace)) {}
  const Trace& trace() const { return trace_; }

 private:
  Trace trace_;
};

}  // namespace divisible
