#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divisible/divisibility.hpp"
#include "divisible/graph.hpp"
#include "divisible/limits.hpp"
#include "divisible/trace.hpp"

namespace divisible {

struct Coloring {
  std::vector<int> assignment;
  int palette_size = 0;
};

enum class BoundKind { PowerOfTwo, Quadratic };

std::string to_string(BoundKind kind);

/// 2^(omega-1) or C(omega+1, 2); both are 0 when omega is 0.
std::int64_t chi_bound(BoundKind kind, int omega);

struct BoundCertificate {
  int omega = 0;
  BoundKind kind = BoundKind::PowerOfTwo;
  std::int64_t bound_value = 0;
  int colors_used = 0;
};

struct ColoringOutcome {
  Coloring coloring;
  BoundCertificate certificate;
  /// One "palette" step per division node, giving the colour ranges of both sides.
  Trace trace;
};

/// Colours the two sides of each two-division from disjoint palettes; parts
/// with omega <= 1 take a single colour. Uses at most 2^(omega-1) colours.
ColoringOutcome color_via_two_division(const Graph& g, const Limits& limits = {});

/// Colours the perfect side of each perfect division exactly, with omega of
/// that side colours, and recurses on the other side with a fresh palette.
/// Uses at most C(omega+1, 2) colours.
ColoringOutcome color_via_perfect_division(const Graph& g, PerfectClassHint hint = PerfectClassHint::Any,
                                           const Limits& limits = {});

struct AuditRow {
  std::string id;
  int omega = 0;
  std::optional<int> chi;
  std::optional<int> used;
  std::optional<std::int64_t> bound;
  std::optional<std::int64_t> slack;
  /// Set when the row could not be computed, e.g. a budget or class error.
  std::optional<std::string> error;
};

/// One row per graph; per-row failures are recorded in the row.
std::vector<AuditRow> audit_bounds(const std::vector<std::pair<std::string, Graph>>& corpus, BoundKind kind,
                                   const Limits& limits = {});

std::string audit_to_csv(const std::vector<AuditRow>& rows);

}  // namespace divisible
