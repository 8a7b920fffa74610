#pragma once

#include "divisible/graph.hpp"

namespace divisible::named {

/// P_n: 0-1-...-(n-1).
Graph path(int n);
/// C_n: 0-1-...-(n-1)-0.
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);
/// Triangle {1,2,3} with pendant edges 0-1 and 2-4.
Graph bull();
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5).
Graph petersen();

}  // namespace divisible::named
