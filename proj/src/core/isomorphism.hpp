#pragma once

#include "core/graph.hpp"

namespace nsgraph {

// Adjacency-preserving bijection test by backtracking, pruned on degrees.
// Both graphs must have at most 10 vertices (order_too_large otherwise).
bool isomorphic(const IdealGraph& G, const IdealGraph& H);

}  // namespace nsgraph
