#pragma once

#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace nsgraph {

// n/2 + 1 for even n, (n+1)/2 for odd n. Requires n >= 1.
int clique_size_formula(int n);

// Exact maximum clique size, branch and bound on bitset neighbourhoods.
// Throws order_too_large above 32 vertices; empty graph gives 0.
int clique_number(const IdealGraph& G);

// First clique of size k found by depth-first search trying vertices in
// descending index order (the dense end of ideal graphs). Works at any
// order. Returns ascending vertex indices, or nothing.
std::optional<std::vector<int>> find_clique(const IdealGraph& G, int k);

}  // namespace nsgraph
