#pragma once

#include <vector>

#include "ssig/graph.hpp"

namespace ssig {

/// Adjacency-preserving bijection test. Colour refinement (degree and
/// iterated neighbourhood multisets) narrows candidates, then backtracking
/// settles the rest. Practical up to a few dozen vertices.
bool is_isomorphic(const Graph& g, const Graph& h);

/// Checks that `map` (vertex of h -> vertex of g, injective) preserves both
/// adjacency and non-adjacency. Throws std::invalid_argument when the map
/// is not injective or out of range.
bool is_induced_embedding(const Graph& g, const Graph& h, const std::vector<int>& map);

}  // namespace ssig
