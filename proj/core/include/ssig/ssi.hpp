#pragma once

#include <vector>

#include "ssig/arcs.hpp"
#include "ssig/graph.hpp"

namespace ssig {

/// The s-shunt intersection graph A_s(G): one vertex per shuntable s-arc
/// of the host, two vertices adjacent when their arcs share at least one
/// host vertex. Vertex i of `graph` is the arc labels[i]; graph labels
/// are the joined host tokens of that arc.
struct SsiGraph {
  Graph graph;
  std::vector<Arc> labels;  // enumeration order of the surviving arcs
  int source_s = 0;
  Graph source;

  bool empty() const { return graph.order() == 0; }
};

/// Builds A_s(G). The result may be empty (for instance when s reaches the
/// detour diameter); emptiness is a value, not an error.
/// Throws std::invalid_argument when s < 1.
SsiGraph build_ssi(const Graph& g, int s);

/// Degree of the vertex labelled by `label`. Throws std::invalid_argument
/// when the arc is not a vertex of A.
int ssi_degree(const SsiGraph& a, const Arc& label);

/// For each edge of g (in g.edges() order) picks a shuntable orientation
/// (the one starting at the pendant endpoint when there is one, otherwise
/// the one starting at the smaller index) and returns the corresponding
/// vertex of A1. The image induces the line graph of g inside A1.
/// Requires a1 = build_ssi(g, 1) and g connected with at least three
/// vertices; throws std::invalid_argument otherwise.
std::vector<int> line_graph_embedding(const Graph& g, const SsiGraph& a1);

}  // namespace ssig
