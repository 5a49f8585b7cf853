#pragma once

#include <compare>
#include <vector>

#include "ssig/graph.hpp"

namespace ssig {

/// Directed walk on s+1 pairwise-distinct vertices with consecutive
/// adjacency in the host graph. Stored as the explicit index sequence;
/// ordering is lexicographic on the sequence.
struct Arc {
  std::vector<int> vertices;

  int s() const { return static_cast<int>(vertices.size()) - 1; }
  int first() const { return vertices.front(); }
  int last() const { return vertices.back(); }
  bool contains(int v) const;

  auto operator<=>(const Arc&) const = default;
};

/// True when `a.vertices` is a valid s-arc of `g` (s >= 1, all distinct,
/// consecutive vertices adjacent).
bool is_valid_arc(const Graph& g, const Arc& a);

Arc reverse(const Arc& a);

/// Drops the first vertex. Throws std::invalid_argument when s == 1 (the
/// result would not be an arc here, where s >= 1 throughout).
Arc head(const Arc& a);

/// Drops the last vertex. Throws std::invalid_argument when s == 1.
Arc tail(const Arc& a);

/// All s-arcs of `g` on distinct vertices, each direction listed
/// separately, in lexicographic order of the index sequence.
/// Throws std::invalid_argument when s < 1.
std::vector<Arc> enumerate_arcs(const Graph& g, int s);

/// True when `a` can be pushed one step onto `b`: the combined sequence
/// a[0], b[0..s] is an (s+1)-arc on distinct vertices with tail a and
/// head b. Throws std::invalid_argument when the two arcs disagree on s.
bool can_shunt(const Graph& g, const Arc& a, const Arc& b);

/// True when some neighbour of a's last vertex lies outside a, i.e. a
/// shunts onto at least one other s-arc.
bool is_shuntable(const Graph& g, const Arc& a);

/// All s-arcs with, per arc, the indices of the arcs it can be shunted
/// onto. Arc order matches enumerate_arcs.
struct ShuntDigraph {
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> successors;
};

ShuntDigraph shunt_digraph(const Graph& g, int s);

}  // namespace ssig
