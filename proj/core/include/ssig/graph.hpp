#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssig {

/// Immutable finite simple undirected graph. Vertices carry string tokens
/// externally and dense indices 0..n-1 internally; all algorithms work on
/// indices and translate back through the label map for reporting.
class Graph {
 public:
  Graph() = default;

  /// Index-based construction. Edges are deduplicated; self-loops,
  /// out-of-range endpoints and duplicate labels are rejected.
  Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

  /// Token-based construction: every token in `edges` must appear in
  /// `labels`, and no pair may join a token to itself.
  static Graph from_tokens(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& edges);

  /// Trusted fast path for construction sites that already hold a sorted,
  /// duplicate-free edge list with u < v on every pair (ssi and line graph
  /// builders). Skips validation.
  static Graph from_canonical_edges(std::vector<std::string> labels,
                                    std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  std::optional<int> index_of(std::string_view token) const;

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges as index pairs (u < v), sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// True when some neighbour of `u` and `v` is shared, i.e. the two
  /// closed rows intersect outside {u,v}. Used for fast triangle tests.
  bool common_neighbor(int u, int v) const;

  bool operator==(const Graph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  void finish();  // derives adjacency structures from labels_ + edges_

  int n_ = 0;
  std::size_t words_ = 0;                  // 64-bit words per adjacency row
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;      // sorted neighbour lists
  std::vector<std::uint64_t> bits_;        // n_ rows of `words_` words
  std::vector<std::pair<int, int>> edges_;
};

/// Joins host-vertex tokens into a single display token: plain
/// concatenation when every label of `g` is one character, otherwise
/// hyphen-separated.
std::string joined_label(const Graph& g, std::span<const int> seq);

struct DegreeProfile {
  std::vector<int> degree;
  std::vector<bool> pendant;            // degree == 1
  std::vector<bool> internal;           // degree > 1
  int pendant_edge_count = 0;           // edges with a degree-1 endpoint
  std::vector<int> pendant_neighbors;   // per-vertex count of degree-1 neighbours
  std::vector<int> internal_degree;     // degree - pendant_neighbors
};

DegreeProfile degree_profile(const Graph& g);

/// Per-vertex triangle counts split by how many of the two companion
/// vertices have degree exactly 2 in the host graph.
struct TriangleProfile {
  std::vector<int> k;  // both companions of degree 2
  std::vector<int> p;  // exactly one companion of degree 2
};

TriangleProfile triangle_profile(const Graph& g);

/// Connected components, ordered by least contained vertex; vertices
/// within a component ascend.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

/// Longest-simple-path distances, computed by exhaustive DFS. Exponential;
/// meant for hosts of roughly 16 vertices or fewer.
struct DetourProfile {
  std::vector<std::vector<int>> distance;   // -1 when no path exists
  std::vector<int> eccentricity;            // max distance to a reachable vertex
  int diameter = 0;                         // max eccentricity over all vertices
  std::vector<int> per_component_diameter;  // in components() order
};

DetourProfile detour_profile(const Graph& g);

/// Length of a shortest cycle; empty for forests.
std::optional<int> girth(const Graph& g);

bool has_triangle(const Graph& g);

enum class RegularityKind { Regular, BiregularConstantSum, Other };

struct RegularityClass {
  RegularityKind kind = RegularityKind::Other;
  int a = 0;  // Regular: the degree. Biregular: larger degree value.
  int b = 0;  // Biregular: smaller degree value.

  bool operator==(const RegularityClass&) const = default;
};

/// Classifies degree structure: Regular(k), or exactly two degree values
/// with every edge mixed (constant adjacent degree sum), or Other.
/// Throws std::invalid_argument on an edgeless graph.
RegularityClass regularity_class(const Graph& g);

/// Exact domination number, by subset search in increasing cardinality.
int domination_number(const Graph& g);

/// Exact edge domination number. Throws std::invalid_argument when the
/// graph has no edges.
int edge_domination_number(const Graph& g);

/// Line graph: one vertex per edge of `g` (in edges() order, labelled by
/// joined endpoint tokens), adjacent when the edges share an endpoint.
Graph line_graph(const Graph& g);

}  // namespace ssig
