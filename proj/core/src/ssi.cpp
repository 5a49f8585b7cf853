#include "ssig/ssi.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ssig {

SsiGraph build_ssi(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("build_ssi: s must be at least 1");
  SsiGraph out;
  out.source_s = s;
  out.source = g;

  for (Arc& a : enumerate_arcs(g, s))
    if (is_shuntable(g, a)) out.labels.push_back(std::move(a));

  const int k = static_cast<int>(out.labels.size());
  std::vector<std::string> labels;
  labels.reserve(k);
  for (const Arc& a : out.labels) labels.push_back(joined_label(g, a.vertices));

  // Intersection adjacency through per-host-vertex incidence lists: arcs
  // sharing any host vertex meet inside that vertex's bucket.
  std::vector<std::vector<int>> through(g.order());
  for (int i = 0; i < k; ++i)
    for (int v : out.labels[i].vertices) through[v].push_back(i);

  const std::size_t words = static_cast<std::size_t>((k + 63) / 64);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k) * words, 0);
  for (int v = 0; v < g.order(); ++v) {
    const auto& bucket = through[v];
    for (std::size_t x = 0; x < bucket.size(); ++x) {
      for (std::size_t y = x + 1; y < bucket.size(); ++y) {
        const int i = bucket[x], j = bucket[y];
        rows[static_cast<std::size_t>(i) * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
      }
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bitsw = rows[static_cast<std::size_t>(i) * words + w];
      while (bitsw) {
        const int j = static_cast<int>(w * 64) + std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        edges.emplace_back(i, j);
      }
    }
  }
  out.graph = Graph::from_canonical_edges(std::move(labels), std::move(edges));
  return out;
}

int ssi_degree(const SsiGraph& a, const Arc& label) {
  auto it = std::lower_bound(a.labels.begin(), a.labels.end(), label);
  if (it == a.labels.end() || *it != label)
    throw std::invalid_argument("ssi_degree: arc is not a vertex");
  return a.graph.degree(static_cast<int>(it - a.labels.begin()));
}

std::vector<int> line_graph_embedding(const Graph& g, const SsiGraph& a1) {
  if (g.order() < 3 || !is_connected(g))
    throw std::invalid_argument("line_graph_embedding: host must be connected with n >= 3");
  if (a1.source_s != 1 || !(a1.source == g))
    throw std::invalid_argument("line_graph_embedding: A1 was not built from this host");

  std::vector<int> map;
  map.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) {
    Arc arc{{u, v}};
    if (g.degree(v) == 1) arc = Arc{{v, u}};
    auto it = std::lower_bound(a1.labels.begin(), a1.labels.end(), arc);
    if (it == a1.labels.end() || *it != arc)
      throw std::invalid_argument("line_graph_embedding: chosen orientation missing from A1");
    map.push_back(static_cast<int>(it - a1.labels.begin()));
  }
  return map;
}

}  // namespace ssig
