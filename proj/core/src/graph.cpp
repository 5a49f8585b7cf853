#include "ssig/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ssig {

void Graph::finish() {
  words_ = static_cast<std::size_t>((n_ + 63) / 64);
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  {
    std::set<std::string_view> seen;
    for (const auto& t : labels_) {
      if (!seen.insert(t).second)
        throw std::invalid_argument("duplicate vertex token: " + t);
    }
  }
  std::set<std::pair<int, int>> dedup;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("self-loop on vertex " + labels_[u]);
    dedup.emplace(std::min(u, v), std::max(u, v));
  }
  edges_.assign(dedup.begin(), dedup.end());
  finish();
}

Graph Graph::from_canonical_edges(std::vector<std::string> labels,
                                  std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n_ = static_cast<int>(labels.size());
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  g.finish();
  return g;
}

Graph Graph::from_tokens(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string_view, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index.emplace(labels[i], i);
  std::vector<std::pair<int, int>> idx_edges;
  idx_edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw std::invalid_argument("unknown vertex token: " + a);
    if (ib == index.end()) throw std::invalid_argument("unknown vertex token: " + b);
    idx_edges.emplace_back(ia->second, ib->second);
  }
  return Graph(labels, idx_edges);
}

std::optional<int> Graph::index_of(std::string_view token) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == token) return i;
  return std::nullopt;
}

bool Graph::common_neighbor(int u, int v) const {
  const std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_;
  const std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_;
  for (std::size_t w = 0; w < words_; ++w)
    if (ru[w] & rv[w]) return true;
  return false;
}

std::string joined_label(const Graph& g, std::span<const int> seq) {
  bool all_single = true;
  for (const auto& t : g.labels())
    if (t.size() != 1) { all_single = false; break; }
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && !all_single) out += '-';
    out += g.label(seq[i]);
  }
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  const int n = g.order();
  DegreeProfile p;
  p.degree.resize(n);
  p.pendant.resize(n);
  p.internal.resize(n);
  p.pendant_neighbors.assign(n, 0);
  p.internal_degree.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    p.degree[v] = g.degree(v);
    p.pendant[v] = g.degree(v) == 1;
    p.internal[v] = g.degree(v) > 1;
  }
  for (auto [u, v] : g.edges())
    if (p.pendant[u] || p.pendant[v]) ++p.pendant_edge_count;
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v))
      if (p.pendant[w]) ++p.pendant_neighbors[v];
    p.internal_degree[v] = p.degree[v] - p.pendant_neighbors[v];
  }
  return p;
}

TriangleProfile triangle_profile(const Graph& g) {
  const int n = g.order();
  TriangleProfile t;
  t.k.assign(n, 0);
  t.p.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.adjacent(nb[i], nb[j])) continue;
        const int deg2 = (g.degree(nb[i]) == 2 ? 1 : 0) + (g.degree(nb[j]) == 2 ? 1 : 0);
        if (deg2 == 2) ++t.k[v];
        if (deg2 == 1) ++t.p[v];
      }
    }
  }
  return t;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      out[id].push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

namespace {

void detour_dfs(const Graph& g, int v, int depth, std::vector<char>& visited,
                std::vector<int>& best) {
  if (depth > best[v]) best[v] = depth;
  visited[v] = 1;
  for (int w : g.neighbors(v))
    if (!visited[w]) detour_dfs(g, w, depth + 1, visited, best);
  visited[v] = 0;
}

}  // namespace

DetourProfile detour_profile(const Graph& g) {
  const int n = g.order();
  DetourProfile d;
  d.distance.assign(n, std::vector<int>(n, -1));
  d.eccentricity.assign(n, 0);
  for (int s = 0; s < n; ++s) {
    std::vector<int> best(n, -1);
    std::vector<char> visited(n, 0);
    detour_dfs(g, s, 0, visited, best);
    d.distance[s] = best;
    for (int t = 0; t < n; ++t)
      if (best[t] > d.eccentricity[s]) d.eccentricity[s] = best[t];
  }
  d.diameter = 0;
  for (int v = 0; v < n; ++v) d.diameter = std::max(d.diameter, d.eccentricity[v]);
  for (const auto& comp : components(g)) {
    int dia = 0;
    for (int v : comp) dia = std::max(dia, d.eccentricity[v]);
    d.per_component_diameter.push_back(dia);
  }
  return d;
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.common_neighbor(u, v)) return true;
  return false;
}

std::optional<int> girth(const Graph& g) {
  if (g.size() == 0) return std::nullopt;
  if (has_triangle(g)) return 3;
  // Triangle-free: shortest cycle through edge (u,v) = shortest u-v path
  // avoiding that edge, plus one.
  const int n = g.order();
  int best = -1;
  for (auto [eu, ev] : g.edges()) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[eu] = 0;
    q.push(eu);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (v == eu && w == ev) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    if (dist[ev] >= 0 && (best < 0 || dist[ev] + 1 < best)) best = dist[ev] + 1;
  }
  if (best < 0) return std::nullopt;
  return best;
}

RegularityClass regularity_class(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("regularity_class: edgeless graph");
  std::set<int> values;
  for (int v = 0; v < g.order(); ++v) values.insert(g.degree(v));
  if (values.size() == 1) return {RegularityKind::Regular, *values.begin(), *values.begin()};
  if (values.size() == 2) {
    const int lo = *values.begin();
    const int hi = *values.rbegin();
    bool every_edge_mixed = true;
    for (auto [u, v] : g.edges())
      if (g.degree(u) == g.degree(v)) { every_edge_mixed = false; break; }
    if (every_edge_mixed) return {RegularityKind::BiregularConstantSum, hi, lo};
  }
  return {RegularityKind::Other, 0, 0};
}

namespace {

// Closed-neighbourhood cover search over subsets of increasing size.
// `universe` bits must all be covered; masks[i] is the coverage of item i.
int min_cover(const std::vector<std::vector<std::uint64_t>>& masks,
              const std::vector<std::uint64_t>& universe) {
  const int items = static_cast<int>(masks.size());
  const std::size_t words = universe.size();
  auto covered = [&](const std::vector<std::uint64_t>& acc) {
    for (std::size_t w = 0; w < words; ++w)
      if ((acc[w] & universe[w]) != universe[w]) return false;
    return true;
  };
  std::vector<std::uint64_t> empty(words, 0);
  if (covered(empty)) return 0;
  for (int k = 1; k <= items; ++k) {
    std::vector<int> pick(k);
    std::vector<std::vector<std::uint64_t>> acc(k + 1, empty);
    // Lexicographic combinations with incremental union.
    int level = 0;
    pick[0] = -1;
    while (level >= 0) {
      ++pick[level];
      if (pick[level] > items - (k - level)) {
        --level;
        continue;
      }
      acc[level + 1] = acc[level];
      for (std::size_t w = 0; w < words; ++w) acc[level + 1][w] |= masks[pick[level]][w];
      if (level == k - 1) {
        if (covered(acc[level + 1])) return k;
      } else {
        ++level;
        pick[level] = pick[level - 1];
      }
    }
  }
  return items;
}

}  // namespace

int domination_number(const Graph& g) {
  const int n = g.order();
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  std::vector<std::uint64_t> universe(words, 0);
  for (int v = 0; v < n; ++v) universe[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<std::vector<std::uint64_t>> masks(n, std::vector<std::uint64_t>(words, 0));
  for (int v = 0; v < n; ++v) {
    masks[v][v >> 6] |= std::uint64_t{1} << (v & 63);
    for (int w : g.neighbors(v)) masks[v][w >> 6] |= std::uint64_t{1} << (w & 63);
  }
  return min_cover(masks, universe);
}

int edge_domination_number(const Graph& g) {
  const int m = g.size();
  if (m == 0) throw std::invalid_argument("edge_domination_number: edgeless graph");
  const std::size_t words = static_cast<std::size_t>((m + 63) / 64);
  std::vector<std::uint64_t> universe(words, 0);
  for (int e = 0; e < m; ++e) universe[e >> 6] |= std::uint64_t{1} << (e & 63);
  std::vector<std::vector<std::uint64_t>> masks(m, std::vector<std::uint64_t>(words, 0));
  const auto& edges = g.edges();
  for (int e = 0; e < m; ++e) {
    for (int f = 0; f < m; ++f) {
      auto [a, b] = edges[e];
      auto [c, d] = edges[f];
      if (a == c || a == d || b == c || b == d)
        masks[e][f >> 6] |= std::uint64_t{1} << (f & 63);
    }
  }
  return min_cover(masks, universe);
}

Graph line_graph(const Graph& g) {
  const auto& edges = g.edges();
  const int m = g.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto [u, v] : edges) {
    const int seq[2] = {u, v};
    labels.push_back(joined_label(g, seq));
  }
  std::vector<std::pair<int, int>> line_edges;
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      auto [a, b] = edges[e];
      auto [c, d] = edges[f];
      if (a == c || a == d || b == c || b == d) line_edges.emplace_back(e, f);
    }
  }
  return Graph::from_canonical_edges(std::move(labels), std::move(line_edges));
}

}  // namespace ssig
