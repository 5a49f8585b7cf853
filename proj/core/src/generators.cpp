#include "ssig/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "ssig/isomorphism.hpp"

namespace ssig {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count, int from = 1) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (int i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(from + i));
  return labels;
}

// Documented generator for reproducible corpora: the 64-bit linear
// congruential step x <- 6364136223846793005*x + 1442695040888963407.
struct Lcg {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }
};

void expect_params(const GraphFamily& f, std::size_t min_count, std::size_t max_count) {
  if (f.parameters.size() < min_count || f.parameters.size() > max_count)
    throw std::invalid_argument("generate: wrong parameter count for family " +
                                family_kind_token(f.kind));
}

std::string params_suffix(const std::vector<long long>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

std::optional<GraphFamily::Kind> family_kind_from_token(const std::string& token) {
  using Kind = GraphFamily::Kind;
  static const std::map<std::string, Kind> table = {
      {"path", Kind::Path},
      {"cycle", Kind::Cycle},
      {"star", Kind::Star},
      {"bistar", Kind::Bistar},
      {"complete", Kind::Complete},
      {"complete_bipartite", Kind::CompleteBipartite},
      {"circulant", Kind::Circulant},
      {"petersen", Kind::Petersen},
      {"random_gnp", Kind::RandomGnp},
      {"all_connected", Kind::AllConnected},
  };
  auto it = table.find(token);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string family_kind_token(GraphFamily::Kind kind) {
  using Kind = GraphFamily::Kind;
  switch (kind) {
    case Kind::Path: return "path";
    case Kind::Cycle: return "cycle";
    case Kind::Star: return "star";
    case Kind::Bistar: return "bistar";
    case Kind::Complete: return "complete";
    case Kind::CompleteBipartite: return "complete_bipartite";
    case Kind::Circulant: return "circulant";
    case Kind::Petersen: return "petersen";
    case Kind::RandomGnp: return "random_gnp";
    case Kind::AllConnected: return "all_connected";
  }
  return "?";
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(numbered("v", n), edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(numbered("v", n), edges);
}

Graph make_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star: leaf count must be at least 1");
  std::vector<std::string> labels{"c"};
  auto leaf_labels = numbered("u", leaves);
  labels.insert(labels.end(), leaf_labels.begin(), leaf_labels.end());
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(std::move(labels), edges);
}

Graph make_bistar(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bistar: both sides must be at least 1");
  std::vector<std::string> labels{"x1", "x2"};
  for (const auto& t : numbered("u", m)) labels.push_back(t);
  for (const auto& t : numbered("v", n)) labels.push_back(t);
  std::vector<std::pair<int, int>> edges{{0, 1}};
  for (int i = 0; i < m; ++i) edges.emplace_back(0, 2 + i);
  for (int i = 0; i < n; ++i) edges.emplace_back(1, 2 + m + i);
  return Graph(std::move(labels), edges);
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(numbered("v", n), edges);
}

Graph make_complete_bipartite(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("complete_bipartite: both sides must be at least 1");
  std::vector<std::string> labels = numbered("a", m);
  for (const auto& t : numbered("b", n)) labels.push_back(t);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(std::move(labels), edges);
}

namespace {

Graph make_circulant(const std::vector<long long>& params) {
  if (params.size() < 2) throw std::invalid_argument("circulant: need n and at least one jump");
  const int n = static_cast<int>(params[0]);
  if (n < 3) throw std::invalid_argument("circulant: n must be at least 3");
  std::vector<long long> jumps(params.begin() + 1, params.end());
  std::sort(jumps.begin(), jumps.end());
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (jumps[i] < 1 || jumps[i] > n / 2)
      throw std::invalid_argument("circulant: jumps must lie in 1..n/2");
    if (i > 0 && jumps[i] == jumps[i - 1])
      throw std::invalid_argument("circulant: duplicate jump");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (long long j : jumps) edges.emplace_back(i, static_cast<int>((i + j) % n));
  return Graph(numbered("v", n), edges);
}

Graph make_petersen() {
  std::vector<std::string> labels;
  for (int i = 0; i < 5; ++i) labels.push_back("o" + std::to_string(i));
  for (int i = 0; i < 5; ++i) labels.push_back("i" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(std::move(labels), edges);
}

Graph make_gnp(const GraphFamily& f) {
  expect_params(f, 2, 3);
  const int n = static_cast<int>(f.parameters[0]);
  const long long num = f.parameters[1];
  const long long den = f.parameters.size() == 3 ? f.parameters[2] : 100;
  if (n < 1) throw std::invalid_argument("random_gnp: n must be at least 1");
  if (den <= 0 || num < 0 || num > den)
    throw std::invalid_argument("random_gnp: probability must satisfy 0 <= num/den <= 1");
  Lcg rng{f.seed.value_or(0)};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (static_cast<long long>(rng.next() % static_cast<std::uint64_t>(den)) < num)
        edges.emplace_back(i, j);
    }
  }
  return Graph(numbered("v", n), edges);
}

}  // namespace

namespace {

// Tiny adjacency image for the exhaustive scan: one byte row per vertex.
using Rows = std::array<std::uint8_t, 7>;

// Per-vertex signature (degree, sorted neighbour degrees, own triangle
// count) packed into 32 bits; the sorted signature vector plus the global
// triangle count buckets candidates before the exact isomorphism test.
using BucketKey = std::array<std::uint32_t, 8>;

BucketKey bucket_key(const Rows& rows, int n) {
  BucketKey key{};
  int triangles = 0;
  for (int v = 0; v < n; ++v) {
    std::uint32_t sig = static_cast<std::uint32_t>(std::popcount(rows[v])) << 24;
    std::array<int, 7> nbdeg{};
    int count = 0;
    int tri = 0;
    for (int w = 0; w < n; ++w) {
      if (!(rows[v] >> w & 1)) continue;
      nbdeg[count++] = std::popcount(rows[w]);
      tri += std::popcount(static_cast<std::uint8_t>(rows[v] & rows[w] & ~((2u << w) - 1)));
    }
    std::sort(nbdeg.begin(), nbdeg.begin() + count);
    for (int i = 0; i < count; ++i) sig = sig << 3 | static_cast<std::uint32_t>(nbdeg[i]);
    key[v] = sig << 3 | static_cast<std::uint32_t>(tri);
    triangles += tri;
  }
  std::sort(key.begin(), key.begin() + n);
  key[7] = static_cast<std::uint32_t>(triangles);
  return key;
}

// Permutation backtracking restricted to equal per-vertex signatures.
bool rows_isomorphic(const Rows& a, const Rows& b, int n) {
  std::array<std::uint32_t, 7> sa{}, sb{};
  {
    auto vertex_sig = [n](const Rows& rows, int v) {
      std::uint32_t sig = static_cast<std::uint32_t>(std::popcount(rows[v])) << 21;
      std::array<int, 7> nbdeg{};
      int count = 0;
      for (int w = 0; w < n; ++w)
        if (rows[v] >> w & 1) nbdeg[count++] = std::popcount(rows[w]);
      std::sort(nbdeg.begin(), nbdeg.begin() + count);
      for (int i = 0; i < count; ++i) sig = sig << 3 | static_cast<std::uint32_t>(nbdeg[i]);
      return sig;
    };
    for (int v = 0; v < n; ++v) {
      sa[v] = vertex_sig(a, v);
      sb[v] = vertex_sig(b, v);
    }
  }
  std::array<int, 7> map{};
  std::uint8_t used = 0;
  auto place = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used >> w & 1) continue;
      if (sa[v] != sb[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (((a[v] >> u) & 1) != ((b[w] >> map[u]) & 1)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used |= std::uint8_t(1) << w;
      if (self(self, v + 1)) return true;
      used &= ~(std::uint8_t(1) << w);
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace

std::vector<Graph> all_connected(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("all_connected: n must lie in 1..7");
  const std::string alphabet = "abcdefg";
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, alphabet[i]));

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int bits = static_cast<int>(pairs.size());
  const std::uint8_t full = static_cast<std::uint8_t>((1u << n) - 1);

  std::map<BucketKey, std::vector<Rows>> buckets;
  std::vector<Graph> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Rows rows{};
    for (int b = 0; b < bits; ++b) {
      if (mask >> b & 1) {
        rows[pairs[b].first] |= std::uint8_t(1) << pairs[b].second;
        rows[pairs[b].second] |= std::uint8_t(1) << pairs[b].first;
      }
    }
    std::uint8_t reached = 1;
    for (;;) {
      std::uint8_t next = reached;
      for (int v = 0; v < n; ++v)
        if (reached >> v & 1) next |= rows[v];
      if (next == reached) break;
      reached = next;
    }
    if (reached != full) continue;

    auto& bucket = buckets[bucket_key(rows, n)];
    bool fresh = true;
    for (const Rows& rep : bucket) {
      if (rows_isomorphic(rows, rep, n)) {
        fresh = false;
        break;
      }
    }
    if (!fresh) continue;
    bucket.push_back(rows);

    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < bits; ++b)
      if (mask >> b & 1) edges.push_back(pairs[b]);
    reps.emplace_back(labels, edges);
  }
  return reps;
}

std::vector<FamilyMember> generate(const GraphFamily& f) {
  using Kind = GraphFamily::Kind;
  std::vector<FamilyMember> out;
  const std::string base = family_kind_token(f.kind) + params_suffix(f.parameters);
  switch (f.kind) {
    case Kind::Path:
      expect_params(f, 1, 1);
      out.push_back({base, make_path(static_cast<int>(f.parameters[0]))});
      break;
    case Kind::Cycle:
      expect_params(f, 1, 1);
      out.push_back({base, make_cycle(static_cast<int>(f.parameters[0]))});
      break;
    case Kind::Star:
      expect_params(f, 1, 1);
      out.push_back({base, make_star(static_cast<int>(f.parameters[0]))});
      break;
    case Kind::Bistar:
      expect_params(f, 2, 2);
      out.push_back({base, make_bistar(static_cast<int>(f.parameters[0]),
                                       static_cast<int>(f.parameters[1]))});
      break;
    case Kind::Complete:
      expect_params(f, 1, 1);
      out.push_back({base, make_complete(static_cast<int>(f.parameters[0]))});
      break;
    case Kind::CompleteBipartite:
      expect_params(f, 2, 2);
      out.push_back({base, make_complete_bipartite(static_cast<int>(f.parameters[0]),
                                                   static_cast<int>(f.parameters[1]))});
      break;
    case Kind::Circulant:
      out.push_back({base, make_circulant(f.parameters)});
      break;
    case Kind::Petersen:
      expect_params(f, 0, 0);
      out.push_back({"petersen", make_petersen()});
      break;
    case Kind::RandomGnp: {
      Graph g = make_gnp(f);
      out.push_back({base + "@" + std::to_string(f.seed.value_or(0)), std::move(g)});
      break;
    }
    case Kind::AllConnected: {
      expect_params(f, 1, 1);
      auto graphs = all_connected(static_cast<int>(f.parameters[0]));
      char idx[8];
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::snprintf(idx, sizeof idx, "%04zu", i);
        out.push_back({base + "#" + idx, std::move(graphs[i])});
      }
      break;
    }
  }
  return out;
}

}  // namespace ssig
