#include "ssig/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ssig {

namespace {

// One round of colour refinement. Colours are small dense integers shared
// between both graphs so histograms stay comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& g, const Graph& h) {
  std::vector<int> cg(g.order()), ch(h.order());
  for (int v = 0; v < g.order(); ++v) cg[v] = g.degree(v);
  for (int v = 0; v < h.order(); ++v) ch[v] = h.degree(v);
  const int rounds = g.order();
  for (int r = 0; r < rounds; ++r) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    auto signature = [](const std::vector<int>& colors, const Graph& gr, int v) {
      std::vector<int> sig;
      sig.reserve(gr.neighbors(v).size());
      for (int w : gr.neighbors(v)) sig.push_back(colors[w]);
      std::sort(sig.begin(), sig.end());
      return sig;
    };
    std::vector<std::pair<int, std::vector<int>>> sg(g.order()), sh(h.order());
    for (int v = 0; v < g.order(); ++v) sg[v] = {cg[v], signature(cg, g, v)};
    for (int v = 0; v < h.order(); ++v) sh[v] = {ch[v], signature(ch, h, v)};
    for (const auto& s : sg) palette.emplace(s, 0);
    for (const auto& s : sh) palette.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : palette) id = next++;
    bool changed = false;
    for (int v = 0; v < g.order(); ++v) {
      int c = palette[sg[v]];
      if (c != cg[v]) changed = true;
      cg[v] = c;
    }
    for (int v = 0; v < h.order(); ++v) {
      int c = palette[sh[v]];
      if (c != ch[v]) changed = true;
      ch[v] = c;
    }
    if (!changed) break;
  }
  return {cg, ch};
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<int> g_to_h;
  std::vector<int> h_used;
  std::vector<int> order;  // vertices of g in matching order

  bool extend(std::size_t pos) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    for (int w = 0; w < h.order(); ++w) {
      if (h_used[w] || ch[w] != cg[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i) {
        const int u = order[i];
        if (g.adjacent(u, v) != h.adjacent(g_to_h[u], w)) ok = false;
      }
      if (!ok) continue;
      g_to_h[v] = w;
      h_used[w] = 1;
      if (extend(pos + 1)) return true;
      h_used[w] = 0;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.order() == 0) return true;

  auto [cg, ch] = refine_colors(g, h);
  std::map<int, int> hist_g, hist_h;
  for (int c : cg) ++hist_g[c];
  for (int c : ch) ++hist_h[c];
  if (hist_g != hist_h) return false;

  // Match rare colours first, preferring vertices adjacent to already
  // matched ones so the adjacency constraints bite early.
  IsoSearch search{g, h, cg, ch, std::vector<int>(g.order(), -1),
                   std::vector<int>(h.order(), 0), {}};
  std::vector<char> placed(g.order(), 0);
  for (int step = 0; step < g.order(); ++step) {
    int best = -1;
    bool best_attached = false;
    for (int v = 0; v < g.order(); ++v) {
      if (placed[v]) continue;
      bool attached = false;
      for (int u : g.neighbors(v))
        if (placed[u]) { attached = true; break; }
      if (best < 0 || (attached && !best_attached) ||
          (attached == best_attached && hist_g[cg[v]] < hist_g[cg[best]])) {
        best = v;
        best_attached = attached;
      }
    }
    placed[best] = 1;
    search.order.push_back(best);
  }
  return search.extend(0);
}

bool is_induced_embedding(const Graph& g, const Graph& h, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != h.order())
    throw std::invalid_argument("is_induced_embedding: map size mismatch");
  std::vector<char> used(g.order(), 0);
  for (int img : map) {
    if (img < 0 || img >= g.order())
      throw std::invalid_argument("is_induced_embedding: image out of range");
    if (used[img]) throw std::invalid_argument("is_induced_embedding: map not injective");
    used[img] = 1;
  }
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (h.adjacent(i, j) != g.adjacent(map[i], map[j])) return false;
  return true;
}

}  // namespace ssig
