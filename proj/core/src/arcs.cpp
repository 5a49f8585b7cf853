#include "ssig/arcs.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssig {

bool Arc::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool is_valid_arc(const Graph& g, const Arc& a) {
  if (a.s() < 1) return false;
  std::vector<char> seen(g.order(), 0);
  for (int v : a.vertices) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < a.vertices.size(); ++i)
    if (!g.adjacent(a.vertices[i], a.vertices[i + 1])) return false;
  return true;
}

Arc reverse(const Arc& a) {
  Arc r = a;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

Arc head(const Arc& a) {
  if (a.s() < 2) throw std::invalid_argument("head: arc with s = 1");
  return Arc{{a.vertices.begin() + 1, a.vertices.end()}};
}

Arc tail(const Arc& a) {
  if (a.s() < 2) throw std::invalid_argument("tail: arc with s = 1");
  return Arc{{a.vertices.begin(), a.vertices.end() - 1}};
}

namespace {

void extend(const Graph& g, std::vector<int>& seq, std::vector<char>& used, int target_len,
            std::vector<Arc>& out) {
  if (static_cast<int>(seq.size()) == target_len) {
    out.push_back(Arc{seq});
    return;
  }
  for (int w : g.neighbors(seq.back())) {
    if (used[w]) continue;
    used[w] = 1;
    seq.push_back(w);
    extend(g, seq, used, target_len, out);
    seq.pop_back();
    used[w] = 0;
  }
}

}  // namespace

std::vector<Arc> enumerate_arcs(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("enumerate_arcs: s must be at least 1");
  std::vector<Arc> out;
  std::vector<int> seq;
  std::vector<char> used(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    seq.assign(1, v);
    used[v] = 1;
    extend(g, seq, used, s + 1, out);
    used[v] = 0;
  }
  return out;
}

bool can_shunt(const Graph& g, const Arc& a, const Arc& b) {
  if (a.s() != b.s()) throw std::invalid_argument("can_shunt: mismatched s");
  const int s = a.s();
  for (int i = 0; i < s; ++i)
    if (a.vertices[i + 1] != b.vertices[i]) return false;
  if (!g.adjacent(a.last(), b.last())) return false;
  // b's own vertices already repeat a[1..s]; the combined sequence is
  // distinct exactly when b's new endpoint avoids a's first vertex too.
  return !a.contains(b.last());
}

bool is_shuntable(const Graph& g, const Arc& a) {
  for (int w : g.neighbors(a.last()))
    if (!a.contains(w)) return true;
  return false;
}

ShuntDigraph shunt_digraph(const Graph& g, int s) {
  ShuntDigraph d;
  d.arcs = enumerate_arcs(g, s);
  d.successors.resize(d.arcs.size());
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const Arc& a = d.arcs[i];
    for (int w : g.neighbors(a.last())) {
      if (a.contains(w)) continue;
      Arc b{{a.vertices.begin() + 1, a.vertices.end()}};
      b.vertices.push_back(w);
      auto it = std::lower_bound(d.arcs.begin(), d.arcs.end(), b);
      d.successors[i].push_back(static_cast<int>(it - d.arcs.begin()));
    }
    std::sort(d.successors[i].begin(), d.successors[i].end());
  }
  return d;
}

}  // namespace ssig
