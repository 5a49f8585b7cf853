#include "ssig/formulas.hpp"

#include <stdexcept>

namespace ssig {

namespace {

Rational binom2(long long x) { return Rational(x * (x - 1), 2); }

bool connected_with(const Graph& g, int min_order) {
  return g.order() >= min_order && is_connected(g);
}

}  // namespace

long long FormulaResult::as_integer() const {
  if (!applicable) throw std::logic_error(name + ": not applicable");
  if (value.denominator() != 1) throw std::logic_error(name + ": value is not an integer");
  return value.numerator();
}

FormulaResult predict_order_a1(const Graph& g) {
  FormulaResult r{"order_a1", false, 0};
  if (!connected_with(g, 3)) return r;
  const auto prof = degree_profile(g);
  r.applicable = true;
  r.value = Rational(2LL * g.size() - prof.pendant_edge_count);
  return r;
}

FormulaResult predict_size_a1(const Graph& g) {
  FormulaResult r{"size_a1", false, 0};
  if (!connected_with(g, 3)) return r;
  const auto prof = degree_profile(g);
  Rational sum{0};
  for (int v = 0; v < g.order(); ++v) {
    if (!prof.internal[v]) continue;
    const long long term = 2LL * prof.degree[v] - prof.pendant_neighbors[v];
    sum += Rational(term * term);
  }
  r.applicable = true;
  r.value = sum / 2 - Rational(3LL * g.size()) + Rational(5LL * prof.pendant_edge_count, 2);
  return r;
}

FormulaResult predict_degree_a1(const Graph& g, const Arc& a) {
  if (a.s() != 1 || !is_valid_arc(g, a) || !is_shuntable(g, a))
    throw std::invalid_argument("predict_degree_a1: arc is not a vertex of A1");
  FormulaResult r{"degree_a1", true, 0};
  const int u = a.vertices[0];
  const int v = a.vertices[1];
  auto pendant_neighbors_excluding = [&](int x, int excluded) {
    int count = 0;
    for (int w : g.neighbors(x))
      if (w != excluded && g.degree(w) == 1) ++count;
    return count;
  };
  const int m_u = pendant_neighbors_excluding(u, v);
  const int m_v = pendant_neighbors_excluding(v, u);
  if (g.degree(u) > 1 && g.degree(v) > 1) {
    r.value = Rational(2LL * (g.degree(u) + g.degree(v) - 2) - (m_u + m_v) + 1);
  } else {
    // A vertex of A1 never ends at a pendant, so the pendant endpoint is u.
    r.value = Rational(2LL * (g.degree(v) - 1) - m_v);
  }
  return r;
}

FormulaResult predict_order_a2(const Graph& g, OrderA2Variant variant) {
  FormulaResult r{"order_a2", false, 0};
  switch (variant) {
    case OrderA2Variant::General:
      break;
    case OrderA2Variant::C3Free:
      r.name = "order_a2_c3free";
      if (has_triangle(g)) return r;
      break;
    case OrderA2Variant::C3FreeNoPendant: {
      r.name = "order_a2_c3free_min_degree_2";
      if (has_triangle(g)) return r;
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 1) return r;
      break;
    }
    case OrderA2Variant::MinDegreeAbove2: {
      r.name = "order_a2_min_degree_3";
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 2) return r;
      break;
    }
  }
  if (!is_connected(g)) return r;
  const auto prof = degree_profile(g);
  const auto tri = triangle_profile(g);
  Rational sum{0};
  for (int v = 0; v < g.order(); ++v) {
    if (!prof.internal[v]) continue;
    const long long ideg = prof.internal_degree[v];
    sum += Rational(prof.pendant_neighbors[v] * ideg) + 2 * binom2(ideg) -
           Rational(2LL * tri.k[v] + tri.p[v]);
  }
  r.applicable = true;
  r.value = sum;
  return r;
}

FormulaResult predict_p3_count(const Graph& g) {
  FormulaResult r{"p3_count", true, 0};
  for (int v = 0; v < g.order(); ++v) r.value += binom2(g.degree(v));
  return r;
}

long long predict_regular_degree_a1(int k) {
  if (k <= 1) throw std::invalid_argument("predict_regular_degree_a1: k must exceed 1");
  return 4LL * k - 3;
}

int completeness_threshold(int n) {
  if (n < 2) throw std::invalid_argument("completeness_threshold: n must be at least 2");
  return n / 2;
}

}  // namespace ssig
