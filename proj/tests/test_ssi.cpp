#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "ssig/generators.hpp"
#include "ssig/isomorphism.hpp"
#include "ssig/ssi.hpp"

using namespace ssig;

namespace {

Graph labeled_bistar_32() {
  return Graph::from_tokens(
      {"u1", "u2", "u3", "x1", "x2", "v1", "v2"},
      {{"u1", "x1"}, {"u2", "x1"}, {"u3", "x1"}, {"x1", "x2"}, {"v1", "x2"}, {"v2", "x2"}});
}

Arc arc_of(const Graph& g, const std::vector<std::string>& tokens) {
  Arc a;
  for (const auto& t : tokens) a.vertices.push_back(*g.index_of(t));
  return a;
}

std::set<std::pair<std::string, std::string>> edge_labels(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) {
    auto a = g.label(u), b = g.label(v);
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

}  // namespace

TEST_CASE("A1 of the small bistar has the exact expected labelled adjacency") {
  Graph s32 = labeled_bistar_32();
  SsiGraph a1 = build_ssi(s32, 1);

  REQUIRE(a1.graph.order() == 7);
  REQUIRE(a1.graph.size() == 15);

  const std::set<std::string> expected_vertices{"u1-x1", "u2-x1", "u3-x1", "x1-x2",
                                                "x2-x1", "v1-x2", "v2-x2"};
  CHECK(std::set<std::string>(a1.graph.labels().begin(), a1.graph.labels().end()) ==
        expected_vertices);

  std::set<std::pair<std::string, std::string>> expected;
  auto edge = [&](std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    expected.emplace(a, b);
  };
  // The three u-arcs pairwise and against both central arcs.
  edge("u1-x1", "u2-x1");
  edge("u1-x1", "u3-x1");
  edge("u2-x1", "u3-x1");
  for (const char* u : {"u1-x1", "u2-x1", "u3-x1"}) {
    edge(u, "x1-x2");
    edge(u, "x2-x1");
  }
  // The two v-arcs together and against both central arcs.
  edge("v1-x2", "v2-x2");
  for (const char* v : {"v1-x2", "v2-x2"}) {
    edge(v, "x1-x2");
    edge(v, "x2-x1");
  }
  edge("x1-x2", "x2-x1");
  CHECK(edge_labels(a1.graph) == expected);
}

TEST_CASE("A2 of the bistar is K5, A3 is empty") {
  Graph s32 = labeled_bistar_32();
  SsiGraph a2 = build_ssi(s32, 2);
  REQUIRE(a2.graph.order() == 5);
  CHECK(a2.graph.size() == 10);
  CHECK(is_isomorphic(a2.graph, make_complete(5)));
  const std::set<std::string> expected{"u1-x1-x2", "u2-x1-x2", "u3-x1-x2", "v1-x2-x1",
                                       "v2-x2-x1"};
  CHECK(std::set<std::string>(a2.graph.labels().begin(), a2.graph.labels().end()) == expected);

  CHECK(build_ssi(s32, 3).empty());
  CHECK_THROWS_AS(build_ssi(s32, 0), std::invalid_argument);
}

TEST_CASE("no 3-si graph exists for any bistar") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) CHECK(build_ssi(make_bistar(m, n), 3).empty());
}

TEST_CASE("A2 of P4 is K2 on the two long arcs") {
  Graph p4 = Graph::from_tokens({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  SsiGraph a2 = build_ssi(p4, 2);
  REQUIRE(a2.graph.order() == 2);
  CHECK(a2.graph.size() == 1);
  CHECK(a2.graph.labels() == std::vector<std::string>{"abc", "dcb"});
}

TEST_CASE("ssi degrees") {
  Graph s32 = labeled_bistar_32();
  SsiGraph a1 = build_ssi(s32, 1);
  CHECK(ssi_degree(a1, arc_of(s32, {"x1", "x2"})) == 6);
  CHECK(ssi_degree(a1, arc_of(s32, {"u1", "x1"})) == 4);
  CHECK_THROWS_AS(ssi_degree(a1, arc_of(s32, {"x2", "v1"})), std::invalid_argument);

  SsiGraph a2 = build_ssi(s32, 2);
  for (const Arc& label : a2.labels) CHECK(ssi_degree(a2, label) == 4);
}

TEST_CASE("line graph embedding") {
  Graph star = make_star(3);
  SsiGraph a1 = build_ssi(star, 1);
  auto map = line_graph_embedding(star, a1);
  CHECK(map.size() == 3);
  CHECK(a1.graph.order() == 3);  // the embedding is onto here
  CHECK(is_induced_embedding(a1.graph, line_graph(star), map));

  Graph c4 = make_cycle(4);
  SsiGraph c4a1 = build_ssi(c4, 1);
  auto c4map = line_graph_embedding(c4, c4a1);
  CHECK(c4a1.graph.order() == 8);
  CHECK(is_induced_embedding(c4a1.graph, line_graph(c4), c4map));

  Graph s32 = labeled_bistar_32();
  SsiGraph s32a1 = build_ssi(s32, 1);
  auto s32map = line_graph_embedding(s32, s32a1);
  CHECK(std::set<int>(s32map.begin(), s32map.end()).size() == 6);
  CHECK(is_induced_embedding(s32a1.graph, line_graph(s32), s32map));

  // Pendant edges embed with the pendant end first.
  const Arc u1x1 = arc_of(s32, {"u1", "x1"});
  bool found = false;
  for (int idx : s32map)
    if (s32a1.labels[idx] == u1x1) found = true;
  CHECK(found);

  Graph k2 = make_complete(2);
  CHECK_THROWS_AS(line_graph_embedding(k2, build_ssi(k2, 1)), std::invalid_argument);
}

TEST_CASE("structure invariants across the small corpus") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : all_connected(n)) {
      const int sstar = detour_profile(g).diameter;
      for (int s = 1; s <= std::min(sstar + 1, n); ++s) {
        SsiGraph a = build_ssi(g, s);
        CHECK(a.graph.order() != 1);
        if (s >= sstar) CHECK(a.empty());
        if (s < sstar) CHECK(!a.empty());
        for (int v = 0; v < a.graph.order(); ++v) CHECK(a.graph.degree(v) >= 1);
        for (const auto& comp : components(a.graph)) CHECK(comp.size() >= 2);
      }
      bool delta_over_1 = true;
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 1) delta_over_1 = false;
      if (delta_over_1) CHECK(build_ssi(g, 1).graph.order() == 2 * g.size());
    }
  }
}

TEST_CASE("construction matches the tuple-filter oracle") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : all_connected(n)) {
      for (int s = 1; s < n; ++s) {
        const SsiGraph built = build_ssi(g, s);
        const Graph naive = oracle::naive_ssi(g, s);
        CHECK(built.graph == naive);
      }
    }
  }
}
