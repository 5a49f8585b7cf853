#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "ssig/generators.hpp"
#include "ssig/graph.hpp"
#include "ssig/isomorphism.hpp"

using namespace ssig;

namespace {

Graph labeled_bistar_32() {
  return Graph::from_tokens(
      {"u1", "u2", "u3", "x1", "x2", "v1", "v2"},
      {{"u1", "x1"}, {"u2", "x1"}, {"u3", "x1"}, {"x1", "x2"}, {"v1", "x2"}, {"v2", "x2"}});
}

Graph two_paths_p3() {
  return Graph::from_tokens({"a", "b", "c", "d", "e", "f"},
                            {{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}});
}

}  // namespace

TEST_CASE("graph construction") {
  Graph g = Graph::from_tokens({"a", "b"}, {{"a", "b"}});
  CHECK(g.order() == 2);
  CHECK(g.size() == 1);
  CHECK(g.adjacent(0, 1));

  CHECK_THROWS_AS(Graph::from_tokens({"a"}, {{"a", "a"}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_tokens({"a"}, {{"a", "b"}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);

  Graph s32 = labeled_bistar_32();
  CHECK(s32.order() == 7);
  CHECK(s32.size() == 6);

  // Parallel edges collapse.
  Graph dup = Graph::from_tokens({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(dup.size() == 1);
}

TEST_CASE("joined_label separator choice") {
  Graph single = make_path(3);  // labels v1,v2,v3: multi-character
  const int seq[2] = {0, 1};
  CHECK(joined_label(single, seq) == "v1-v2");
  Graph chars = Graph::from_tokens({"a", "b"}, {{"a", "b"}});
  CHECK(joined_label(chars, seq) == "ab");
}

TEST_CASE("degree profile") {
  Graph s32 = labeled_bistar_32();
  auto p = degree_profile(s32);
  CHECK(p.pendant_edge_count == 5);
  std::vector<int> internals;
  for (int v = 0; v < s32.order(); ++v)
    if (p.internal[v]) internals.push_back(v);
  CHECK(internals == std::vector<int>{*s32.index_of("x1"), *s32.index_of("x2")});

  auto c5 = degree_profile(make_cycle(5));
  CHECK(c5.pendant_edge_count == 0);
  CHECK(std::ranges::all_of(c5.internal_degree, [](int d) { return d == 2; }));

  Graph p4 = Graph::from_tokens({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  auto prof = degree_profile(p4);
  CHECK(prof.pendant_neighbors[1] == 1);
  CHECK(prof.internal_degree[1] == 1);
}

TEST_CASE("triangle profile") {
  auto c3 = triangle_profile(make_cycle(3));
  CHECK(c3.k == std::vector<int>{1, 1, 1});
  CHECK(c3.p == std::vector<int>{0, 0, 0});

  auto c4 = triangle_profile(make_cycle(4));
  CHECK(std::ranges::all_of(c4.k, [](int x) { return x == 0; }));
  CHECK(std::ranges::all_of(c4.p, [](int x) { return x == 0; }));

  auto k4 = triangle_profile(make_complete(4));
  CHECK(std::ranges::all_of(k4.k, [](int x) { return x == 0; }));
  CHECK(std::ranges::all_of(k4.p, [](int x) { return x == 0; }));

  // Triangle with one pendant: the apex sees a (2,2) triangle, the others
  // see one internal companion each.
  Graph paw = Graph::from_tokens({"a", "b", "c", "d"},
                                 {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}});
  auto t = triangle_profile(paw);
  CHECK(t.k[0] == 1);
  CHECK(t.p[0] == 0);
  CHECK(t.k[1] == 0);
  CHECK(t.p[1] == 1);
  CHECK(t.p[2] == 1);
}

TEST_CASE("components") {
  CHECK(components(make_path(4)).size() == 1);
  auto two = components(two_paths_p3());
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 3);
  CHECK(two[1].size() == 3);
  CHECK(two[0] == std::vector<int>{0, 1, 2});
  Graph edgeless({"a", "b", "c"}, {});
  CHECK(components(edgeless).size() == 3);
}

TEST_CASE("detour profile") {
  for (int n = 2; n <= 10; ++n) CHECK(detour_profile(make_path(n)).diameter == n - 1);

  Graph s32 = labeled_bistar_32();
  CHECK(detour_profile(s32).diameter == 3);
  CHECK(detour_profile(s32).diameter == oracle::bfs_diameter(s32));

  CHECK(detour_profile(make_cycle(5)).diameter == 4);

  auto two = detour_profile(two_paths_p3());
  CHECK(two.diameter == 2);
  CHECK(two.per_component_diameter == std::vector<int>{2, 2});
  CHECK(two.distance[0][3] == -1);
  CHECK(two.distance[0][2] == 2);

  // The middle of P4 cannot reach the far end through the pendant side.
  CHECK(detour_profile(make_path(4)).eccentricity == std::vector<int>{3, 2, 2, 3});
}

TEST_CASE("detour distances match the subset-DP oracle") {
  for (const Graph& g : all_connected(5))
    CHECK(detour_profile(g).distance == oracle::detour_subset_dp(g));
  GraphFamily gnp{GraphFamily::Kind::RandomGnp, {7, 40}, 11};
  const Graph g = generate(gnp)[0].graph;
  CHECK(detour_profile(g).distance == oracle::detour_subset_dp(g));
}

TEST_CASE("trees have detour diameter equal to geodesic diameter") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : all_connected(n))
      if (g.size() == g.order() - 1)
        CHECK(detour_profile(g).diameter == oracle::bfs_diameter(g));
}

TEST_CASE("girth") {
  CHECK(girth(make_cycle(5)) == 5);
  CHECK(girth(make_cycle(6)) == 6);
  CHECK(girth(make_complete(4)) == 3);
  CHECK(girth(make_complete_bipartite(2, 3)) == 4);
  CHECK(!girth(make_path(6)).has_value());
  CHECK(!girth(labeled_bistar_32()).has_value());
}

TEST_CASE("regularity class") {
  CHECK(regularity_class(make_cycle(6)) == RegularityClass{RegularityKind::Regular, 2, 2});
  CHECK(regularity_class(make_complete_bipartite(2, 3)) ==
        RegularityClass{RegularityKind::BiregularConstantSum, 3, 2});
  // Two degree values but the middle edge is unmixed: stays Other.
  CHECK(regularity_class(make_path(4)).kind == RegularityKind::Other);
  CHECK(regularity_class(make_path(3)).kind == RegularityKind::BiregularConstantSum);
  CHECK_THROWS_AS(regularity_class(Graph({"a", "b"}, {})), std::invalid_argument);
}

TEST_CASE("domination numbers") {
  for (int n = 1; n <= 6; ++n) CHECK(domination_number(make_complete(n)) == 1);
  CHECK(domination_number(make_path(4)) == 2);
  CHECK(domination_number(make_cycle(5)) == 2);
  CHECK(domination_number(Graph({"a", "b", "c"}, {})) == 3);
  CHECK(domination_number(Graph()) == 0);

  CHECK(edge_domination_number(make_path(4)) == 1);
  for (int n = 1; n <= 5; ++n) CHECK(edge_domination_number(make_star(n)) == 1);
  CHECK(edge_domination_number(make_cycle(5)) == 2);
  CHECK_THROWS_AS(edge_domination_number(Graph({"a"}, {})), std::invalid_argument);
}

TEST_CASE("domination searches agree with full-subset oracles") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : all_connected(n)) {
      CHECK(domination_number(g) == oracle::domination_full_scan(g));
      CHECK(edge_domination_number(g) == oracle::edge_domination_full_scan(g));
    }
  }
}

TEST_CASE("line graph") {
  CHECK(is_isomorphic(line_graph(make_star(3)), make_complete(3)));
  CHECK(is_isomorphic(line_graph(make_path(4)), make_path(3)));
  CHECK(is_isomorphic(line_graph(make_cycle(5)), make_cycle(5)));

  Graph p4 = Graph::from_tokens({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(line_graph(p4).labels() == std::vector<std::string>{"ab", "bc", "cd"});

  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : all_connected(n)) {
      const Graph line = line_graph(g);
      CHECK(line.order() == g.size());
      long long expected = 0;
      for (int v = 0; v < g.order(); ++v)
        expected += static_cast<long long>(g.degree(v)) * (g.degree(v) - 1) / 2;
      CHECK(line.size() == expected);
    }
  }
}

TEST_CASE("degree sum equals twice the size") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_connected(n)) {
      int sum = 0;
      for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
      CHECK(sum == 2 * g.size());
    }
  }
}

TEST_CASE("isomorphism spot checks") {
  CHECK(is_isomorphic(make_complete(3), make_cycle(3)));
  CHECK(!is_isomorphic(make_star(3), make_path(4)));
  // Same degree sequence, different structure.
  Graph two_triangles = Graph::from_tokens(
      {"a", "b", "c", "d", "e", "f"},
      {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
  CHECK(!is_isomorphic(make_cycle(6), two_triangles));
  CHECK(is_isomorphic(Graph(), Graph()));
}

TEST_CASE("isomorphism behaves like an equivalence relation") {
  const auto graphs = all_connected(5);
  for (const Graph& g : graphs) CHECK(is_isomorphic(g, g));

  // Relabelled copies stay isomorphic both ways and compose transitively.
  const Graph g = graphs[7];
  auto relabel = [&](std::vector<int> perm, const std::string& prefix) {
    std::vector<std::string> labels(g.order());
    for (int v = 0; v < g.order(); ++v) labels[perm[v]] = prefix + std::to_string(v);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(labels, edges);
  };
  const Graph h = relabel({2, 0, 4, 1, 3}, "h");
  const Graph k = relabel({4, 3, 0, 2, 1}, "k");
  CHECK(is_isomorphic(g, h));
  CHECK(is_isomorphic(h, g));
  CHECK(is_isomorphic(h, k));
  CHECK(is_isomorphic(g, k));

  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      CHECK(!is_isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("induced embedding checks") {
  Graph c3 = make_cycle(3);
  std::vector<int> identity{0, 1, 2};
  CHECK(is_induced_embedding(c3, c3, identity));

  // P3 into C3 hits a phantom edge: adjacency gained, so not induced.
  CHECK(!is_induced_embedding(c3, make_path(3), identity));

  CHECK_THROWS_AS(is_induced_embedding(c3, make_path(3), std::vector<int>{0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_induced_embedding(c3, make_path(3), std::vector<int>{0, 1, 5}),
                  std::invalid_argument);
}
