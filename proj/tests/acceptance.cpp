// Acceptance suite: ten end-to-end criteria, one verdict line each.
// Exits non-zero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ssig/cli.hpp"
#include "ssig/formulas.hpp"
#include "ssig/generators.hpp"
#include "ssig/io.hpp"
#include "ssig/isomorphism.hpp"
#include "ssig/ssi.hpp"
#include "ssig/theorems.hpp"

using namespace ssig;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int number, bool ok, const std::string& what, double seconds) {
  std::printf("criterion %2d: %s  [%6.2fs]  %s\n", number, ok ? "PASS" : "FAIL", seconds,
              what.c_str());
  if (!ok) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

Graph labeled_bistar_32() {
  return Graph::from_tokens(
      {"u1", "u2", "u3", "x1", "x2", "v1", "v2"},
      {{"u1", "x1"}, {"u2", "x1"}, {"u3", "x1"}, {"x1", "x2"}, {"v1", "x2"}, {"v2", "x2"}});
}

std::vector<FamilyMember> corpus_range(int lo, int hi) {
  std::vector<FamilyMember> members;
  for (int n = lo; n <= hi; ++n) {
    auto block = generate(GraphFamily{GraphFamily::Kind::AllConnected, {n}, {}});
    members.insert(members.end(), std::make_move_iterator(block.begin()),
                   std::make_move_iterator(block.end()));
  }
  return members;
}

// Runs the ids over the members and reports failing runs (printing them, so
// a discovered counterexample is never silent).
int count_failures(const std::vector<FamilyMember>& members, const std::set<TheoremId>& ids,
                   bool* witnesses_ok = nullptr) {
  int fails = 0;
  if (witnesses_ok) *witnesses_ok = true;
  for (const auto& member : members) {
    for (const auto& r : verify_selected(member.graph, member.id, ids)) {
      if (!r.failed()) continue;
      ++fails;
      if (!r.witness.has_value() && witnesses_ok) *witnesses_ok = false;
      const std::string at_s = r.s ? " s=" + std::to_string(*r.s) : std::string();
      std::printf("  counterexample: %s on %s%s\n", theorem_token(r.theorem).c_str(),
                  member.id.c_str(), at_s.c_str());
      std::cout << report_document_json(member.id, member.graph, {r});
    }
  }
  return fails;
}

void criterion_1() {
  Timer t;
  Graph s32 = labeled_bistar_32();
  SsiGraph a1 = build_ssi(s32, 1);
  bool ok = a1.graph.order() == 7 && a1.graph.size() == 15;

  // Exact expected adjacency under the arc-label map.
  auto at = [&](const std::string& label) {
    for (int v = 0; v < a1.graph.order(); ++v)
      if (a1.graph.label(v) == label) return v;
    return -1;
  };
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"u1-x1", "x1-x2"}, {"u2-x1", "x1-x2"}, {"u3-x1", "x1-x2"}, {"x1-x2", "x2-x1"},
      {"v1-x2", "x2-x1"}, {"v2-x2", "x2-x1"}, {"u1-x1", "x2-x1"}, {"u2-x1", "x2-x1"},
      {"u3-x1", "x2-x1"}, {"v1-x2", "x1-x2"}, {"v2-x2", "x1-x2"}, {"u1-x1", "u2-x1"},
      {"u1-x1", "u3-x1"}, {"u2-x1", "u3-x1"}, {"v1-x2", "v2-x2"}};
  ok = ok && expected.size() == 15;
  for (const auto& [a, b] : expected) {
    const int i = at(a), j = at(b);
    ok = ok && i >= 0 && j >= 0 && a1.graph.adjacent(i, j);
  }

  SsiGraph a2 = build_ssi(s32, 2);
  ok = ok && is_isomorphic(a2.graph, make_complete(5));
  ok = ok && build_ssi(s32, 3).empty();
  criterion(1, ok, "bistar S_{3,2}: A1 is the expected 7/15 labelled graph, A2 = K5, A3 empty",
            t.seconds());
}

void criterion_2() {
  Timer t;
  Graph s32 = labeled_bistar_32();
  SsiGraph a1 = build_ssi(s32, 1);
  Arc x1x2{{*s32.index_of("x1"), *s32.index_of("x2")}};
  Arc u1x1{{*s32.index_of("u1"), *s32.index_of("x1")}};
  bool ok = ssi_degree(a1, x1x2) == 6 && predict_degree_a1(s32, x1x2).as_integer() == 6;
  ok = ok && ssi_degree(a1, u1x1) == 4 && predict_degree_a1(s32, u1x1).as_integer() == 4;
  criterion(2, ok, "degree spot checks on the bistar match the degree formula", t.seconds());
}

void criterion_3() {
  Timer t;
  bool witnesses_ok = true;
  const auto members = corpus_range(3, 6);
  const std::set<TheoremId> ids{TheoremId::OrderA1, TheoremId::SizeA1, TheoremId::DegreeA1,
                                TheoremId::OrderA2};
  const int fails = count_failures(members, ids, &witnesses_ok);
  // All four claims are in scope on every connected host with >= 3 vertices,
  // so a verdict must have been produced for each (member, claim) pair.
  std::size_t runs = 0;
  for (const auto& member : members) runs += verify_selected(member.graph, member.id, ids).size();
  criterion(3, fails == 0 && witnesses_ok && runs == 4 * members.size(),
            "order/size/degree formulas match construction on all connected graphs, 3..6 vertices",
            t.seconds());
}

void criterion_4() {
  Timer t;
  bool witnesses_ok = true;
  const int fails = count_failures(
      corpus_range(3, 6),
      {TheoremId::Connectivity, TheoremId::CompletenessHalfN, TheoremId::AcyclicOnlyK2,
       TheoremId::CompleteAtSstarMinus1, TheoremId::EmptyAtSstar, TheoremId::Girth3,
       TheoremId::NoK1},
      &witnesses_ok);
  criterion(4, fails == 0 && witnesses_ok,
            "structural claims hold for every s up to the detour diameter on the 3..6 corpus",
            t.seconds());
}

void criterion_5() {
  Timer t;
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    auto r = verify(make_star(n), "star", TheoremId::StarGivesKn);
    ok = ok && r.applicable && !r.failed();
  }
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      Graph b = make_bistar(m, n);
      auto join = verify(b, "bistar", TheoremId::BistarA1Join);
      auto complete = verify(b, "bistar", TheoremId::BistarA2Complete);
      ok = ok && join.applicable && !join.failed();
      ok = ok && complete.applicable && !complete.failed();
    }
  }
  for (int n = 3; n <= 8; ++n) {
    auto r = verify(make_cycle(n), "cycle", TheoremId::Regular4kMinus3);
    ok = ok && r.applicable && !r.failed() && r.observed == 5;
  }
  for (int n = 3; n <= 6; ++n) {
    auto r = verify(make_complete(n), "complete", TheoremId::Regular4kMinus3);
    ok = ok && r.applicable && !r.failed() && r.observed == 4 * n - 7;
  }
  Graph petersen = generate(GraphFamily{GraphFamily::Kind::Petersen, {}, {}})[0].graph;
  auto r = verify(petersen, "petersen", TheoremId::Regular4kMinus3);
  ok = ok && r.applicable && !r.failed() && r.observed == 9;
  criterion(5, ok, "family claims: stars to K_n, bistar join/complete forms, (4k-3)-regularity",
            t.seconds());
}

void criterion_6() {
  Timer t;
  auto members = corpus_range(3, 5);
  members.push_back({"path(6)", make_path(6)});
  members.push_back({"cycle(6)", make_cycle(6)});
  members.push_back({"bistar(3,3)", make_bistar(3, 3)});
  const int fails = count_failures(members, {TheoremId::DominationEquality});
  criterion(6, fails == 0,
            "domination of A1 = domination of L = edge domination of the host", t.seconds());
}

void criterion_7() {
  Timer t;
  bool witnesses_ok = true;
  const int fails = count_failures(
      corpus_range(1, 6),
      {TheoremId::OrderNIffBistar, TheoremId::NoSelfIsoA1, TheoremId::A2OrderNImpliesDeltaLe2,
       TheoremId::C3FreeNoOrderMatch, TheoremId::LIsoIffStar},
      &witnesses_ok);
  criterion(7, fails == 0 && witnesses_ok,
            "isomorphism-flavoured claims hold on the corpus up to 6 vertices", t.seconds());
}

void criterion_8() {
  Timer t;
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& member : corpus_range(n, n)) {
      for (int s = 1; s < std::max(2, n); ++s) {
        if (!(build_ssi(member.graph, s).graph == oracle::naive_ssi(member.graph, s))) {
          ok = false;
          std::printf("  divergence: %s s=%d\n", member.id.c_str(), s);
        }
      }
    }
  }
  criterion(8, ok, "tuple-filter oracle builds identical ssi-graphs on the corpus up to 5",
            t.seconds());
}

void criterion_9() {
  Timer t;
  bool ok = true;
  for (const auto& member : corpus_range(3, 6)) {
    bool delta_over_1 = true;
    for (int v = 0; v < member.graph.order(); ++v)
      if (member.graph.degree(v) <= 1) delta_over_1 = false;
    if (delta_over_1)
      ok = ok && build_ssi(member.graph, 1).graph.order() == 2 * member.graph.size();
  }
  for (int s = 2; s <= 3; ++s) {
    Graph even = make_path(2 * s + 2);
    Graph odd = make_path(2 * s + 1);
    ok = ok && build_ssi(even, s).graph.order() == even.order();
    ok = ok && build_ssi(odd, s).graph.order() == odd.size();
  }
  criterion(9, ok, "A1 order is 2m without pendants; path orders match at s = 2, 3", t.seconds());
}

void criterion_10() {
  Timer t;
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  const fs::path dir = fs::temp_directory_path() / ("ssig_acceptance_" + std::to_string(stamp));
  fs::create_directories(dir);
  const std::string j1 = (dir / "jobs1.json").string();
  const std::string j4 = (dir / "jobs4.json").string();
  std::ostringstream sink_out, sink_err;
  bool ok = run_cli({"corpus", "--family", "all_connected", "--params", "5", "--jobs", "1",
                     "--json", j1},
                    sink_out, sink_err) == 0;
  ok = ok && run_cli({"corpus", "--family", "all_connected", "--params", "5", "--jobs", "4",
                      "--json", j4},
                     sink_out, sink_err) == 0;
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const std::string b1 = slurp(j1);
  ok = ok && !b1.empty() && b1 == slurp(j4);
  fs::remove_all(dir);
  criterion(10, ok, "corpus reports are byte-identical across 1 and 4 workers", t.seconds());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures) {
    std::printf("%d criteria FAILED\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
