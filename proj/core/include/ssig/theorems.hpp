#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssig/generators.hpp"
#include "ssig/graph.hpp"

namespace ssig {

/// Closed catalog of verifiable claims about ssi-graphs. The order here is
/// the report order everywhere.
enum class TheoremId {
  Connectivity,             // A_s connected iff exactly one host component has detour diameter >= s+1
  CompletenessHalfN,        // s >= floor(n/2) forces A_s complete
  AcyclicOnlyK2,            // an acyclic non-empty A_s is K2
  CompleteAtSstarMinus1,    // A_{s*-1} is complete
  EmptyAtSstar,             // A_{s*} is empty
  AcyclicIffUniqueSstarPath,// some A_s is acyclic iff the longest path is unique
  Girth3,                   // any A_s on >= 3 vertices has girth 3
  NoK1,                     // no A_s has exactly one vertex
  OrderA1,                  // |V(A1)| = 2m - m1
  SizeA1,                   // |E(A1)| from the clique decomposition formula
  DegreeA1,                 // per-vertex degree formula in A1
  RegularImpliesStarOrDelta,// A1 regular forces star host or min degree > 1
  RegularIffDegreeSum,      // for min degree > 1: A1 regular iff constant adjacent degree sum
  Regular4kMinus3,          // k-regular host gives (4k-3)-regular A1
  OrderA2,                  // |V(A2)| from the internal-degree formula
  LineGraphInduced,         // canonical embedding of L(G) into A1 is induced
  LIsoIffStar,              // A1 isomorphic to L(G) iff host is a star
  StarGivesKn,              // A1 of K_{1,n} is K_n
  BistarA1Join,             // A1 of S_{m,n} is (K_m u K_n) + P2
  BistarA2Complete,         // A2 of S_{m,n} is K_{m+n}
  DominationEquality,       // domination of A1 = domination of L = edge domination of host
  OrderNIffBistar,          // |V(A1)| = n iff host is a bistar
  NoSelfIsoA1,              // A1(G) never isomorphic to G
  A2OrderNImpliesDeltaLe2,  // |V(A2)| = n forces min degree <= 2 (checked contrapositively)
  C3FreeNoOrderMatch,       // no triangle-free host with min degree > 1 has |V(A2)| = n
};

inline constexpr int kTheoremCount = 25;

const std::vector<TheoremId>& theorem_catalog();
std::string theorem_token(TheoremId id);
std::optional<TheoremId> theorem_from_token(const std::string& token);

/// True when the claim quantifies over s and verify() needs one supplied.
bool theorem_takes_s(TheoremId id);

/// Structured counterexample data; every arc is spelled as its host-token
/// sequence so it can be replayed through the construction.
struct Witness {
  std::string description;
  std::vector<std::vector<std::string>> arcs;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct VerificationReport {
  enum class Verdict { Pass, Fail };

  TheoremId theorem;
  std::string graph_id;
  std::optional<int> s;
  bool applicable = false;
  std::optional<Verdict> verdict;
  std::optional<long long> predicted;
  std::optional<long long> observed;
  std::optional<Witness> witness;
  /// Free-form remark carried on the in-memory report only (interpretation
  /// caveats such as the contrapositive reading of the A2 order claim);
  /// not part of the serialized document.
  std::string note;

  bool failed() const { return verdict == Verdict::Fail; }
};

/// Evaluates one claim against one host. Pure; inapplicable inputs yield
/// applicable = false with no verdict. Throws std::invalid_argument when
/// an s-parameterized id is called without s (or a non-parameterized one
/// with it).
VerificationReport verify(const Graph& g, const std::string& graph_id, TheoremId id,
                          std::optional<int> s = std::nullopt);

/// Every applicable (theorem, s) pair, in catalog order with s ascending.
/// Default s range is 1..s* (the detour diameter of the host).
std::vector<VerificationReport> verify_all(const Graph& g, const std::string& graph_id,
                                           std::optional<std::pair<int, int>> s_range = std::nullopt);

/// verify_all restricted to a theorem subset. With include_inapplicable the
/// out-of-scope reports stay in the list (verdict absent), so explicitly
/// requested claims are visibly distinguished from failures.
std::vector<VerificationReport> verify_selected(const Graph& g, const std::string& graph_id,
                                                const std::set<TheoremId>& ids,
                                                std::optional<std::pair<int, int>> s_range = std::nullopt,
                                                bool include_inapplicable = false);

/// Runs the selected theorems over every member of the family, fanning out
/// across `jobs` workers. Report order is family order regardless of the
/// worker count.
std::vector<VerificationReport> run_corpus(const GraphFamily& family,
                                           const std::set<TheoremId>& ids, int jobs);
std::vector<VerificationReport> run_corpus(const std::vector<FamilyMember>& members,
                                           const std::set<TheoremId>& ids, int jobs);

/// 0 when nothing failed, 2 when at least one verdict is Fail.
int exit_code_for(const std::vector<VerificationReport>& reports);

/// Star / bistar recognition used by the family-specific claims.
/// is_star yields the leaf count of K_{1,n} (n >= 1); is_bistar the two
/// leaf counts (larger first) of S_{m,n} with m, n >= 1.
std::optional<int> is_star(const Graph& g);
std::optional<std::pair<int, int>> is_bistar(const Graph& g);

}  // namespace ssig
