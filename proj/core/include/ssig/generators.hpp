#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssig/graph.hpp"

namespace ssig {

/// Descriptor for a named graph family. Parameters are integers; the
/// probability of random_gnp is the rational parameters[1]/parameters[2]
/// (denominator defaults to 100 when omitted).
struct GraphFamily {
  enum class Kind {
    Path,              // [n >= 1]         labels v1..vn
    Cycle,             // [n >= 3]
    Star,              // [n >= 1]         K_{1,n}: centre c, leaves u1..un
    Bistar,            // [m >= 1, n >= 1] centres x1,x2; leaves u1..um, v1..vn
    Complete,          // [n >= 1]
    CompleteBipartite, // [m >= 1, n >= 1] sides a1..am, b1..bn
    Circulant,         // [n >= 3, jumps...], each jump in 1..n/2, distinct
    Petersen,          // []
    RandomGnp,         // [n >= 1, num, (den)]
    AllConnected,      // [1 <= n <= 7]    one member per isomorphism class
  };

  Kind kind;
  std::vector<long long> parameters;
  std::optional<std::uint64_t> seed;  // random_gnp only, default 0
};

std::optional<GraphFamily::Kind> family_kind_from_token(const std::string& token);
std::string family_kind_token(GraphFamily::Kind kind);

struct FamilyMember {
  std::string id;
  Graph graph;
};

/// Materializes the family. Throws std::invalid_argument on bad
/// parameters. Deterministic: same descriptor, same members, same order.
std::vector<FamilyMember> generate(const GraphFamily& family);

/// Single-member convenience for the fixed-size kinds.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);
Graph make_bistar(int m, int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);

/// One connected graph per isomorphism class on n vertices, 1 <= n <= 7.
/// Members are emitted in increasing edge-subset order of their first
/// encountered labelling; labels are the single characters a..g.
std::vector<Graph> all_connected(int n);

}  // namespace ssig
