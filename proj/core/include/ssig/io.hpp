#pragma once

#include <string>
#include <vector>

#include "ssig/generators.hpp"
#include "ssig/graph.hpp"
#include "ssig/ssi.hpp"
#include "ssig/theorems.hpp"

namespace ssig {

/// Edge-list text format. Lines are `vertex <token>` (declares a possibly
/// isolated vertex), `<token> <token>` (an edge; unseen tokens are declared
/// in first-appearance order) or `# comment`. Duplicate edges collapse;
/// self-loops and malformed lines throw std::invalid_argument.
Graph parse_edge_list(const std::string& text);

/// Canonical form: one `vertex` line per vertex in order, then one line
/// per edge. parse_edge_list inverts this exactly.
std::string serialize_edge_list(const Graph& g);

std::string export_dot(const Graph& g);
std::string export_dot(const SsiGraph& a);

/// Verification report document for one host graph. Canonical field order
/// and two-space indentation; suitable for byte-exact comparison.
std::string report_document_json(const std::string& graph_id, const Graph& host,
                                 const std::vector<VerificationReport>& runs);

/// Report document for a family run: one entry per member, in family
/// order, each holding that member's runs.
std::string corpus_document_json(const GraphFamily& family,
                                 const std::vector<FamilyMember>& members,
                                 const std::vector<VerificationReport>& runs);

/// Structural summary of A_s(G) for the analyze command.
std::string analyze_document_json(const std::string& graph_id, const Graph& host,
                                  const SsiGraph& a);
std::string analyze_document_text(const std::string& graph_id, const Graph& host,
                                  const SsiGraph& a);

}  // namespace ssig
