#include "ssig/io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ssig/version.hpp"

namespace ssig {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> edges;
  auto declare = [&](const std::string& token) {
    auto it = index.find(token);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(labels.size());
    labels.push_back(token);
    index.emplace(token, id);
    return id;
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "vertex" && tokens.size() == 2) {
      declare(tokens[1]);
      continue;
    }
    if (tokens.size() != 2)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected 'vertex <token>' or '<token> <token>'");
    if (tokens[0] == tokens[1])
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": self-loop on '" + tokens[0] + "'");
    const int from = declare(tokens[0]);  // keep first-appearance order
    const int to = declare(tokens[1]);
    edges.emplace_back(from, to);
  }
  return Graph(std::move(labels), edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  for (const auto& t : g.labels()) out += "vertex " + t + "\n";
  for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

std::string export_dot(const Graph& g) {
  std::string out = "graph ssi {\n";
  for (const auto& t : g.labels()) out += "  \"" + t + "\";\n";
  for (auto [u, v] : g.edges()) out += "  \"" + g.label(u) + "\" -- \"" + g.label(v) + "\";\n";
  out += "}\n";
  return out;
}

std::string export_dot(const SsiGraph& a) { return export_dot(a.graph); }

namespace {

Json witness_json(const Witness& w) {
  Json j;
  j["description"] = w.description;
  j["arcs"] = w.arcs;
  j["vertices"] = w.vertices;
  Json edges = Json::array();
  for (const auto& [a, b] : w.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = edges;
  return j;
}

Json run_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = theorem_token(r.theorem);
  j["s"] = r.s ? Json(*r.s) : Json(nullptr);
  j["applicable"] = r.applicable;
  if (r.verdict)
    j["verdict"] = *r.verdict == VerificationReport::Verdict::Pass ? "pass" : "fail";
  else
    j["verdict"] = nullptr;
  j["predicted"] = r.predicted ? Json(*r.predicted) : Json(nullptr);
  j["observed"] = r.observed ? Json(*r.observed) : Json(nullptr);
  j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
  return j;
}

Json host_json(const std::string& graph_id, const Graph& host) {
  Json j;
  j["id"] = graph_id;
  j["n"] = host.order();
  j["m"] = host.size();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string report_document_json(const std::string& graph_id, const Graph& host,
                                 const std::vector<VerificationReport>& runs) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["host_graph"] = host_json(graph_id, host);
  Json arr = Json::array();
  for (const auto& r : runs) arr.push_back(run_json(r));
  j["runs"] = arr;
  return dump(j);
}

std::string corpus_document_json(const GraphFamily& family,
                                 const std::vector<FamilyMember>& members,
                                 const std::vector<VerificationReport>& runs) {
  Json j;
  j["tool_version"] = kToolVersion;
  Json fam;
  fam["kind"] = family_kind_token(family.kind);
  fam["parameters"] = family.parameters;
  fam["seed"] = family.seed ? Json(*family.seed) : Json(nullptr);
  j["family"] = fam;

  Json reports = Json::array();
  std::size_t cursor = 0;
  for (const auto& member : members) {
    Json entry;
    entry["host_graph"] = host_json(member.id, member.graph);
    Json arr = Json::array();
    while (cursor < runs.size() && runs[cursor].graph_id == member.id)
      arr.push_back(run_json(runs[cursor++]));
    entry["runs"] = arr;
    reports.push_back(entry);
  }
  j["reports"] = reports;
  return dump(j);
}

namespace {

Json analyze_json(const std::string& graph_id, const Graph& host, const SsiGraph& a) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["host_graph"] = host_json(graph_id, host);
  j["s"] = a.source_s;
  Json s;
  s["order"] = a.graph.order();
  s["size"] = a.graph.size();
  auto gg = girth(a.graph);
  s["girth"] = gg ? Json(*gg) : Json(nullptr);
  s["connected"] = is_connected(a.graph);
  if (a.graph.size() > 0) {
    const auto reg = regularity_class(a.graph);
    Json r;
    switch (reg.kind) {
      case RegularityKind::Regular:
        r["kind"] = "regular";
        r["degrees"] = Json::array({reg.a});
        break;
      case RegularityKind::BiregularConstantSum:
        r["kind"] = "biregular_constant_sum";
        r["degrees"] = Json::array({reg.a, reg.b});
        break;
      case RegularityKind::Other:
        r["kind"] = "other";
        r["degrees"] = Json::array();
        break;
    }
    s["regularity"] = r;
  } else {
    s["regularity"] = nullptr;
  }
  std::map<int, int> hist;
  for (int v = 0; v < a.graph.order(); ++v) ++hist[a.graph.degree(v)];
  Json h = Json::array();
  for (auto [d, c] : hist) h.push_back(Json::array({d, c}));
  s["degree_histogram"] = h;
  s["domination_number"] = domination_number(a.graph);
  j["ssi"] = s;
  return j;
}

}  // namespace

std::string analyze_document_json(const std::string& graph_id, const Graph& host,
                                  const SsiGraph& a) {
  return dump(analyze_json(graph_id, host, a));
}

std::string analyze_document_text(const std::string& graph_id, const Graph& host,
                                  const SsiGraph& a) {
  const Json j = analyze_json(graph_id, host, a);
  const Json& s = j["ssi"];
  std::ostringstream out;
  out << "host " << graph_id << ": n=" << host.order() << " m=" << host.size() << "\n";
  out << "A_" << a.source_s << ": order " << s["order"] << ", size " << s["size"] << "\n";
  out << "girth: " << (s["girth"].is_null() ? std::string("none (acyclic)")
                                            : std::to_string(int(s["girth"])))
      << "\n";
  out << "connected: " << (s["connected"].get<bool>() ? "yes" : "no") << "\n";
  if (s["regularity"].is_null()) {
    out << "regularity: none (edgeless)\n";
  } else {
    out << "regularity: " << s["regularity"]["kind"].get<std::string>();
    for (const auto& d : s["regularity"]["degrees"]) out << " " << d;
    out << "\n";
  }
  out << "degree histogram:";
  for (const auto& pair : s["degree_histogram"])
    out << " " << pair[0] << "x" << pair[1];
  out << "\n";
  out << "domination number: " << s["domination_number"] << "\n";
  return out.str();
}

}  // namespace ssig
