#include "ssig/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ssig/io.hpp"
#include "ssig/theorems.hpp"

namespace ssig {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write output file: " + path);
  file << content;
}

std::string stem_of(const std::string& path) {
  const auto stem = std::filesystem::path(path).stem().string();
  return stem.empty() ? path : stem;
}

std::set<TheoremId> parse_theorem_list(const std::string& spec) {
  std::set<TheoremId> ids;
  if (spec == "all") {
    ids.insert(theorem_catalog().begin(), theorem_catalog().end());
    return ids;
  }
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    auto id = theorem_from_token(token);
    if (!id) throw UsageError("unknown theorem id: " + token);
    ids.insert(*id);
  }
  if (ids.empty()) throw UsageError("empty theorem list");
  return ids;
}

std::vector<long long> parse_params(const std::string& spec) {
  std::vector<long long> params;
  if (spec.empty()) return params;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw UsageError("bad family parameter: " + token);
    }
    if (used != token.size()) throw UsageError("bad family parameter: " + token);
    params.push_back(value);
  }
  return params;
}

GraphFamily::Kind parse_family(const std::string& token) {
  auto kind = family_kind_from_token(token);
  if (!kind) throw UsageError("unknown family: " + token);
  return *kind;
}

// Families whose single leading parameter is the vertex count; only these
// can be swept with --n-max.
bool sweepable(GraphFamily::Kind kind) {
  using Kind = GraphFamily::Kind;
  return kind == Kind::Path || kind == Kind::Cycle || kind == Kind::Star ||
         kind == Kind::Complete || kind == Kind::AllConnected;
}

int min_param(GraphFamily::Kind kind) {
  return kind == GraphFamily::Kind::Cycle ? 3 : 1;
}

std::vector<FamilyMember> expand_family(GraphFamily family, std::optional<int> n_max) {
  if (!n_max) return generate(family);
  if (!sweepable(family.kind))
    throw UsageError("--n-max only applies to path, cycle, star, complete and all_connected");
  int start = min_param(family.kind);
  if (!family.parameters.empty()) start = static_cast<int>(family.parameters[0]);
  std::vector<FamilyMember> members;
  for (int n = start; n <= *n_max; ++n) {
    family.parameters = {n};
    auto block = generate(family);
    members.insert(members.end(), std::make_move_iterator(block.begin()),
                   std::make_move_iterator(block.end()));
  }
  return members;
}

struct BuildOptions {
  std::string input;
  int s = 1;
  std::string out = "-";
  std::string format = "dot";
};

struct ArcsOptions {
  std::string input;
  int s = 1;
  bool shuntable_only = false;
};

struct AnalyzeOptions {
  std::string input;
  int s = 1;
  bool json = false;
};

struct VerifyOptions {
  std::string input;
  std::string theorems = "all";
  std::string s_max = "auto";
  bool force = false;
  std::string json = "-";
};

struct CorpusOptions {
  std::string family;
  std::string params;
  std::string theorems = "all";
  std::optional<int> n_max;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string json = "-";
};

struct GenOptions {
  std::string family;
  std::string params;
  std::optional<std::uint64_t> seed;
  std::string out = "-";
};

int cmd_build(const BuildOptions& opt, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(opt.input));
  const SsiGraph a = build_ssi(g, opt.s);
  if (opt.format == "dot")
    write_output(opt.out, export_dot(a), out);
  else if (opt.format == "edges")
    write_output(opt.out, serialize_edge_list(a.graph), out);
  else
    throw UsageError("unknown format: " + opt.format);
  return 0;
}

int cmd_arcs(const ArcsOptions& opt, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(opt.input));
  std::string text;
  for (const Arc& a : enumerate_arcs(g, opt.s)) {
    if (opt.shuntable_only && !is_shuntable(g, a)) continue;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
      if (i) text += ' ';
      text += g.label(a.vertices[i]);
    }
    text += '\n';
  }
  out << text;
  return 0;
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(opt.input));
  const SsiGraph a = build_ssi(g, opt.s);
  const std::string id = stem_of(opt.input);
  out << (opt.json ? analyze_document_json(id, g, a) : analyze_document_text(id, g, a));
  return 0;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(opt.input));
  const std::string id = stem_of(opt.input);
  const auto ids = parse_theorem_list(opt.theorems);

  std::optional<std::pair<int, int>> s_range;
  if (opt.s_max == "auto") {
    if (g.order() > 16 && !opt.force)
      throw UsageError("--s-max auto needs the detour diameter, which is exponential; host has " +
                       std::to_string(g.order()) + " > 16 vertices (use --force to override)");
  } else {
    int k = 0;
    try {
      k = std::stoi(opt.s_max);
    } catch (const std::exception&) {
      throw UsageError("--s-max expects 'auto' or a positive integer");
    }
    if (k < 1) throw UsageError("--s-max must be at least 1");
    s_range = std::make_pair(1, k);
  }

  // Explicitly requested claims keep their out-of-scope rows visible.
  const bool include_inapplicable = opt.theorems != "all";
  const auto runs = verify_selected(g, id, ids, s_range, include_inapplicable);
  write_output(opt.json, report_document_json(id, g, runs), out);
  return exit_code_for(runs);
}

int cmd_corpus(const CorpusOptions& opt, std::ostream& out) {
  GraphFamily family{parse_family(opt.family), parse_params(opt.params), opt.seed};
  const auto ids = parse_theorem_list(opt.theorems);
  const auto members = expand_family(family, opt.n_max);
  const auto runs = run_corpus(members, ids, opt.jobs);
  write_output(opt.json, corpus_document_json(family, members, runs), out);
  return exit_code_for(runs);
}

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  GraphFamily family{parse_family(opt.family), parse_params(opt.params), opt.seed};
  const auto members = generate(family);
  if (members.size() != 1)
    throw UsageError("gen needs a single-member family; " + opt.family + " yields " +
                     std::to_string(members.size()));
  write_output(opt.out, serialize_edge_list(members[0].graph), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"s-shunt intersection graph toolkit"};
  app.require_subcommand(1);

  BuildOptions build_opt;
  auto* build = app.add_subcommand("build", "construct A_s(G) and write it out");
  build->add_option("--input", build_opt.input, "edge list file")->required();
  build->add_option("--s", build_opt.s, "arc length s (>= 1)")->required();
  build->add_option("--out", build_opt.out, "output file, '-' for stdout");
  build->add_option("--format", build_opt.format, "dot or edges");

  ArcsOptions arcs_opt;
  auto* arcs = app.add_subcommand("arcs", "list s-arcs, one token sequence per line");
  arcs->add_option("--input", arcs_opt.input, "edge list file")->required();
  arcs->add_option("--s", arcs_opt.s, "arc length s (>= 1)")->required();
  arcs->add_flag("--shuntable-only", arcs_opt.shuntable_only, "only arcs that are A_s vertices");

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "structural summary of A_s(G)");
  analyze->add_option("--input", analyze_opt.input, "edge list file")->required();
  analyze->add_option("--s", analyze_opt.s, "arc length s (>= 1)")->required();
  analyze->add_flag("--json", analyze_opt.json, "emit JSON instead of text");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "run the theorem harness on one graph");
  verify->add_option("--input", verify_opt.input, "edge list file")->required();
  verify->add_option("--theorems", verify_opt.theorems, "comma-separated ids or 'all'");
  verify->add_option("--s-max", verify_opt.s_max, "'auto' (detour diameter) or an explicit cap");
  verify->add_flag("--force", verify_opt.force, "allow 'auto' beyond 16 vertices");
  verify->add_option("--json", verify_opt.json, "report file, '-' for stdout")->required();

  CorpusOptions corpus_opt;
  auto* corpus = app.add_subcommand("corpus", "run the harness across a graph family");
  corpus->add_option("--family", corpus_opt.family, "family name")->required();
  corpus->add_option("--params", corpus_opt.params, "comma-separated integers");
  corpus->add_option("--theorems", corpus_opt.theorems, "comma-separated ids or 'all'");
  corpus->add_option("--n-max", corpus_opt.n_max, "sweep the leading parameter up to this");
  corpus->add_option("--seed", corpus_opt.seed, "random_gnp seed");
  corpus->add_option("--jobs", corpus_opt.jobs, "worker count")->check(CLI::PositiveNumber);
  corpus->add_option("--json", corpus_opt.json, "report file, '-' for stdout")->required();

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "write a family member as an edge list");
  gen->add_option("--family", gen_opt.family, "family name")->required();
  gen->add_option("--params", gen_opt.params, "comma-separated integers");
  gen->add_option("--seed", gen_opt.seed, "random_gnp seed");
  gen->add_option("--out", gen_opt.out, "output file, '-' for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (*build) return cmd_build(build_opt, out);
    if (*arcs) return cmd_arcs(arcs_opt, out);
    if (*analyze) return cmd_analyze(analyze_opt, out);
    if (*verify) return cmd_verify(verify_opt, out);
    if (*corpus) return cmd_corpus(corpus_opt, out);
    if (*gen) return cmd_gen(gen_opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace ssig
