#include "antimagic/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "antimagic/errors.hpp"
#include "antimagic/euler_lemma.hpp"
#include "antimagic/io.hpp"
#include "antimagic/local_antimagic.hpp"
#include "antimagic/radius2.hpp"
#include "antimagic/random_exp.hpp"
#include "antimagic/verify.hpp"

namespace antimagic::cli {
namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success; the emitted assignment passed verification\n"
    "  1  verification failed (or no valid assignment exists, or the Markov check failed)\n"
    "  2  orient-r2: graph radius exceeds 2; verify: invalid assignment document\n"
    "  3  usage error (unknown flag, missing option)\n"
    "  4  file could not be read or written\n"
    "  5  malformed edge list, label file, or number\n"
    "  6  input violates a precondition (isolated vertex, disconnected graph,\n"
    "     label count mismatch, instance too large for the oracle)\n"
    "Set ANTIMAGIC_WORKERS to fix the worker count of 'random' (default: all cores).";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

// Duplicate or non-positive entries are a problem with the file, not with the graph.
LabelSet read_labels(const std::string& path) {
  try {
    return parse_labels(read_file(path));
  } catch (const LabelError& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

LabelSet load_labels(const std::string& path, const Graph& g) {
  if (path.empty()) return LabelSet::first_integers(g.edge_count());
  return read_labels(path);
}

std::uint64_t parse_seed(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("malformed seed '" + s + "'");
  return v;
}

unsigned worker_count() {
  if (const char* env = std::getenv("ANTIMAGIC_WORKERS")) {
    unsigned w = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
    if (ec == std::errc{} && ptr == s.data() + s.size()) return w;
  }
  return 0;
}

void print_report(const VerificationReport& r, std::ostream& out) {
  out << "verification " << mode_name(r.mode) << ": " << verdict_name(r.verdict) << '\n';
  if (r.verdict == Verdict::Invalid) out << "  reason: " << r.invalid_reason << '\n';
  for (const auto& v : r.violations) {
    out << "  violation: vertex " << v.first;
    if (v.second) out << " and vertex " << *v.second;
    out << " sum " << to_string(v.sum) << '\n';
  }
}

int verdict_exit(const VerificationReport& r) {
  switch (r.verdict) {
    case Verdict::Pass: return kPass;
    case Verdict::Fail: return kVerificationFailed;
    case Verdict::Invalid: return kInvalidDocument;
  }
  return kVerificationFailed;
}

struct Options {
  std::string graph, labels, out, assignment, mode, csv, p = "1/2", seed = "0";
  std::optional<VertexId> root;
  bool reversed = false;
  std::size_t n = 0, trials = 1;
};

int cmd_orient_local(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = parse_edge_list(read_file(o.graph));
  const LabelSet labels = load_labels(o.labels, g);
  const auto res = construct_local_antimagic_traced(g, labels, o.root);
  AssignmentDocument doc = make_document(g, res.assignment, "local");
  doc.roots = res.roots;
  doc.levels = res.level_of;
  const auto report = check_local_antimagic(g, res.assignment, &labels);
  doc.verification.push_back(report);
  emit(serialize_document(doc), o.out, out);
  print_report(report, o.out.empty() ? err : out);
  return verdict_exit(report);
}

int cmd_orient_r2(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = parse_edge_list(read_file(o.graph));
  const LabelSet labels = load_labels(o.labels, g);
  Radius2Construction res;
  try {
    res = construct_antimagic_radius2_traced(g, labels);
  } catch (const RadiusTooLargeError& e) {
    err << "error: " << e.what() << '\n';
    return kRadiusTooLarge;
  }
  AssignmentDocument doc = make_document(g, res.result, "radius2");
  doc.roots = std::vector<VertexId>{res.levels.root};
  doc.levels = res.levels.level_of;
  const auto report = check_antimagic(g, res.result, &labels);
  doc.verification.push_back(report);
  emit(serialize_document(doc), o.out, out);
  print_report(report, o.out.empty() ? err : out);
  return verdict_exit(report);
}

int cmd_lemma(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = parse_edge_list(read_file(o.graph));
  const LabelSet labels = read_labels(o.labels);
  const Polarity polarity = o.reversed ? Polarity::Reversed : Polarity::Normal;
  const auto a = lemma_orient_label(g, labels, polarity);
  AssignmentDocument doc = make_document(g, a, "lemma");
  doc.polarity = polarity;
  const auto report = check_lemma_bound(g, a, polarity);
  doc.verification.push_back(report);
  emit(serialize_document(doc), o.out, out);
  print_report(report, o.out.empty() ? err : out);
  return verdict_exit(report);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.assignment);
  AssignmentDocument doc;
  Graph g;
  LabeledOrientation a;
  try {
    doc = parse_document(text);
    g = document_graph(doc);
    a = document_assignment(doc);
  } catch (const Error& e) {
    out << "verification " << o.mode << ": invalid\n  reason: " << e.what() << '\n';
    return kInvalidDocument;
  }
  VerificationReport report;
  if (o.mode == "local")
    report = check_local_antimagic(g, a);
  else if (o.mode == "full")
    report = check_antimagic(g, a);
  else
    report = check_lemma_bound(g, a, doc.polarity.value_or(Polarity::Normal));

  if (report.verdict != Verdict::Invalid && !doc.sums.empty() && doc.sums != vertex_sums(g, a).sums) {
    report.verdict = Verdict::Invalid;
    report.violations.clear();
    report.invalid_reason = "recorded vertex sums disagree with the arcs";
  }
  print_report(report, out);
  return verdict_exit(report);
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(o.graph));
  const LabelSet labels = load_labels(o.labels, g);
  const auto res = exhaustive_oracle(g, labels, o.mode == "full" ? SumMode::Full : SumMode::Local);
  out << "exists: " << (res.exists ? "true" : "false") << '\n' << "count: " << res.count << '\n';
  if (res.witness) {
    out << "witness:";
    for (const Arc& arc : res.witness->arcs) out << ' ' << arc.tail << "->" << arc.head << '/' << to_string(arc.label);
    out << '\n';
  }
  return res.exists ? kPass : kVerificationFailed;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const Graph g = parse_edge_list(read_file(o.graph));
  const auto comps = connected_components(g);
  out << "vertices: " << g.vertex_count() << '\n'
      << "edges: " << g.edge_count() << '\n'
      << "components: " << comps.size() << '\n';
  if (g.vertex_count() == 0 || comps.size() != 1) {
    out << "radius: undefined (disconnected)\n";
    return kPass;
  }
  const Metrics m = graph_metrics(g);
  out << "radius: " << m.radius.value << '\n'
      << "diameter: " << m.diameter << '\n'
      << "center: " << m.radius.center << '\n';
  const LevelStructure ls = bfs_levels(g, m.radius.center);
  for (std::size_t i = 0; i < ls.levels.size(); ++i) {
    out << "level " << i << ':';
    for (VertexId v : ls.levels[i]) out << ' ' << v;
    out << '\n';
  }
  return kPass;
}

int emit_batch(const TrialBatchRecord& r, const Options& o, std::ostream& out) {
  const std::string table = csv_header() + "\n" + csv_row(r) + "\n";
  out << table;
  if (!o.csv.empty()) write_file(o.csv, table);
  return kPass;
}

int cmd_random_diam2(const Options& o, std::ostream& out) {
  const auto r = diameter2_trials(o.n, parse_rational(o.p), o.trials, parse_seed(o.seed), worker_count());
  emit_batch(r, o, out);
  return r.markov_ok ? kPass : kVerificationFailed;
}

int cmd_random_pipeline(const Options& o, std::ostream& out, std::ostream& err) {
  const auto r = antimagic_pipeline_trials(o.n, o.trials, parse_seed(o.seed), worker_count());
  emit_batch(r, o, out);
  if (r.verification_failures != 0) err << "error: " << r.verification_failures << " constructions failed verification\n";
  return r.verification_failures == 0 ? kPass : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antimagic and local antimagic orientations: construction, verification, experiments", "antimagic"};
  app.footer(kExitCodes);
  app.require_subcommand(1);
  Options o;

  auto* local = app.add_subcommand("orient-local", "Local antimagic orientation for any graph without isolated vertices");
  local->add_option("--graph", o.graph, "Edge list file")->required();
  local->add_option("--labels", o.labels, "Label file (default 1..m)");
  local->add_option("--root", o.root, "BFS root for the component containing it");
  local->add_option("--out", o.out, "Write the assignment document here instead of stdout");

  auto* r2 = app.add_subcommand("orient-r2", "Antimagic orientation for connected graphs of radius <= 2");
  r2->add_option("--graph", o.graph, "Edge list file")->required();
  r2->add_option("--labels", o.labels, "Label file (default 1..m)");
  r2->add_option("--out", o.out, "Write the assignment document here instead of stdout");

  auto* lemma = app.add_subcommand("lemma", "Euler-circuit orientation with bounded vertex sums");
  lemma->add_option("--graph", o.graph, "Edge list file")->required();
  lemma->add_option("--labels", o.labels, "Label file")->required();
  lemma->add_flag("--reversed", o.reversed, "Flip every arc (sums positive or >= -max)");
  lemma->add_option("--out", o.out, "Write the assignment document here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check an assignment document");
  verify->add_option("--assignment", o.assignment, "Assignment document")->required();
  verify->add_option("--mode", o.mode, "local | full | lemma")
      ->required()
      ->check(CLI::IsMember({"local", "full", "lemma"}));

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search over orientations and bijections (m <= 8)");
  oracle->add_option("--graph", o.graph, "Edge list file")->required();
  oracle->add_option("--labels", o.labels, "Label file (default 1..m)");
  oracle->add_option("--mode", o.mode, "local | full")->required()->check(CLI::IsMember({"local", "full"}));

  auto* stats = app.add_subcommand("stats", "Radius, diameter, center and BFS levels");
  stats->add_option("--graph", o.graph, "Edge list file")->required();

  auto* random = app.add_subcommand("random", "Random graph experiments on G(n,p)");
  random->require_subcommand(1);
  auto* diam2 = random->add_subcommand("diam2", "Diameter-two and no-common-neighbor statistics");
  diam2->add_option("--n", o.n, "Vertices")->required()->check(CLI::PositiveNumber);
  diam2->add_option("--p", o.p, "Edge probability, e.g. 1/2")->required();
  diam2->add_option("--trials", o.trials, "Trials")->required()->check(CLI::PositiveNumber);
  diam2->add_option("--seed", o.seed, "Seed")->required();
  diam2->add_option("--csv", o.csv, "Also write the CSV here");
  auto* pipeline = random->add_subcommand("pipeline", "Construct and verify antimagic orientations of G(n,1/2)");
  pipeline->add_option("--n", o.n, "Vertices")->required()->check(CLI::PositiveNumber);
  pipeline->add_option("--trials", o.trials, "Trials")->required()->check(CLI::PositiveNumber);
  pipeline->add_option("--seed", o.seed, "Seed")->required();
  pipeline->add_option("--csv", o.csv, "Also write the CSV here");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (local->parsed()) return cmd_orient_local(o, out, err);
    if (r2->parsed()) return cmd_orient_r2(o, out, err);
    if (lemma->parsed()) return cmd_lemma(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (diam2->parsed()) return cmd_random_diam2(o, out);
    if (pipeline->parsed()) return cmd_random_pipeline(o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const InvalidGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kUsage;
}

}  // namespace antimagic::cli
