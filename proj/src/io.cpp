#include "antimagic/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || value > UINT32_MAX - 1)
    throw ParseError("line " + std::to_string(line_no) + ": malformed vertex id '" + std::string(token) + "'");
  return value;
}

std::string polarity_name(Polarity p) { return p == Polarity::Normal ? "normal" : "reversed"; }

Polarity parse_polarity(const std::string& s) {
  if (s == "normal") return Polarity::Normal;
  if (s == "reversed") return Polarity::Reversed;
  throw ParseError("unknown polarity '" + s + "'");
}

CheckMode parse_mode(const std::string& s) {
  if (s == "local") return CheckMode::Local;
  if (s == "full") return CheckMode::Full;
  if (s == "lemma") return CheckMode::LemmaBound;
  throw ParseError("unknown verification mode '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "invalid") return Verdict::Invalid;
  throw ParseError("unknown verdict '" + s + "'");
}

Rational rational_field(const json& j) {
  if (!j.is_string()) throw ParseError("exact numbers are stored as strings");
  return parse_rational(j.get<std::string>());
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::uint64_t max_id = 0;
  bool any = false;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto tokens = split_ws(line);
    if (tokens.size() == 2 && tokens[0] == "n") {
      if (declared || !edges.empty())
        throw ParseError("line " + std::to_string(line_no) + ": vertex count header must come first and once");
      declared = parse_id(tokens[1], line_no);
      return;
    }
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v', got '" + std::string(line) + "'");
    const auto u = parse_id(tokens[0], line_no);
    const auto v = parse_id(tokens[1], line_no);
    max_id = std::max({max_id, u, v});
    any = true;
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  });
  const std::size_t n = declared ? *declared : (any ? max_id + 1 : 0);
  return build_graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

LabelSet parse_labels(std::string_view text) {
  std::vector<Label> values;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    try {
      values.push_back(parse_rational(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return LabelSet(std::move(values));
}

std::string_view mode_name(CheckMode mode) {
  switch (mode) {
    case CheckMode::Local: return "local";
    case CheckMode::Full: return "full";
    case CheckMode::LemmaBound: return "lemma";
  }
  return "?";
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Invalid: return "invalid";
  }
  return "?";
}

AssignmentDocument make_document(const Graph& g, const LabeledOrientation& a, std::string construction) {
  AssignmentDocument doc;
  doc.n = g.vertex_count();
  doc.construction = std::move(construction);
  for (const Edge& e : g.edges()) {
    const Arc& arc = a.arcs.at(e.id);
    doc.edges.push_back({e.id, e.u, e.v, arc.tail, arc.head, arc.label});
  }
  doc.sums = vertex_sums(g, a).sums;
  return doc;
}

std::string serialize_document(const AssignmentDocument& doc) {
  json j;
  j["n"] = doc.n;
  j["construction"] = doc.construction;
  if (doc.polarity) j["polarity"] = polarity_name(*doc.polarity);
  if (doc.roots) j["roots"] = *doc.roots;
  if (doc.levels) j["levels"] = *doc.levels;
  j["edges"] = json::array();
  for (const auto& e : doc.edges)
    j["edges"].push_back(
        {{"id", e.id}, {"u", e.u}, {"v", e.v}, {"tail", e.tail}, {"head", e.head}, {"label", to_string(e.label)}});
  j["sums"] = json::array();
  for (const auto& s : doc.sums) j["sums"].push_back(to_string(s));
  j["verification"] = json::array();
  for (const auto& r : doc.verification) {
    json vr{{"mode", mode_name(r.mode)}, {"verdict", verdict_name(r.verdict)}, {"violations", json::array()}};
    for (const auto& v : r.violations) {
      json vertices = json::array({v.first});
      if (v.second) vertices.push_back(*v.second);
      vr["violations"].push_back({{"vertices", vertices}, {"sum", to_string(v.sum)}});
    }
    if (!r.invalid_reason.empty()) vr["reason"] = r.invalid_reason;
    j["verification"].push_back(std::move(vr));
  }
  return j.dump(2) + "\n";
}

AssignmentDocument parse_document(std::string_view text) {
  AssignmentDocument doc;
  try {
    const json j = json::parse(text);
    doc.n = j.at("n").get<std::size_t>();
    doc.construction = j.value("construction", std::string{});
    if (j.contains("polarity")) doc.polarity = parse_polarity(j.at("polarity").get<std::string>());
    if (j.contains("roots")) doc.roots = j.at("roots").get<std::vector<VertexId>>();
    if (j.contains("levels")) doc.levels = j.at("levels").get<std::vector<std::size_t>>();
    for (const auto& e : j.at("edges"))
      doc.edges.push_back({e.at("id").get<EdgeId>(), e.at("u").get<VertexId>(), e.at("v").get<VertexId>(),
                           e.at("tail").get<VertexId>(), e.at("head").get<VertexId>(), rational_field(e.at("label"))});
    if (j.contains("sums"))
      for (const auto& s : j.at("sums")) doc.sums.push_back(rational_field(s));
    if (j.contains("verification")) {
      for (const auto& vr : j.at("verification")) {
        VerificationReport r;
        r.mode = parse_mode(vr.at("mode").get<std::string>());
        r.verdict = parse_verdict(vr.at("verdict").get<std::string>());
        r.invalid_reason = vr.value("reason", std::string{});
        for (const auto& v : vr.at("violations")) {
          const auto vertices = v.at("vertices").get<std::vector<VertexId>>();
          if (vertices.empty() || vertices.size() > 2) throw ParseError("violation must name one or two vertices");
          Violation viol{vertices[0], std::nullopt, rational_field(v.at("sum"))};
          if (vertices.size() == 2) viol.second = vertices[1];
          r.violations.push_back(std::move(viol));
        }
        doc.verification.push_back(std::move(r));
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed assignment document: ") + e.what());
  }
  return doc;
}

Graph document_graph(const AssignmentDocument& doc) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    if (doc.edges[i].id != i) throw ParseError("edge records must be listed by id 0..m-1");
    pairs.emplace_back(doc.edges[i].u, doc.edges[i].v);
  }
  return build_graph(doc.n, pairs);
}

LabeledOrientation document_assignment(const AssignmentDocument& doc) {
  LabeledOrientation a;
  for (const auto& e : doc.edges) a.arcs.push_back({e.tail, e.head, e.label});
  return a;
}

std::string csv_header() {
  return "n,p,trials,seed,frac_diam_le2,frac_radius_le2,mean_X,expected_X,frac_X_ge_1,markov_ok,"
         "frac_antimagic_verified";
}

std::string csv_row(const TrialBatchRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << to_string(r.p) << ',' << r.trials << ',' << r.seed << ',' << to_string(r.frac_diam_le2) << ','
     << to_string(r.frac_radius_le2) << ',' << to_string(r.mean_X) << ',' << to_string(r.expected_X) << ','
     << to_string(r.frac_X_ge_1) << ',' << (r.markov_ok ? "true" : "false") << ','
     << (r.frac_antimagic_verified ? to_string(*r.frac_antimagic_verified) : std::string{});
  return os.str();
}

}  // namespace antimagic
