#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labels.hpp"
#include "antimagic/random_exp.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {

// One "u v" pair per line; blank lines and '#' comments are skipped. An
// optional "n <count>" line fixes the vertex count, otherwise n = 1 + max id.
// Throws ParseError on malformed lines, InvalidGraphError on bad edges.
Graph parse_edge_list(std::string_view text);

std::string format_edge_list(const Graph& g);

// One label per line: integer, exact decimal, or p/q. Blank lines and '#'
// comments are skipped. Throws ParseError or LabelError.
LabelSet parse_labels(std::string_view text);

struct EdgeRecord {
  EdgeId id;
  VertexId u;
  VertexId v;
  VertexId tail;
  VertexId head;
  Label label;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// JSON document describing one labeled orientation together with its vertex
// sums and the verdicts computed for it.
struct AssignmentDocument {
  std::size_t n = 0;
  std::string construction;  // "local", "radius2", "lemma", "oracle"
  std::optional<Polarity> polarity;
  std::optional<std::vector<VertexId>> roots;
  std::optional<std::vector<std::size_t>> levels;  // BFS level of each vertex
  std::vector<EdgeRecord> edges;
  std::vector<Rational> sums;
  std::vector<VerificationReport> verification;

  friend bool operator==(const AssignmentDocument&, const AssignmentDocument&) = default;
};

AssignmentDocument make_document(const Graph& g, const LabeledOrientation& a, std::string construction);

// Throws ParseError on malformed JSON or missing fields.
AssignmentDocument parse_document(std::string_view text);
std::string serialize_document(const AssignmentDocument& doc);

// Rebuild the graph and the assignment; throws InvalidGraphError or ParseError.
Graph document_graph(const AssignmentDocument& doc);
LabeledOrientation document_assignment(const AssignmentDocument& doc);

std::string_view mode_name(CheckMode mode);
std::string_view verdict_name(Verdict verdict);

std::string csv_header();
std::string csv_row(const TrialBatchRecord& r);

}  // namespace antimagic
