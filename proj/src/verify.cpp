#include "antimagic/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "antimagic/errors.hpp"

namespace antimagic {

Rational VertexSumTable::total() const {
  Rational t = 0;
  for (const auto& s : sums) t += s;
  return t;
}

std::optional<std::string> assignment_problem(const Graph& g, const LabeledOrientation& a, const LabelSet* expected) {
  if (a.arcs.size() != g.edge_count())
    return "assignment has " + std::to_string(a.arcs.size()) + " arcs for " + std::to_string(g.edge_count()) +
           " edges";
  std::vector<Label> used;
  used.reserve(a.arcs.size());
  for (const Edge& e : g.edges()) {
    const Arc& arc = a.arcs[e.id];
    const bool forward = arc.tail == e.u && arc.head == e.v;
    const bool backward = arc.tail == e.v && arc.head == e.u;
    if (!forward && !backward)
      return "arc " + std::to_string(e.id) + " (" + std::to_string(arc.tail) + "->" + std::to_string(arc.head) +
             ") does not match edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (arc.label <= 0) return "arc " + std::to_string(e.id) + " has non-positive label " + to_string(arc.label);
    used.push_back(arc.label);
  }
  std::sort(used.begin(), used.end());
  if (auto dup = std::adjacent_find(used.begin(), used.end()); dup != used.end())
    return "label " + to_string(*dup) + " is used more than once";
  if (expected && !std::equal(used.begin(), used.end(), expected->values().begin(), expected->values().end()))
    return "labels do not form a bijection onto the expected label set";
  return std::nullopt;
}

VertexSumTable vertex_sums(const Graph& g, const LabeledOrientation& a) {
  if (a.arcs.size() != g.edge_count()) throw Error("assignment does not cover the edges of the graph");
  VertexSumTable t;
  t.sums.assign(g.vertex_count(), Rational(0));
  for (const Edge& e : g.edges()) {
    const Arc& arc = a.arcs[e.id];
    if (!((arc.tail == e.u && arc.head == e.v) || (arc.tail == e.v && arc.head == e.u)))
      throw Error("arc " + std::to_string(e.id) + " does not match its edge");
    t.sums[arc.head] += arc.label;
    t.sums[arc.tail] -= arc.label;
  }
  if (!t.sums.empty()) {
    auto [lo, hi] = std::minmax_element(t.sums.begin(), t.sums.end());
    t.min = *lo;
    t.max = *hi;
  }
  t.zero_count = static_cast<std::size_t>(std::count(t.sums.begin(), t.sums.end(), Rational(0)));
  return t;
}

namespace {

VerificationReport invalid_report(CheckMode mode, std::string reason) {
  VerificationReport r;
  r.mode = mode;
  r.verdict = Verdict::Invalid;
  r.invalid_reason = std::move(reason);
  return r;
}

VerificationReport finish(VerificationReport r) {
  r.verdict = r.violations.empty() ? Verdict::Pass : Verdict::Fail;
  return r;
}

}  // namespace

VerificationReport check_local_antimagic(const Graph& g, const LabeledOrientation& a, const LabelSet* expected) {
  if (auto problem = assignment_problem(g, a, expected)) return invalid_report(CheckMode::Local, *problem);
  const auto table = vertex_sums(g, a);
  VerificationReport r;
  r.mode = CheckMode::Local;
  for (const Edge& e : g.edges())
    if (table.sums[e.u] == table.sums[e.v])
      r.violations.push_back({std::min(e.u, e.v), std::max(e.u, e.v), table.sums[e.u]});
  return finish(std::move(r));
}

VerificationReport check_antimagic(const Graph& g, const LabeledOrientation& a, const LabelSet* expected) {
  if (auto problem = assignment_problem(g, a, expected)) return invalid_report(CheckMode::Full, *problem);
  const auto table = vertex_sums(g, a);
  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    return table.sums[x] != table.sums[y] ? table.sums[x] < table.sums[y] : x < y;
  });
  VerificationReport r;
  r.mode = CheckMode::Full;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && table.sums[order[j]] == table.sums[order[i]]) ++j;
    for (std::size_t k = i + 1; k < j; ++k) r.violations.push_back({order[i], order[k], table.sums[order[i]]});
    i = j;
  }
  std::sort(r.violations.begin(), r.violations.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return finish(std::move(r));
}

std::vector<std::optional<Label>> component_label_maxima(const Graph& g, const LabeledOrientation& a) {
  std::vector<std::optional<Label>> out;
  for (const Component& comp : connected_components(g)) {
    std::optional<Label> best;
    for (EdgeId e : comp.edges)
      if (!best || a.arcs.at(e).label > *best) best = a.arcs.at(e).label;
    out.push_back(best);
  }
  return out;
}

VerificationReport check_lemma_bound(const Graph& g, const LabeledOrientation& a,
                                     const std::vector<std::optional<Label>>& block_max, Polarity polarity) {
  if (auto problem = assignment_problem(g, a)) return invalid_report(CheckMode::LemmaBound, *problem);
  const auto comps = connected_components(g);
  if (block_max.size() != comps.size())
    return invalid_report(CheckMode::LemmaBound, "block maxima do not match the component count");
  const auto table = vertex_sums(g, a);
  VerificationReport r;
  r.mode = CheckMode::LemmaBound;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Rational bound = block_max[c] ? *block_max[c] : Rational(0);
    for (VertexId v : comps[c].vertices) {
      const Rational& s = table.sums[v];
      const bool bad = polarity == Polarity::Normal ? (s >= 0 && s > bound) : (s <= 0 && s < -bound);
      if (bad) r.violations.push_back({v, std::nullopt, s});
    }
  }
  return finish(std::move(r));
}

VerificationReport check_lemma_bound(const Graph& g, const LabeledOrientation& a, Polarity polarity) {
  if (auto problem = assignment_problem(g, a)) return invalid_report(CheckMode::LemmaBound, *problem);
  return check_lemma_bound(g, a, component_label_maxima(g, a), polarity);
}

namespace {

// Positive scaling preserves every equality between sums, so when the labels
// fit, the enumeration runs on 64-bit integers.
std::optional<std::vector<std::int64_t>> scaled_integer_labels(const LabelSet& labels) {
  Integer common = 1;
  for (const auto& x : labels.values()) common = boost::multiprecision::lcm(common, denominator(x));
  Integer total = 0;
  std::vector<Integer> scaled;
  for (const auto& x : labels.values()) {
    scaled.push_back(numerator(x) * (common / denominator(x)));
    total += scaled.back();
  }
  if (total >= (Integer(1) << 60)) return std::nullopt;
  std::vector<std::int64_t> out;
  for (const auto& s : scaled) out.push_back(s.convert_to<std::int64_t>());
  return out;
}

template <class Value>
bool sums_ok(const Graph& g, SumMode mode, const std::vector<Value>& sums, std::vector<Value>& scratch) {
  if (mode == SumMode::Local) {
    for (const Edge& e : g.edges())
      if (sums[e.u] == sums[e.v]) return false;
    return true;
  }
  scratch = sums;
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

template <class Value>
OracleResult enumerate(const Graph& g, const LabelSet& labels, const std::vector<Value>& values, SumMode mode) {
  const std::size_t m = g.edge_count();
  const auto edges = g.edges();
  OracleResult result;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Value> sums(g.vertex_count());
  std::vector<Value> scratch;
  std::vector<bool> reversed(m);
  const std::uint64_t orientations = std::uint64_t{1} << m;

  do {
    std::fill(sums.begin(), sums.end(), Value(0));
    std::fill(reversed.begin(), reversed.end(), false);
    for (std::size_t e = 0; e < m; ++e) {
      sums[edges[e].v] += values[perm[e]];
      sums[edges[e].u] -= values[perm[e]];
    }
    for (std::uint64_t k = 0;; ++k) {
      if (sums_ok(g, mode, sums, scratch)) {
        if (!result.exists) {
          LabeledOrientation w;
          for (std::size_t e = 0; e < m; ++e) {
            const Edge& ed = edges[e];
            w.arcs.push_back(reversed[e] ? Arc{ed.v, ed.u, labels[perm[e]]} : Arc{ed.u, ed.v, labels[perm[e]]});
          }
          result.witness = std::move(w);
          result.exists = true;
        }
        ++result.count;
      }
      if (k + 1 == orientations) break;
      const auto e = static_cast<std::size_t>(std::countr_zero(k + 1));
      const Value twice = values[perm[e]] + values[perm[e]];
      if (reversed[e]) {
        sums[edges[e].u] -= twice;
        sums[edges[e].v] += twice;
      } else {
        sums[edges[e].u] += twice;
        sums[edges[e].v] -= twice;
      }
      reversed[e] = !reversed[e];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

void check_oracle_input(const Graph& g, const LabelSet& labels) {
  if (g.edge_count() > kOracleMaxEdges)
    throw InstanceTooLargeError("exhaustive oracle supports at most " + std::to_string(kOracleMaxEdges) +
                                " edges, got " + std::to_string(g.edge_count()));
  if (labels.size() != g.edge_count())
    throw LabelError("label count " + std::to_string(labels.size()) + " does not match edge count " +
                     std::to_string(g.edge_count()));
}

}  // namespace

OracleResult exhaustive_oracle(const Graph& g, const LabelSet& labels, SumMode mode) {
  check_oracle_input(g, labels);
  if (auto scaled = scaled_integer_labels(labels)) return enumerate(g, labels, *scaled, mode);
  std::vector<Rational> values(labels.values().begin(), labels.values().end());
  return enumerate(g, labels, values, mode);
}

bool oracle_accepts(const Graph& g, const LabelSet& labels, SumMode mode, const LabeledOrientation& a) {
  check_oracle_input(g, labels);
  if (assignment_problem(g, a, &labels)) return false;
  std::vector<Rational> sums(g.vertex_count(), Rational(0));
  for (const Arc& arc : a.arcs) {
    sums[arc.head] += arc.label;
    sums[arc.tail] -= arc.label;
  }
  std::vector<Rational> scratch;
  return sums_ok(g, mode, sums, scratch);
}

}  // namespace antimagic
