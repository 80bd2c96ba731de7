#include "antimagic/euler_lemma.hpp"

#include <algorithm>
#include <list>
#include <optional>
#include <string>

#include "antimagic/errors.hpp"

namespace antimagic {

std::size_t Multigraph::real_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const MultiEdge& e) { return !e.augmented; }));
}

Multigraph eulerize(const Graph& g) {
  Multigraph mg;
  mg.vertex_count = g.vertex_count();
  for (const Edge& e : g.edges()) mg.edges.push_back({e.id, e.u, e.v, false});

  std::vector<VertexId> odd;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2)
    mg.edges.push_back({static_cast<EdgeId>(mg.edges.size()), odd[i], odd[i + 1], true});
  return mg;
}

namespace {

struct MultiIncidence {
  VertexId neighbor;
  EdgeId edge;
};

class CircuitBuilder {
 public:
  explicit CircuitBuilder(const Multigraph& mg) : mg_(mg), adjacency_(mg.vertex_count), cursor_(mg.vertex_count, 0),
                                                  used_(mg.edges.size(), false) {
    for (const MultiEdge& e : mg.edges) {
      if (e.u == e.v) throw Error("self-loop in multigraph at vertex " + std::to_string(e.u));
      adjacency_.at(e.u).push_back({e.v, e.id});
      adjacency_.at(e.v).push_back({e.u, e.id});
    }
    for (auto& adj : adjacency_) {
      if (adj.size() % 2 != 0) throw Error("Euler circuit requires every degree to be even");
      std::sort(adj.begin(), adj.end(), [](const MultiIncidence& a, const MultiIncidence& b) {
        return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
      });
    }
  }

  std::optional<EdgeId> next_unused(VertexId v) {
    auto& adj = adjacency_[v];
    std::size_t& c = cursor_[v];
    while (c < adj.size() && used_[adj[c].edge]) ++c;
    if (c == adj.size()) return std::nullopt;
    return adj[c].edge;
  }

  // Greedy closed walk from v; stops when v has no unused edge left.
  std::list<CircuitStep> walk(VertexId v, std::optional<EdgeId> first) {
    std::list<CircuitStep> out;
    VertexId cur = v;
    std::optional<EdgeId> e = first ? first : next_unused(cur);
    while (e) {
      used_[*e] = true;
      const MultiEdge& me = mg_.edges[*e];
      const VertexId to = me.u == cur ? me.v : me.u;
      out.push_back({cur, *e, to});
      cur = to;
      e = next_unused(cur);
    }
    return out;
  }

  bool all_used() const { return std::all_of(used_.begin(), used_.end(), [](bool b) { return b; }); }

 private:
  const Multigraph& mg_;
  std::vector<std::vector<MultiIncidence>> adjacency_;
  std::vector<std::size_t> cursor_;
  std::vector<bool> used_;
};

}  // namespace

EulerCircuit euler_circuit(const Multigraph& mg) {
  CircuitBuilder builder(mg);
  EulerCircuit circuit;
  if (mg.edges.empty()) return circuit;

  std::optional<EdgeId> first;
  VertexId start = static_cast<VertexId>(mg.vertex_count);
  for (const MultiEdge& e : mg.edges) {
    if (!e.augmented) continue;
    const VertexId lo = std::min(e.u, e.v);
    if (lo < start) {
      start = lo;
      first = e.id;
    }
  }
  if (!first) {
    start = static_cast<VertexId>(mg.vertex_count);
    for (const MultiEdge& e : mg.edges) start = std::min({start, e.u, e.v});
  }

  circuit.start = start;
  std::list<CircuitStep> steps = builder.walk(start, first);
  for (auto it = steps.begin(); it != steps.end(); ++it) {
    if (builder.next_unused(it->from)) {
      auto sub = builder.walk(it->from, std::nullopt);
      it = steps.insert(it, sub.begin(), sub.end());
    }
  }
  if (!builder.all_used()) throw DisconnectedGraphError("multigraph edges do not form a single component");
  circuit.steps.assign(steps.begin(), steps.end());
  return circuit;
}

LabeledOrientation lemma_orient_label(const Graph& g, const LabelSet& labels, Polarity polarity) {
  if (labels.size() != g.edge_count())
    throw LabelError("label count " + std::to_string(labels.size()) + " does not match edge count " +
                     std::to_string(g.edge_count()));

  LabeledOrientation out;
  out.arcs.resize(g.edge_count());
  std::size_t offset = 0;
  for (const Component& comp : connected_components(g)) {
    if (comp.edges.empty()) continue;
    const LabelSet block = labels.slice(offset, comp.edges.size());
    offset += comp.edges.size();

    const InducedSubgraph sub = induced_subgraph(g, comp.vertices);
    const Multigraph mg = eulerize(sub.graph);
    const EulerCircuit circuit = euler_circuit(mg);
    std::size_t j = 0;
    for (const CircuitStep& step : circuit.steps) {
      if (mg.edges[step.edge].augmented) continue;
      Arc arc{sub.parent_vertex[step.from], sub.parent_vertex[step.to], block[j++]};
      if (polarity == Polarity::Reversed) std::swap(arc.tail, arc.head);
      out.arcs[sub.parent_edge[step.edge]] = std::move(arc);
    }
  }
  return out;
}

}  // namespace antimagic
