#include <doctest.h>

#include "antimagic/errors.hpp"
#include "antimagic/local_antimagic.hpp"
#include "antimagic/verify.hpp"
#include "support/catalog.hpp"
#include "support/generators.hpp"

using namespace antimagic;

namespace {

Rational R(long long v) { return Rational(v); }

LabelSet labels_of(std::initializer_list<long long> values) {
  std::vector<Label> v;
  for (auto x : values) v.emplace_back(x);
  return LabelSet(std::move(v));
}

}  // namespace

TEST_CASE("partition_labels examples") {
  SUBCASE("diamond with a tail") {
    const Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const auto ls = bfs_levels(g, 0);
    CHECK(ls.levels == std::vector<std::vector<VertexId>>{{0}, {1, 2}, {3}});
    const auto p = partition_labels(LabelSet::first_integers(5), ls, g);
    REQUIRE(p.blocks.size() == 3);
    CHECK(p.blocks[1] == labels_of({1}));
    CHECK(p.blocks[2].empty());
    CHECK(p.cross() == labels_of({2, 3, 4, 5}));
  }
  SUBCASE("tree") {
    const Graph g = build_graph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
    const auto p = partition_labels(LabelSet::first_integers(4), bfs_levels(g, 0), g);
    CHECK(p.cross() == LabelSet::first_integers(4));
    for (std::size_t i = 1; i < p.blocks.size(); ++i) CHECK(p.blocks[i].empty());
  }
  SUBCASE("K3") {
    const Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto p = partition_labels(LabelSet::first_integers(3), bfs_levels(g, 0), g);
    CHECK(p.blocks[1] == labels_of({1}));
    CHECK(p.cross() == labels_of({2, 3}));
  }
  SUBCASE("size mismatch") {
    const Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(partition_labels(LabelSet::first_integers(2), bfs_levels(g, 0), g), LabelError);
  }
}

TEST_CASE("construct_local_antimagic examples") {
  SUBCASE("K2") {
    const Graph g = build_graph(2, {{0, 1}});
    const auto a = construct_local_antimagic(g, labels_of({5}));
    CHECK(a.arcs[0] == Arc{1, 0, R(5)});
    CHECK(vertex_sums(g, a).sums == std::vector<Rational>{R(5), R(-5)});
  }
  SUBCASE("path rooted at 0") {
    const Graph g = build_graph(3, {{0, 1}, {1, 2}});
    const auto a = construct_local_antimagic(g, LabelSet::first_integers(2), VertexId{0});
    CHECK(a.arcs[0] == Arc{1, 0, R(2)});
    CHECK(a.arcs[1] == Arc{1, 2, R(1)});
    CHECK(vertex_sums(g, a).sums == std::vector<Rational>{R(2), R(-3), R(1)});
  }
  SUBCASE("K3 rooted at 0") {
    const Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    const auto a = construct_local_antimagic(g, LabelSet::first_integers(3), VertexId{0});
    CHECK(a.arcs[1] == Arc{2, 1, R(1)});
    CHECK(a.arcs[0] == Arc{1, 0, R(2)});
    CHECK(a.arcs[2] == Arc{2, 0, R(3)});
    CHECK(vertex_sums(g, a).sums == std::vector<Rational>{R(5), R(-1), R(-4)});
    CHECK(check_antimagic(g, a).passed());
  }
  SUBCASE("default labels are 1..m") {
    const Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(construct_local_antimagic(g) == construct_local_antimagic(g, LabelSet::first_integers(3)));
  }
}

TEST_CASE("construct_local_antimagic rejects bad input") {
  CHECK_THROWS_AS(construct_local_antimagic(build_graph(3, {{0, 1}})), IsolatedVertexError);
  CHECK_THROWS_AS(construct_local_antimagic(build_graph(2, {{0, 1}}), LabelSet::first_integers(2)), LabelError);
}

namespace {

void check_local_properties(const Graph& g, const LabelSet& labels, std::optional<VertexId> root) {
  const auto res = construct_local_antimagic_traced(g, labels, root);
  const auto report = check_local_antimagic(g, res.assignment, &labels);
  CHECK(report.passed());
  const auto t = vertex_sums(g, res.assignment);
  CHECK(t.zero_count == 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (res.level_of[v] % 2 == 1)
      CHECK(t.sums[v] < 0);
    else
      CHECK(t.sums[v] > 0);
  }
  // Within-level injectivity per component.
  const auto comps = connected_components(g);
  for (const auto& comp : comps) {
    for (std::size_t i = 0; i < comp.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < comp.vertices.size(); ++j) {
        const VertexId a = comp.vertices[i], b = comp.vertices[j];
        if (res.level_of[a] == res.level_of[b]) CHECK(t.sums[a] != t.sums[b]);
      }
  }
}

}  // namespace

TEST_CASE("local antimagic property for every root of the 6-vertex catalog") {
  testing::Rng rng(17);
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    if (g.edge_count() == 0) continue;
    const LabelSet rational = testing::random_rational_labels(rng, g.edge_count());
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      check_local_properties(g, LabelSet::first_integers(g.edge_count()), root);
      check_local_properties(g, rational, root);
    }
  }
}

TEST_CASE("local antimagic property on 1000 random graphs up to 9 vertices") {
  testing::Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + i % 8;
    const Graph g = testing::random_connected_graph(rng, n, 0.1 + 0.1 * (i % 7));
    const auto root = static_cast<VertexId>(i % n);
    check_local_properties(g, testing::random_rational_labels(rng, g.edge_count()), root);
  }
}

TEST_CASE("disconnected input is handled per component") {
  const Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {5, 6}, {4, 5}});
  const auto res = construct_local_antimagic_traced(g, LabelSet::first_integers(6), VertexId{4});
  CHECK(res.roots == std::vector<VertexId>{0, 4});
  CHECK(check_local_antimagic(g, res.assignment).passed());
  // Component {0,1,2} holds edges 0..2 and gets the three smallest labels.
  for (EdgeId e : {0u, 1u, 2u}) CHECK(res.assignment.arcs[e].label <= 3);
}

TEST_CASE("construction is deterministic") {
  testing::Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testing::random_connected_graph(rng, 12, 0.3);
    const auto labels = testing::random_rational_labels(rng, g.edge_count());
    CHECK(construct_local_antimagic(g, labels) == construct_local_antimagic(g, labels));
  }
}
