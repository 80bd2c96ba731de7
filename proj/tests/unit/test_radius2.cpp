#include <doctest.h>

#include "antimagic/errors.hpp"
#include "antimagic/radius2.hpp"
#include "antimagic/verify.hpp"
#include "support/catalog.hpp"
#include "support/generators.hpp"

using namespace antimagic;

namespace {

Rational R(long long v) { return Rational(v); }

}  // namespace

TEST_CASE("radius-1 star") {
  const Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto a = construct_antimagic_radius2(g, LabelSet::first_integers(3));
  CHECK(a.arcs[0] == Arc{1, 0, R(1)});
  CHECK(a.arcs[1] == Arc{2, 0, R(2)});
  CHECK(a.arcs[2] == Arc{3, 0, R(3)});
  CHECK(vertex_sums(g, a).sums == std::vector<Rational>{R(6), R(-1), R(-2), R(-3)});
}

TEST_CASE("C4 follows the staged rules") {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto res = construct_antimagic_radius2_traced(g, LabelSet::first_integers(4));
  const auto& a = res.result;
  CHECK(a.arcs[2] == Arc{3, 2, R(1)});
  CHECK(a.arcs[3] == Arc{3, 0, R(2)});
  CHECK(a.arcs[1] == Arc{1, 2, R(3)});
  CHECK(a.arcs[0] == Arc{1, 0, R(4)});
  CHECK(vertex_sums(g, a).sums == std::vector<Rational>{R(6), R(-7), R(4), R(-3)});
  CHECK(res.before_rearrangement == res.result);
}

TEST_CASE("K2 with a single label") {
  const Graph g = build_graph(2, {{0, 1}});
  const auto a = construct_antimagic_radius2(g, LabelSet({R(7)}));
  CHECK(a.arcs[0] == Arc{1, 0, R(7)});
  CHECK(vertex_sums(g, a).sums == std::vector<Rational>{R(7), R(-7)});
}

TEST_CASE("construct_antimagic_integer on small families") {
  const Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  for (const Graph* g : {&c5, &k4, &p4}) {
    const LabelSet labels = LabelSet::first_integers(g->edge_count());
    CHECK(check_antimagic(*g, construct_antimagic_integer(*g), &labels).passed());
  }
}

TEST_CASE("rearrangement is exercised and only moves level-1 sums") {
  // Level 0 and level 2 sums must be bit-identical before and after.
  testing::Rng rng(41);
  int changed = 0;
  for (int i = 0; i < 3000; ++i) {
    const Graph g = testing::random_connected_graph(rng, 4 + i % 8, 0.35);
    if (radius(g).value != 2) continue;
    const auto res = construct_antimagic_radius2_traced(g, LabelSet::first_integers(g.edge_count()));
    const auto before = vertex_sums(g, res.before_rearrangement).sums;
    const auto after = vertex_sums(g, res.result).sums;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (res.levels.level_of[v] != 1) CHECK(before[v] == after[v]);
    changed += res.before_rearrangement != res.result;
  }
  CHECK(changed > 0);
}

TEST_CASE("errors") {
  const Graph p6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK_THROWS_AS(construct_antimagic_integer(p6), RadiusTooLargeError);
  CHECK_THROWS_AS(construct_antimagic_integer(build_graph(4, {{0, 1}, {2, 3}})), DisconnectedGraphError);
  CHECK_THROWS_AS(construct_antimagic_radius2(build_graph(2, {{0, 1}}), LabelSet::first_integers(2)), LabelError);
}

namespace {

void check_full(const Graph& g, const LabelSet& labels) {
  const auto res = construct_antimagic_radius2_traced(g, labels);
  REQUIRE(check_antimagic(g, res.result, &labels).passed());
  const auto sums = vertex_sums(g, res.result).sums;
  for (VertexId v = 0; v < g.vertex_count() && g.vertex_count() > 1; ++v) {
    if (res.levels.level_of[v] == 1)
      CHECK(sums[v] < 0);
    else
      CHECK(sums[v] > 0);
  }
}

}  // namespace

TEST_CASE("full antimagic property on the radius<=2 catalog") {
  testing::Rng rng(43);
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    if (radius(g).value > 2) continue;
    check_full(g, LabelSet::first_integers(g.edge_count()));
    check_full(g, testing::random_rational_labels(rng, g.edge_count()));
  }
}

TEST_CASE("full antimagic property on 1000 random diameter-2 graphs") {
  testing::Rng rng(47);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = testing::random_diameter2_graph(rng, 2 + i % 8);
    check_full(g, i % 2 ? LabelSet::first_integers(g.edge_count()) : testing::random_rational_labels(rng, g.edge_count()));
  }
}

TEST_CASE("radius-2 graphs of larger diameter") {
  // Spiders: paths of length 2 hanging from a hub have diameter 4.
  for (std::size_t legs = 1; legs <= 6; ++legs) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId k = 0; k < legs; ++k) {
      edges.emplace_back(0, 1 + 2 * k);
      edges.emplace_back(1 + 2 * k, 2 + 2 * k);
    }
    const Graph g = build_graph(1 + 2 * legs, edges);
    check_full(g, LabelSet::first_integers(g.edge_count()));
  }
}
