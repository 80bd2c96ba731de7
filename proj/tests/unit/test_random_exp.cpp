#include <doctest.h>

#include "antimagic/errors.hpp"
#include "antimagic/radius2.hpp"
#include "antimagic/random_exp.hpp"
#include "antimagic/verify.hpp"

using namespace antimagic;

namespace {

const Rational kHalf(1, 2);

// Exact E[X] by summing over all 2^C(n,2) graphs weighted by their probability.
Rational enumerated_expectation(std::size_t n, const Rational& p) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    Rational weight = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1u) {
        edges.push_back(pairs[k]);
        weight *= p;
      } else {
        weight *= Rational(1) - p;
      }
    }
    total += weight * Rational(static_cast<long long>(count_no_common_neighbor(build_graph(n, edges))));
  }
  return total;
}

}  // namespace

TEST_CASE("gen_gnp extremes and determinism") {
  const Graph empty = gen_gnp(4, Rational(0), 99);
  CHECK(empty.edge_count() == 0);
  const Graph full = gen_gnp(4, Rational(1), 99);
  CHECK(full.edge_count() == 6);
  CHECK(gen_gnp(50, kHalf, 12345) == gen_gnp(50, kHalf, 12345));
  CHECK_FALSE(gen_gnp(50, kHalf, 12345) == gen_gnp(50, kHalf, 12346));
  CHECK_THROWS_AS(gen_gnp(4, Rational(3, 2), 1), Error);
  CHECK_THROWS_AS(gen_gnp(4, Rational(-1, 2), 1), Error);
}

TEST_CASE("gen_gnp edge density is close to p") {
  std::size_t edges = 0;
  for (std::uint64_t s = 0; s < 40; ++s) edges += gen_gnp(40, Rational(1, 3), s).edge_count();
  const double density = static_cast<double>(edges) / (40.0 * 780.0);
  CHECK(density == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}

TEST_CASE("expected_no_common_neighbor closed form") {
  CHECK(expected_no_common_neighbor(2, kHalf) == 1);
  CHECK(expected_no_common_neighbor(3, kHalf) == Rational(9, 4));
  CHECK(expected_no_common_neighbor(10, kHalf) == Rational(295245, 65536));
  CHECK_THROWS_AS(expected_no_common_neighbor(1, kHalf), Error);
}

TEST_CASE("closed form matches enumeration over all graphs") {
  for (std::size_t n = 2; n <= 5; ++n) {
    CHECK(expected_no_common_neighbor(n, kHalf) == enumerated_expectation(n, kHalf));
    CHECK(expected_no_common_neighbor(n, Rational(1, 3)) == enumerated_expectation(n, Rational(1, 3)));
  }
}

TEST_CASE("count_no_common_neighbor") {
  CHECK(count_no_common_neighbor(build_graph(2, {{0, 1}})) == 1);
  // Path 0-1-2: only {0,2} share a neighbor.
  CHECK(count_no_common_neighbor(build_graph(3, {{0, 1}, {1, 2}})) == 2);
  CHECK(count_no_common_neighbor(gen_gnp(6, Rational(1), 0)) == 0);
}

TEST_CASE("markov_consistent decides the slack exactly") {
  CHECK(markov_consistent(Rational(1, 10), Rational(1, 5), 10));
  CHECK_FALSE(markov_consistent(kHalf, Rational(1, 4), 100));
  CHECK(markov_consistent(kHalf, Rational(1, 4), 10));
  // Boundary: excess^2 == 16 E / T.
  CHECK(markov_consistent(Rational(9, 20), Rational(1, 4), 100));
  CHECK_FALSE(markov_consistent(Rational(9, 20) + Rational(1, 1000), Rational(1, 4), 100));
}

TEST_CASE("diameter2_trials examples") {
  const auto complete = diameter2_trials(5, Rational(1), 10, 3);
  CHECK(complete.frac_diam_le2 == 1);
  CHECK(complete.frac_radius_le2 == 1);
  CHECK(complete.mean_X == 0);

  const auto pair = diameter2_trials(2, kHalf, 100, 4);
  CHECK(pair.mean_X == 1);
  CHECK(pair.expected_X == 1);
  CHECK(pair.frac_X_ge_1 == 1);
  CHECK(pair.markov_ok);
  CHECK_FALSE(pair.frac_antimagic_verified.has_value());

  CHECK_THROWS_AS(diameter2_trials(5, kHalf, 0, 1), Error);
}

TEST_CASE("batches do not depend on the worker count") {
  const auto serial = diameter2_trials(20, kHalf, 300, 77, 1);
  const auto parallel = diameter2_trials(20, kHalf, 300, 77, 4);
  CHECK(serial == parallel);
  CHECK(antimagic_pipeline_trials(15, 60, 5, 1) == antimagic_pipeline_trials(15, 60, 5, 3));
}

TEST_CASE("pipeline on tiny graphs") {
  const auto k2 = antimagic_pipeline_trials(2, 10, 8);
  CHECK(k2.verification_failures == 0);
  REQUIRE(k2.frac_antimagic_verified.has_value());
  CHECK(*k2.frac_antimagic_verified == k2.frac_radius_le2);
  CHECK(k2.frac_radius_le2 > 0);
}

TEST_CASE("a sampled C5 gets a verified antimagic orientation") {
  std::optional<Graph> c5;
  for (std::uint64_t s = 0; s < 5000 && !c5; ++s) {
    Graph g = gen_gnp(5, kHalf, s);
    if (g.edge_count() != 5 || !is_connected(g)) continue;
    bool two_regular = true;
    for (VertexId v = 0; v < 5; ++v) two_regular = two_regular && g.degree(v) == 2;
    if (two_regular) c5 = g;
  }
  REQUIRE(c5.has_value());
  CHECK(radius(*c5).value == 2);
  const auto labels = LabelSet::first_integers(5);
  CHECK(check_antimagic(*c5, construct_antimagic_integer(*c5), &labels).passed());
}
