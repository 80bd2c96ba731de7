#pragma once

#include <cstdint>
#include <optional>

#include "antimagic/graph.hpp"
#include "antimagic/rational.hpp"

namespace antimagic {

// G(n, p): each of the C(n,2) pairs, in lexicographic order, is an edge
// independently with probability p, drawn from std::mt19937_64 seeded with
// `seed`. p must lie in [0,1] with a denominator below 2^63.
Graph gen_gnp(std::size_t n, const Rational& p, std::uint64_t seed);

// Seed of trial `index` within a batch: splitmix64(seed ^ index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

// Exact C(n,2) * (1 - p^2)^(n-2), the expected number of vertex pairs
// without a common neighbor in G(n, p). Throws Error when n < 2.
Rational expected_no_common_neighbor(std::size_t n, const Rational& p);

// Unordered vertex pairs (adjacent or not) with no common neighbor.
std::uint64_t count_no_common_neighbor(const Graph& g);

struct TrialBatchRecord {
  std::size_t n = 0;
  Rational p;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  Rational frac_diam_le2;
  Rational frac_radius_le2;
  Rational mean_X;
  Rational expected_X;
  Rational frac_X_ge_1;
  bool markov_ok = false;
  std::optional<Rational> frac_antimagic_verified;  // pipeline batches only
  std::size_t verification_failures = 0;            // pipeline batches only

  friend bool operator==(const TrialBatchRecord&, const TrialBatchRecord&) = default;
};

// frac_X_ge_1 <= expected_X + 4 * sqrt(expected_X / trials), decided exactly.
bool markov_consistent(const Rational& frac_x_ge_1, const Rational& expected_x, std::size_t trials);

// workers == 0 picks std::thread::hardware_concurrency(). The record never
// depends on the worker count.
TrialBatchRecord diameter2_trials(std::size_t n, const Rational& p, std::size_t trials, std::uint64_t seed,
                                  unsigned workers = 1);

// G(n, 1/2) samples; every connected radius-<=2 sample gets an antimagic
// orientation with labels 1..m that is then verified independently.
TrialBatchRecord antimagic_pipeline_trials(std::size_t n, std::size_t trials, std::uint64_t seed,
                                           unsigned workers = 1);

}  // namespace antimagic
