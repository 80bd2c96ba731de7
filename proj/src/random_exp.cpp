#include "antimagic/random_exp.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/radius2.hpp"
#include "antimagic/verify.hpp"

namespace antimagic {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct TrialOutcome {
  bool diam_le2 = false;
  bool radius_le2 = false;
  std::uint64_t x = 0;
  bool verified = false;
};

template <class Fn>
std::vector<TrialOutcome> run_trials(std::size_t trials, unsigned workers, Fn&& fn) {
  std::vector<TrialOutcome> out(trials);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(trials, 1)));
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) out[t] = fn(t);
    return out;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < trials; t = next++) out[t] = fn(t);
      });
  }
  return out;
}

TrialOutcome measure(const Graph& g) {
  TrialOutcome o;
  o.x = count_no_common_neighbor(g);
  if (g.vertex_count() > 0 && is_connected(g)) {
    const Metrics m = graph_metrics(g);
    o.diam_le2 = m.diameter <= 2;
    o.radius_le2 = m.radius.value <= 2;
  }
  return o;
}

TrialBatchRecord aggregate(std::size_t n, const Rational& p, std::size_t trials, std::uint64_t seed,
                           const std::vector<TrialOutcome>& outcomes) {
  TrialBatchRecord r;
  r.n = n;
  r.p = p;
  r.trials = trials;
  r.seed = seed;
  std::size_t diam = 0, rad = 0, x_pos = 0;
  Integer x_total = 0;
  for (const auto& o : outcomes) {
    diam += o.diam_le2;
    rad += o.radius_le2;
    x_pos += o.x >= 1;
    x_total += o.x;
  }
  const Integer t(trials);
  r.frac_diam_le2 = Rational(Integer(diam), t);
  r.frac_radius_le2 = Rational(Integer(rad), t);
  r.mean_X = Rational(x_total, t);
  r.frac_X_ge_1 = Rational(Integer(x_pos), t);
  r.expected_X = n >= 2 ? expected_no_common_neighbor(n, p) : Rational(0);
  r.markov_ok = markov_consistent(r.frac_X_ge_1, r.expected_X, trials);
  return r;
}

void require_trials(std::size_t trials) {
  if (trials == 0) throw Error("a trial batch needs at least one trial");
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ index); }

Graph gen_gnp(std::size_t n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw Error("edge probability " + to_string(p) + " is outside [0,1]");
  const Integer& den = denominator(p);
  if (den >= (Integer(1) << 63)) throw Error("edge probability denominator is too large");
  const auto q = den.convert_to<std::uint64_t>();
  const auto k = numerator(p).convert_to<std::uint64_t>();
  // 2^64 mod q; the top `rem` draws are rejected so draw % q is uniform.
  const std::uint64_t rem = (UINT64_MAX % q + 1) % q;

  std::mt19937_64 engine(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      std::uint64_t draw = engine();
      while (rem != 0 && draw > UINT64_MAX - rem) draw = engine();
      if (draw % q < k) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

Rational expected_no_common_neighbor(std::size_t n, const Rational& p) {
  if (n < 2) throw Error("expected_no_common_neighbor needs n >= 2");
  const Integer pairs = Integer(n) * Integer(n - 1) / 2;
  const Rational base = Rational(1) - p * p;
  Rational power = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) power *= base;
  return Rational(pairs) * power;
}

std::uint64_t count_no_common_neighbor(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * words, 0);
  for (const Edge& e : g.edges()) {
    bits[e.u * words + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    bits[e.v * words + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool common = false;
      for (std::size_t w = 0; w < words && !common; ++w) common = (bits[i * words + w] & bits[j * words + w]) != 0;
      count += !common;
    }
  }
  return count;
}

bool markov_consistent(const Rational& frac_x_ge_1, const Rational& expected_x, std::size_t trials) {
  const Rational excess = frac_x_ge_1 - expected_x;
  if (excess <= 0) return true;
  return excess * excess <= Rational(16) * expected_x / Rational(Integer(trials));
}

TrialBatchRecord diameter2_trials(std::size_t n, const Rational& p, std::size_t trials, std::uint64_t seed,
                                  unsigned workers) {
  require_trials(trials);
  auto outcomes = run_trials(trials, workers, [&](std::size_t t) { return measure(gen_gnp(n, p, trial_seed(seed, t))); });
  return aggregate(n, p, trials, seed, outcomes);
}

TrialBatchRecord antimagic_pipeline_trials(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned workers) {
  require_trials(trials);
  const Rational half(1, 2);
  auto outcomes = run_trials(trials, workers, [&](std::size_t t) {
    const Graph g = gen_gnp(n, half, trial_seed(seed, t));
    TrialOutcome o = measure(g);
    if (o.radius_le2) {
      const LabelSet labels = LabelSet::first_integers(g.edge_count());
      o.verified = check_antimagic(g, construct_antimagic_radius2(g, labels), &labels).passed();
    }
    return o;
  });
  TrialBatchRecord r = aggregate(n, half, trials, seed, outcomes);
  std::size_t verified = 0;
  for (const auto& o : outcomes) {
    verified += o.verified;
    r.verification_failures += o.radius_le2 && !o.verified;
  }
  r.frac_antimagic_verified = Rational(Integer(verified), Integer(trials));
  return r;
}

}  // namespace antimagic
