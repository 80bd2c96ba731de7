#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labels.hpp"

namespace antimagic {

struct VertexSumTable {
  std::vector<Rational> sums;
  Rational min;
  Rational max;
  std::size_t zero_count = 0;

  Rational total() const;
};

// s(v) = sum of labels on arcs with head v minus sum on arcs with tail v.
// Throws Error when the arcs do not match the edges of g.
VertexSumTable vertex_sums(const Graph& g, const LabeledOrientation& a);

// Describes why `a` is not a valid assignment for g, or nullopt if it is: one
// arc per edge with matching endpoints and pairwise distinct positive labels,
// equal to `expected` when given.
std::optional<std::string> assignment_problem(const Graph& g, const LabeledOrientation& a,
                                              const LabelSet* expected = nullptr);

enum class CheckMode { Local, Full, LemmaBound };
enum class Verdict { Pass, Fail, Invalid };

struct Violation {
  VertexId first;
  std::optional<VertexId> second;  // absent for lemma-bound violations
  Rational sum;                    // common sum, or the offending vertex's sum

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  CheckMode mode = CheckMode::Local;
  Verdict verdict = Verdict::Pass;
  std::vector<Violation> violations;
  std::string invalid_reason;

  bool passed() const { return verdict == Verdict::Pass; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Adjacent pairs with equal sums.
VerificationReport check_local_antimagic(const Graph& g, const LabeledOrientation& a,
                                         const LabelSet* expected = nullptr);

// Any pair with equal sums; a group of k equal sums is reported as the k-1
// pairs joining its smallest vertex to the others.
VerificationReport check_antimagic(const Graph& g, const LabeledOrientation& a, const LabelSet* expected = nullptr);

// Normal: flags v with s(v) >= 0 and s(v) > block max of v's component.
// Reversed: flags v with s(v) <= 0 and s(v) < -block max. block_max is indexed
// by component in connected_components order; nullopt (no edges) acts as 0.
VerificationReport check_lemma_bound(const Graph& g, const LabeledOrientation& a,
                                     const std::vector<std::optional<Label>>& block_max, Polarity polarity);

// Block maxima read off the assignment: the largest label inside each component.
std::vector<std::optional<Label>> component_label_maxima(const Graph& g, const LabeledOrientation& a);

VerificationReport check_lemma_bound(const Graph& g, const LabeledOrientation& a, Polarity polarity);

enum class SumMode { Local, Full };

struct OracleResult {
  bool exists = false;
  std::optional<LabeledOrientation> witness;
  std::uint64_t count = 0;
};

inline constexpr std::size_t kOracleMaxEdges = 8;

// Enumerates every orientation and every bijection onto `labels`. Bijections
// run over lexicographic permutations of the sorted labels (edge e receives
// the perm[e]-th label); for each, orientations run in binary-reflected Gray
// code order where bit e set means edge e points v -> u. The witness is the
// first valid assignment in that order.
//
// Throws InstanceTooLargeError when |E(g)| > 8, LabelError on a size mismatch.
OracleResult exhaustive_oracle(const Graph& g, const LabelSet& labels, SumMode mode);

// True when `a` is one of the assignments exhaustive_oracle would count.
bool oracle_accepts(const Graph& g, const LabelSet& labels, SumMode mode, const LabeledOrientation& a);

}  // namespace antimagic
