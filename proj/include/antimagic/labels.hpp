#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/rational.hpp"

namespace antimagic {

using Label = Rational;

// A finite set of distinct, strictly positive labels kept in ascending order.
class LabelSet {
 public:
  LabelSet() = default;
  // Throws LabelError on a non-positive or repeated value.
  explicit LabelSet(std::vector<Label> values);

  // {1, 2, ..., m}
  static LabelSet first_integers(std::size_t m);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const Label& operator[](std::size_t i) const { return values_[i]; }
  const Label& max() const { return values_.back(); }
  const Label& min() const { return values_.front(); }
  std::span<const Label> values() const noexcept { return values_; }

  // Contiguous run of the ascending order, [first, first + count).
  LabelSet slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<Label> values_;
};

struct Arc {
  VertexId tail;
  VertexId head;
  Label label;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// An orientation D together with a labeling tau: arcs[e] describes edge e.
struct LabeledOrientation {
  std::vector<Arc> arcs;

  friend bool operator==(const LabeledOrientation&, const LabeledOrientation&) = default;
};

enum class Polarity { Normal, Reversed };

}  // namespace antimagic
