#include "antimagic/labels.hpp"

#include <algorithm>
#include <stdexcept>

#include "antimagic/errors.hpp"

namespace antimagic {

LabelSet::LabelSet(std::vector<Label> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  if (!values_.empty() && values_.front() <= 0)
    throw LabelError("label " + to_string(values_.front()) + " is not positive");
  auto dup = std::adjacent_find(values_.begin(), values_.end());
  if (dup != values_.end()) throw LabelError("duplicate label " + to_string(*dup));
}

LabelSet LabelSet::first_integers(std::size_t m) {
  std::vector<Label> values;
  values.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) values.emplace_back(static_cast<long long>(i));
  return LabelSet(std::move(values));
}

LabelSet LabelSet::slice(std::size_t first, std::size_t count) const {
  if (first + count > values_.size()) throw std::out_of_range("LabelSet::slice out of range");
  LabelSet out;
  out.values_.assign(values_.begin() + static_cast<std::ptrdiff_t>(first),
                     values_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return out;
}

}  // namespace antimagic
