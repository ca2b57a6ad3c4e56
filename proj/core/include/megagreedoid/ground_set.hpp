#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "megagreedoid/subset.hpp"

namespace mg {

// Distinct element labels in a fixed linear order. The stored order is the
// tie-breaking order used by descents and by the greedy facet comparator.
class GroundSet {
 public:
  static constexpr int kMaxSize = 16;

  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

  std::optional<int> index_of(std::string_view label) const;
  int require_index(std::string_view label) const;  // throws MalformedInput

  Subset all() const { return Subset::full(size()); }
  bool contains_mask(Subset s) const { return s.is_subset_of(all()); }

  Subset subset_of(std::span<const std::string> labels) const;

  // The elements of s, in ground order.
  GroundSet sub(Subset s) const;

  // "{a,f}" with elements in ground order.
  std::string format(Subset s) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace mg
