#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rps/errors.hpp"

namespace rps {

/// Ordered roster of distinct element labels. The position of a label is its
/// canonical element index; events refer to elements by that index, so the
/// order fixed here determines every enumeration and every output column.
class frame {
 public:
  explicit frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
      throw validation_error("a frame needs at least one element");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels_) {
      if (!seen.insert(label).second) {
        throw validation_error("duplicate frame label '" + label + "'");
      }
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }

  const std::string& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }

  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
      if (labels_[static_cast<std::size_t>(i)] == label) return i;
    }
    throw domain_error("label '" + std::string(label) + "' is not in the frame");
  }

  bool operator==(const frame&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace rps
