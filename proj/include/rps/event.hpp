#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rps/errors.hpp"
#include "rps/frame.hpp"

namespace rps {

/// An ordered sequence of distinct frame elements. Order is identity:
/// (g1,g2) and (g2,g1) are different events. The default-constructed event
/// is the empty arrangement.
///
/// The comparison operators implement the canonical event order used
/// everywhere in the library: shorter events first, ties broken
/// lexicographically by element index.
class permutation_event {
 public:
  permutation_event() = default;

  explicit permutation_event(std::vector<int> indices) : seq_(std::move(indices)) {
    for (int ix : seq_) {
      if (ix < 0) {
        throw validation_error("negative element index in event " + index_string());
      }
    }
    std::vector<int> sorted = seq_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw validation_error("repeated element in event " + index_string());
    }
  }

  static permutation_event from_labels(const frame& f, const std::vector<std::string>& labels) {
    std::vector<int> indices;
    indices.reserve(labels.size());
    for (const auto& label : labels) indices.push_back(f.index_of(label));
    return permutation_event(std::move(indices));
  }

  int cardinality() const { return static_cast<int>(seq_.size()); }
  bool empty() const { return seq_.empty(); }
  const std::vector<int>& indices() const { return seq_; }

  bool contains(int element) const {
    return std::find(seq_.begin(), seq_.end(), element) != seq_.end();
  }

  /// True when every element index refers into the given frame.
  bool valid_over(const frame& f) const {
    return std::all_of(seq_.begin(), seq_.end(),
                       [&](int ix) { return ix < f.size(); });
  }

  std::string to_string(const frame& f) const {
    std::string out = "(";
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (i > 0) out += ",";
      out += seq_[i] < f.size() ? f.label(seq_[i]) : "#" + std::to_string(seq_[i]);
    }
    return out + ")";
  }

  friend std::strong_ordering operator<=>(const permutation_event& a,
                                          const permutation_event& b) {
    if (a.seq_.size() != b.seq_.size()) return a.seq_.size() <=> b.seq_.size();
    return std::lexicographical_compare_three_way(a.seq_.begin(), a.seq_.end(),
                                                  b.seq_.begin(), b.seq_.end());
  }
  friend bool operator==(const permutation_event&, const permutation_event&) = default;

 private:
  std::string index_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(seq_[i]);
    }
    return out + "]";
  }

  std::vector<int> seq_;
};

/// 1-based position of an element within the event's sequence.
inline int rank_in_event(const permutation_event& event, int element) {
  const auto& seq = event.indices();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == element) return static_cast<int>(i) + 1;
  }
  throw domain_error("element " + std::to_string(element) +
                     " does not occur in the event");
}

/// Set overlap of the two events' elements, order ignored:
/// |set(a) n set(b)| / |set(a) u set(b)|.
inline double jaccard(const permutation_event& a, const permutation_event& b) {
  if (a.empty() && b.empty()) {
    throw domain_error("jaccard is undefined for two empty events");
  }
  int shared = 0;
  for (int ix : a.indices()) {
    if (b.contains(ix)) ++shared;
  }
  const int united = a.cardinality() + b.cardinality() - shared;
  return static_cast<double>(shared) / static_cast<double>(united);
}

}  // namespace rps
