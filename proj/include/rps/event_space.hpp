#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rps/counting.hpp"
#include "rps/errors.hpp"
#include "rps/event.hpp"
#include "rps/frame.hpp"

namespace rps {

/// Frames above this size are refused by default: the event space grows
/// superfactorially and the similarity kernel is quadratic in its size.
inline constexpr int default_enumeration_cap = 7;

/// Canonical enumeration of the permutation event space of a frame: every
/// ordered arrangement of every subset, exactly once. Ordinal 0 is the empty
/// event; the rest follow by cardinality, then lexicographically by element
/// index. Ordinals are dense in [0, delta).
class event_space {
 public:
  explicit event_space(frame f, int max_frame_size = default_enumeration_cap)
      : frame_(std::move(f)) {
    const int n = frame_.size();
    if (n > max_frame_size) {
      throw resource_error("enumeration of a " + std::to_string(n) +
                           "-element frame (delta = " + delta_string(n) +
                           ") exceeds the frame-size cap of " +
                           std::to_string(max_frame_size));
    }
    delta_ = pes_cardinality(static_cast<count_t>(n));
    events_.reserve(static_cast<std::size_t>(delta_));
    events_.emplace_back();  // the empty event
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int r = 1; r <= n; ++r) {
      emit_arrangements(r, prefix, used);
    }
  }

  const frame& base_frame() const { return frame_; }

  /// Total number of events, the empty one included.
  count_t delta() const { return delta_; }

  std::size_t size() const { return events_.size(); }

  const permutation_event& event_at(std::size_t ordinal) const {
    if (ordinal >= events_.size()) {
      throw domain_error("ordinal " + std::to_string(ordinal) +
                         " is outside the event space (delta = " +
                         std::to_string(delta_) + ")");
    }
    return events_[ordinal];
  }

  /// Canonical ordinal of an event, computed arithmetically: the offset of
  /// its cardinality block plus its lexicographic rank within the block.
  std::size_t ordinal_of(const permutation_event& event) const {
    if (!event.valid_over(frame_)) {
      throw domain_error("event uses elements outside the frame");
    }
    const count_t n = static_cast<count_t>(frame_.size());
    const count_t r = static_cast<count_t>(event.cardinality());
    count_t ordinal = 0;
    for (count_t shorter = 0; shorter < r; ++shorter) {
      ordinal += perm_count(n, shorter);
    }
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    const auto& seq = event.indices();
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
      count_t smaller_free = 0;
      for (int ix = 0; ix < seq[pos]; ++ix) {
        if (!used[static_cast<std::size_t>(ix)]) ++smaller_free;
      }
      ordinal += smaller_free * perm_count(n - 1 - pos, r - 1 - pos);
      used[static_cast<std::size_t>(seq[pos])] = true;
    }
    return static_cast<std::size_t>(ordinal);
  }

  std::span<const permutation_event> events() const { return events_; }

  /// The events of positive cardinality, ordinals 1..delta-1.
  std::span<const permutation_event> nonempty_events() const {
    return std::span<const permutation_event>(events_).subspan(1);
  }

 private:
  static std::string delta_string(int n) {
    try {
      return std::to_string(pes_cardinality(static_cast<count_t>(n)));
    } catch (const overflow_error&) {
      return "beyond 64-bit";
    }
  }

  void emit_arrangements(int remaining, std::vector<int>& prefix, std::vector<bool>& used) {
    if (remaining == 0) {
      events_.push_back(permutation_event(prefix));
      return;
    }
    for (int ix = 0; ix < frame_.size(); ++ix) {
      if (used[static_cast<std::size_t>(ix)]) continue;
      used[static_cast<std::size_t>(ix)] = true;
      prefix.push_back(ix);
      emit_arrangements(remaining - 1, prefix, used);
      prefix.pop_back();
      used[static_cast<std::size_t>(ix)] = false;
    }
  }

  frame frame_;
  count_t delta_ = 0;
  std::vector<permutation_event> events_;
};

inline event_space enumerate_pes(const frame& f, int max_frame_size = default_enumeration_cap) {
  return event_space(f, max_frame_size);
}

}  // namespace rps
