#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rps/errors.hpp"
#include "rps/frame.hpp"
#include "rps/mass_function.hpp"

namespace rps {

/// A plain probability distribution over an ordered outcome roster.
class probability_distribution {
 public:
  probability_distribution(std::vector<std::string> labels, std::vector<double> probs,
                           bool renormalize = false)
      : labels_(std::move(labels)), probs_(std::move(probs)) {
    if (labels_.empty()) {
      throw validation_error("a probability distribution needs at least one outcome");
    }
    if (labels_.size() != probs_.size()) {
      throw validation_error("outcome and probability counts differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      const double p = probs_[i];
      if (!std::isfinite(p) || p < 0.0 || (!renormalize && p > 1.0)) {
        throw validation_error("probability " + std::to_string(p) + " for outcome '" +
                               labels_[i] + "' is outside [0,1]");
      }
      sum += p;
    }
    if (renormalize) {
      if (sum <= 0.0) {
        throw validation_error("cannot renormalize a zero-total distribution");
      }
      for (double& p : probs_) p /= sum;
    } else if (std::abs(sum - 1.0) > mass_sum_tolerance) {
      throw validation_error("probabilities sum to " + std::to_string(sum) +
                             ", expected 1");
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

/// Evidence-theory mass function: belief over unordered element subsets of a
/// frame. Subsets are kept in sorted index form; only positive masses are
/// stored; the empty set is always at zero.
class basic_probability_assignment {
 public:
  using subset = std::vector<int>;  // sorted ascending
  using mass_map = std::map<subset, double>;

  const frame& base_frame() const { return frame_; }

  double mass_of(subset query) const {
    std::sort(query.begin(), query.end());
    validate_subset(frame_, query);
    auto it = masses_.find(query);
    return it == masses_.end() ? 0.0 : it->second;
  }

  /// Positive-mass subsets in sorted order.
  std::vector<std::pair<subset, double>> focal_elements() const {
    return {masses_.begin(), masses_.end()};
  }

  std::size_t focal_count() const { return masses_.size(); }
  const mass_map& masses() const { return masses_; }

  friend basic_probability_assignment bpa_from_assignments(
      const frame&, const std::vector<std::pair<subset, double>>&, bool);

 private:
  static void validate_subset(const frame& f, const subset& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= f.size()) {
        throw validation_error("subset element index " + std::to_string(s[i]) +
                               " is outside the frame");
      }
      if (i > 0 && s[i] == s[i - 1]) {
        throw validation_error("repeated element in subset");
      }
    }
  }

  basic_probability_assignment(frame f, mass_map masses)
      : frame_(std::move(f)), masses_(std::move(masses)) {}

  frame frame_;
  mass_map masses_;
};

inline basic_probability_assignment bpa_from_assignments(
    const frame& f,
    const std::vector<std::pair<basic_probability_assignment::subset, double>>& pairs,
    bool renormalize = false) {
  basic_probability_assignment::mass_map masses;
  for (const auto& [given, mass] : pairs) {
    basic_probability_assignment::subset s = given;
    std::sort(s.begin(), s.end());
    basic_probability_assignment::validate_subset(f, s);
    if (!std::isfinite(mass) || mass < 0.0 || (!renormalize && mass > 1.0)) {
      throw validation_error("mass " + std::to_string(mass) + " is outside [0,1]");
    }
    if (s.empty() && mass != 0.0) {
      throw validation_error("the empty set must carry zero mass, got " +
                             std::to_string(mass));
    }
    if (mass == 0.0) continue;
    if (!masses.emplace(std::move(s), mass).second) {
      throw validation_error("duplicate subset in mass assignments");
    }
  }
  double sum = 0.0;
  for (const auto& [s, mass] : masses) sum += mass;
  if (renormalize) {
    if (sum <= 0.0) {
      throw validation_error("cannot renormalize assignments with zero total mass");
    }
    for (auto& [s, mass] : masses) mass /= sum;
  } else if (std::abs(sum - 1.0) > mass_sum_tolerance) {
    throw validation_error("masses sum to " + std::to_string(sum) + ", expected 1");
  }
  return basic_probability_assignment(f, std::move(masses));
}

inline basic_probability_assignment::subset subset_from_labels(
    const frame& f, const std::vector<std::string>& labels) {
  basic_probability_assignment::subset s;
  s.reserve(labels.size());
  for (const auto& label : labels) s.push_back(f.index_of(label));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace rps
