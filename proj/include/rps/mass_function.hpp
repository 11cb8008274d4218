#pragma once

#include <cmath>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rps/counting.hpp"
#include "rps/errors.hpp"
#include "rps/event.hpp"
#include "rps/event_space.hpp"
#include "rps/frame.hpp"

namespace rps {

/// Tolerance on the sum-to-one check of every belief container. Inputs are
/// never rescaled silently; renormalization happens only on request.
inline constexpr double mass_sum_tolerance = 1e-9;

/// Sparse belief assignment over the permutation event space of a frame.
/// Only strictly positive masses are stored; the empty event is always at
/// zero; the stored masses sum to 1 within mass_sum_tolerance. Immutable
/// after construction.
class permutation_mass_function {
 public:
  using mass_map = std::map<permutation_event, double>;

  const frame& base_frame() const { return frame_; }

  /// Stored mass, or 0 for any event the assignment does not mention.
  double mass_of(const permutation_event& event) const {
    if (!event.valid_over(frame_)) {
      throw domain_error("event uses elements outside the mass function's frame");
    }
    auto it = masses_.find(event);
    return it == masses_.end() ? 0.0 : it->second;
  }

  /// The positive-mass events, in canonical order.
  std::vector<std::pair<permutation_event, double>> focal_elements() const {
    return {masses_.begin(), masses_.end()};
  }

  std::size_t focal_count() const { return masses_.size(); }

  const mass_map& masses() const { return masses_; }

  friend permutation_mass_function pm_from_assignments(
      const frame&, const std::vector<std::pair<permutation_event, double>>&, bool);

 private:
  permutation_mass_function(frame f, mass_map masses)
      : frame_(std::move(f)), masses_(std::move(masses)) {}

  frame frame_;
  mass_map masses_;
};

/// Builds a validated mass function from explicit (event, mass) pairs.
/// Zero-mass pairs are dropped; everything else must pass the invariants.
/// With renormalize set, nonnegative masses of any positive total are
/// accepted and rescaled to sum 1.
inline permutation_mass_function pm_from_assignments(
    const frame& f, const std::vector<std::pair<permutation_event, double>>& pairs,
    bool renormalize = false) {
  permutation_mass_function::mass_map masses;
  for (const auto& [event, mass] : pairs) {
    if (!event.valid_over(f)) {
      throw validation_error("event " + event.to_string(f) +
                             " uses elements outside the frame");
    }
    if (!std::isfinite(mass) || mass < 0.0) {
      throw validation_error("mass " + std::to_string(mass) + " for event " +
                             event.to_string(f) + " is not a finite value in [0,1]");
    }
    if (!renormalize && mass > 1.0) {
      throw validation_error("mass " + std::to_string(mass) + " for event " +
                             event.to_string(f) + " is outside [0,1]");
    }
    if (event.empty() && mass != 0.0) {
      throw validation_error("the empty event must carry zero mass, got " +
                             std::to_string(mass));
    }
    if (mass == 0.0) continue;
    if (!masses.emplace(event, mass).second) {
      throw validation_error("duplicate event " + event.to_string(f) +
                             " in mass assignments");
    }
  }
  double sum = 0.0;
  for (const auto& [event, mass] : masses) sum += mass;
  if (renormalize) {
    if (sum <= 0.0) {
      throw validation_error("cannot renormalize assignments with zero total mass");
    }
    for (auto& [event, mass] : masses) mass /= sum;
  } else if (std::abs(sum - 1.0) > mass_sum_tolerance) {
    throw validation_error("masses sum to " + std::to_string(sum) +
                           ", expected 1 within " + std::to_string(mass_sum_tolerance));
  }
  return permutation_mass_function(f, std::move(masses));
}

/// Free-function form of the mass lookup.
inline double mass_of(const permutation_mass_function& pm, const permutation_event& event) {
  return pm.mass_of(event);
}

/// The mass function as a dense vector over the nonempty events in canonical
/// order: coordinate k holds the mass of the event at ordinal k+1. The empty
/// event is dropped (its mass is identically zero).
inline std::vector<double> as_dense_vector(const permutation_mass_function& pm,
                                           const event_space& space) {
  if (space.base_frame() != pm.base_frame()) {
    throw domain_error("event space was built from a different frame");
  }
  std::vector<double> dense(space.size() - 1, 0.0);
  for (const auto& [event, mass] : pm.masses()) {
    dense[space.ordinal_of(event) - 1] = mass;
  }
  return dense;
}

/// Inverse of as_dense_vector. Coordinates in [-1e-15, 0) are treated as
/// rounding noise and clamped to zero before validation.
inline permutation_mass_function pm_from_dense_vector(const event_space& space,
                                                      std::span<const double> dense) {
  if (dense.size() != space.size() - 1) {
    throw validation_error("dense vector has " + std::to_string(dense.size()) +
                           " coordinates, event space needs " +
                           std::to_string(space.size() - 1));
  }
  std::vector<std::pair<permutation_event, double>> pairs;
  pairs.reserve(dense.size());
  for (std::size_t k = 0; k < dense.size(); ++k) {
    double mass = dense[k];
    if (mass < 0.0 && mass >= -1e-15) mass = 0.0;
    pairs.emplace_back(space.event_at(k + 1), mass);
  }
  return pm_from_assignments(space.base_frame(), pairs);
}

/// The mass function that spreads belief evenly: every nonempty event at
/// 1/(delta-1). Fixed point of the negation map for n >= 2; on a singleton
/// frame it degenerates to full mass on the single arrangement.
inline permutation_mass_function uniform_pm(const event_space& space) {
  const double share = 1.0 / static_cast<double>(space.delta() - 1);
  std::vector<std::pair<permutation_event, double>> pairs;
  pairs.reserve(space.size() - 1);
  for (const auto& event : space.nonempty_events()) {
    pairs.emplace_back(event, share);
  }
  return pm_from_assignments(space.base_frame(), pairs);
}

inline permutation_mass_function uniform_pm(const frame& f) {
  return uniform_pm(event_space(f));
}

}  // namespace rps
