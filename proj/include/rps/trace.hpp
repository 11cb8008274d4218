#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rps/counting.hpp"
#include "rps/errors.hpp"
#include "rps/event_space.hpp"
#include "rps/mass_function.hpp"
#include "rps/measures.hpp"
#include "rps/negation.hpp"

namespace rps {

inline constexpr int default_trace_iterations = 9;
inline constexpr double default_convergence_eps = 1e-4;

/// Kernels up to this dimension are materialized once per trace; larger
/// spaces fall back to on-the-fly kernel evaluation.
inline constexpr std::size_t trace_kernel_materialize_limit = 2048;

/// Record of an iterated-negation experiment: the mass-function series, the
/// entropy at every step, the consecutive distances, and the first index
/// inside the eps-ball around the uniform fixed point.
struct negation_trace {
  std::vector<permutation_mass_function> pms;
  std::vector<double> entropies;
  std::vector<double> step_distances;
  std::optional<int> converged_at;
  double fixed_point = 0.0;
};

namespace detail {

/// Sup-norm deviation of a mass function from the uniform share u. Events
/// missing from the sparse map carry mass zero, hence deviation u.
inline double sup_deviation_from_uniform(const permutation_mass_function& pm, double u,
                                         count_t nonempty_count) {
  double dev = 0.0;
  for (const auto& [event, mass] : pm.masses()) {
    dev = std::max(dev, std::abs(mass - u));
  }
  if (pm.masses().size() < static_cast<std::size_t>(nonempty_count)) {
    dev = std::max(dev, u);
  }
  return dev;
}

}  // namespace detail

/// First index i with sup-norm(pm_i - fixed point) < eps, if any.
inline std::optional<int> detect_convergence(const negation_trace& trace, double eps) {
  if (eps <= 0.0) {
    throw domain_error("convergence tolerance must be positive");
  }
  if (trace.pms.empty()) return std::nullopt;
  const count_t nonempty =
      pes_cardinality(static_cast<count_t>(trace.pms.front().base_frame().size())) - 1;
  for (std::size_t i = 0; i < trace.pms.size(); ++i) {
    if (detail::sup_deviation_from_uniform(trace.pms[i], trace.fixed_point, nonempty) < eps) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

/// Runs k negation steps from pm0 and measures every step.
inline negation_trace build_trace(const permutation_mass_function& pm0, int k,
                                  double eps = default_convergence_eps,
                                  int max_frame_size = default_enumeration_cap) {
  if (k < 1) {
    throw domain_error("a trace needs at least one negation step");
  }
  const event_space space(pm0.base_frame(), max_frame_size);

  negation_trace trace;
  trace.fixed_point = fixed_point_mass(pm0.base_frame());
  trace.pms = iterate_negation(pm0, k, space);

  trace.entropies.reserve(trace.pms.size());
  for (const auto& pm : trace.pms) {
    trace.entropies.push_back(rps_entropy(pm));
  }

  trace.step_distances.reserve(static_cast<std::size_t>(k));
  if (space.size() - 1 <= trace_kernel_materialize_limit) {
    const rd_matrix rd(space);
    for (int i = 0; i < k; ++i) {
      trace.step_distances.push_back(
          rps_distance(trace.pms[i], trace.pms[i + 1], space, rd));
    }
  } else {
    for (int i = 0; i < k; ++i) {
      trace.step_distances.push_back(rps_distance(trace.pms[i], trace.pms[i + 1]));
    }
  }

  trace.converged_at = detect_convergence(trace, eps);
  return trace;
}

/// The geometric step-distance law: element i is d0 / (delta-2)^i,
/// for i = 0..k-1.
inline std::vector<double> theoretical_distance_series(double d0, count_t delta, int k) {
  if (delta < 4) {
    throw domain_error("distance law needs delta >= 4");
  }
  if (!(d0 >= 0.0)) {
    throw domain_error("initial distance must be nonnegative");
  }
  if (k < 0) {
    throw domain_error("series length must be nonnegative");
  }
  std::vector<double> series;
  series.reserve(static_cast<std::size_t>(k));
  double value = d0;
  const double divisor = static_cast<double>(delta - 2);
  for (int i = 0; i < k; ++i) {
    series.push_back(value);
    value /= divisor;
  }
  return series;
}

}  // namespace rps
