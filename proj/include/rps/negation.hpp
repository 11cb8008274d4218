#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rps/counting.hpp"
#include "rps/distributions.hpp"
#include "rps/errors.hpp"
#include "rps/event_space.hpp"
#include "rps/frame.hpp"
#include "rps/mass_function.hpp"

namespace rps {

/// Normalizer of the negation map over a frame's event space: delta is the
/// cardinality of the space, the divisor delta-2 is the number of nonempty
/// events minus one. Needs delta >= 4, i.e. at least two frame elements.
struct negation_parameters {
  count_t delta = 0;
  count_t normalizer = 0;

  static negation_parameters for_frame(const frame& f) {
    if (f.size() < 2) {
      throw domain_error("negation undefined on singleton frame");
    }
    const count_t delta = pes_cardinality(static_cast<count_t>(f.size()));
    return negation_parameters{delta, delta - 2};
  }
};

/// Limit of iterated negation: the uniform share 1/(delta-1).
inline double fixed_point_mass(const frame& f) {
  const auto params = negation_parameters::for_frame(f);
  return 1.0 / static_cast<double>(params.delta - 1);
}

/// One negation step. Every nonempty event of the space receives
/// (1 - mass(A)) / (delta - 2), whether or not it was focal; the result is
/// again a valid mass function.
inline permutation_mass_function negate_pm(const permutation_mass_function& pm,
                                           const event_space& space) {
  if (space.base_frame() != pm.base_frame()) {
    throw domain_error("event space was built from a different frame");
  }
  const auto params = negation_parameters::for_frame(pm.base_frame());
  const double divisor = static_cast<double>(params.normalizer);
  std::vector<double> dense = as_dense_vector(pm, space);
  for (double& mass : dense) {
    mass = (1.0 - mass) / divisor;
  }
  return pm_from_dense_vector(space, dense);
}

inline permutation_mass_function negate_pm(const permutation_mass_function& pm) {
  return negate_pm(pm, event_space(pm.base_frame()));
}

/// The series pm0, pm1, ..., pmk with pm_{i+1} = negate_pm(pm_i).
inline std::vector<permutation_mass_function> iterate_negation(
    const permutation_mass_function& pm0, int k, const event_space& space) {
  if (k < 0) {
    throw domain_error("negation count must be nonnegative");
  }
  std::vector<permutation_mass_function> series;
  series.reserve(static_cast<std::size_t>(k) + 1);
  series.push_back(pm0);
  for (int i = 0; i < k; ++i) {
    series.push_back(negate_pm(series.back(), space));
  }
  return series;
}

inline std::vector<permutation_mass_function> iterate_negation(
    const permutation_mass_function& pm0, int k) {
  return iterate_negation(pm0, k, event_space(pm0.base_frame()));
}

/// The i-th negation in one shot, from the geometric general term:
///   pm_i(A) = (pm0(A) - u) (-1/(delta-2))^i + u,   u = 1/(delta-1).
/// Agrees with i explicit steps to within accumulated rounding.
inline permutation_mass_function closed_form_iterate(const permutation_mass_function& pm0,
                                                     int i, const event_space& space) {
  if (i < 0) {
    throw domain_error("negation count must be nonnegative");
  }
  if (i == 0) return pm0;
  if (space.base_frame() != pm0.base_frame()) {
    throw domain_error("event space was built from a different frame");
  }
  const auto params = negation_parameters::for_frame(pm0.base_frame());
  const double u = 1.0 / static_cast<double>(params.delta - 1);
  const double ratio = -1.0 / static_cast<double>(params.normalizer);
  const double factor = std::pow(ratio, i);
  std::vector<double> dense = as_dense_vector(pm0, space);
  for (double& mass : dense) {
    mass = (mass - u) * factor + u;
  }
  return pm_from_dense_vector(space, dense);
}

inline permutation_mass_function closed_form_iterate(const permutation_mass_function& pm0,
                                                     int i) {
  return closed_form_iterate(pm0, i, event_space(pm0.base_frame()));
}

/// Probability negation: each outcome receives (1 - p_i)/(n - 1). The
/// uniform distribution is its fixed point.
inline probability_distribution yager_negate(const probability_distribution& p) {
  const std::size_t n = p.size();
  if (n < 2) {
    throw domain_error("probability negation undefined on a single outcome");
  }
  std::vector<double> negated(n);
  for (std::size_t i = 0; i < n; ++i) {
    negated[i] = (1.0 - p.probs()[i]) / static_cast<double>(n - 1);
  }
  return probability_distribution(p.labels(), std::move(negated));
}

/// Evidence-theory negation over the focal elements only: each focal subset
/// receives (1 - m(A))/(n - 1) with n the focal count; non-focal subsets
/// stay at zero.
inline basic_probability_assignment yin_negate(const basic_probability_assignment& m) {
  const auto focal = m.focal_elements();
  if (focal.size() < 2) {
    throw domain_error("mass-function negation needs at least two focal elements");
  }
  const double divisor = static_cast<double>(focal.size() - 1);
  std::vector<std::pair<basic_probability_assignment::subset, double>> negated;
  negated.reserve(focal.size());
  for (const auto& [s, mass] : focal) {
    negated.emplace_back(s, (1.0 - mass) / divisor);
  }
  return bpa_from_assignments(m.base_frame(), negated);
}

}  // namespace rps
