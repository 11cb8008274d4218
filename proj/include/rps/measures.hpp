#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rps/counting.hpp"
#include "rps/errors.hpp"
#include "rps/event.hpp"
#include "rps/event_space.hpp"
#include "rps/frame.hpp"
#include "rps/mass_function.hpp"

namespace rps {

/// Squared distances more negative than this are an error; anything in
/// [-radicand_tolerance, 0) is rounding noise and clamps to zero.
inline constexpr double radicand_tolerance = 1e-12;

/// Order-agreement kernel between two events:
///   exp(-(sum over shared elements of |rank difference|) / |union|).
/// 1 when the shared elements appear in identical positions (or when nothing
/// is shared: the empty sum); decays as the orders disagree.
inline double ordered_degree(const permutation_event& a, const permutation_event& b) {
  if (a.empty() && b.empty()) {
    throw domain_error("ordered degree is undefined for two empty events");
  }
  int shared = 0;
  int rank_gap = 0;
  const auto& seq = a.indices();
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    if (!b.contains(seq[pos])) continue;
    ++shared;
    rank_gap += std::abs(static_cast<int>(pos) + 1 - rank_in_event(b, seq[pos]));
  }
  const int united = a.cardinality() + b.cardinality() - shared;
  return std::exp(-static_cast<double>(rank_gap) / static_cast<double>(united));
}

/// Similarity of two events: set overlap weighted by order agreement.
inline double event_similarity(const permutation_event& a, const permutation_event& b) {
  return jaccard(a, b) * ordered_degree(a, b);
}

/// The dense similarity kernel over the nonempty events of a space, in
/// canonical order. Symmetric, unit diagonal, entries in [0,1].
class rd_matrix {
 public:
  explicit rd_matrix(const event_space& space)
      : dim_(space.size() - 1), entries_(dim_ * dim_, 0.0) {
    const auto events = space.nonempty_events();
    for (std::size_t r = 0; r < dim_; ++r) {
      entries_[r * dim_ + r] = 1.0;
      for (std::size_t s = r + 1; s < dim_; ++s) {
        const double k = event_similarity(events[r], events[s]);
        entries_[r * dim_ + s] = k;
        entries_[s * dim_ + r] = k;
      }
    }
  }

  std::size_t dim() const { return dim_; }

  /// Entry over the nonempty ordinals: row r and column s are 0-based,
  /// counting from the first nonempty event.
  double entry(std::size_t r, std::size_t s) const {
    if (r >= dim_ || s >= dim_) {
      throw domain_error("kernel index out of range");
    }
    return entries_[r * dim_ + s];
  }

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

namespace detail {

inline double finish_distance(double quadratic_form) {
  double radicand = 0.5 * quadratic_form;
  if (radicand < 0.0) {
    if (radicand < -radicand_tolerance) {
      throw numerical_error("squared distance " + std::to_string(radicand) +
                            " is negative beyond tolerance");
    }
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

}  // namespace detail

/// Distance between two mass functions over the same frame:
///   sqrt(1/2 (m1 - m2) RD (m1 - m2)^T)
/// with the difference taken as a dense vector over the nonempty events.
/// Materialized-kernel route.
inline double rps_distance(const permutation_mass_function& a,
                           const permutation_mass_function& b,
                           const event_space& space, const rd_matrix& rd) {
  if (a.base_frame() != b.base_frame()) {
    throw domain_error("mass functions live on different frames");
  }
  if (rd.dim() != space.size() - 1) {
    throw domain_error("kernel was built from a different event space");
  }
  const std::vector<double> va = as_dense_vector(a, space);
  const std::vector<double> vb = as_dense_vector(b, space);
  double q = 0.0;
  for (std::size_t r = 0; r < va.size(); ++r) {
    const double dr = va[r] - vb[r];
    if (dr == 0.0) continue;
    for (std::size_t s = 0; s < va.size(); ++s) {
      const double ds = va[s] - vb[s];
      if (ds == 0.0) continue;
      q += dr * ds * rd.entry(r, s);
    }
  }
  return detail::finish_distance(q);
}

/// Same distance, kernel evaluated on the fly over the sparse support of the
/// difference vector. No enumeration and no cap; agrees with the
/// materialized route to rounding.
inline double rps_distance(const permutation_mass_function& a,
                           const permutation_mass_function& b) {
  if (a.base_frame() != b.base_frame()) {
    throw domain_error("mass functions live on different frames");
  }
  std::map<permutation_event, double> diff;
  for (const auto& [event, mass] : a.masses()) diff[event] += mass;
  for (const auto& [event, mass] : b.masses()) diff[event] -= mass;
  std::vector<std::pair<permutation_event, double>> support;
  support.reserve(diff.size());
  for (const auto& [event, d] : diff) {
    if (d != 0.0) support.emplace_back(event, d);
  }
  double q = 0.0;
  for (std::size_t r = 0; r < support.size(); ++r) {
    q += support[r].second * support[r].second;  // unit diagonal
    for (std::size_t s = r + 1; s < support.size(); ++s) {
      q += 2.0 * support[r].second * support[s].second *
           event_similarity(support[r].first, support[s].first);
    }
  }
  return detail::finish_distance(q);
}

/// Entropy of a mass function in bits:
///   -sum over focal A of m(A) log2(m(A) / (arrangement_count(|A|) - 1)).
/// Zero-mass events contribute nothing (they are never stored).
inline double rps_entropy(const permutation_mass_function& pm) {
  double h = 0.0;
  for (const auto& [event, mass] : pm.masses()) {
    const double divisor =
        static_cast<double>(arrangement_count(static_cast<count_t>(event.cardinality())) - 1);
    h -= mass * std::log2(mass / divisor);
  }
  return h;
}

/// Entropy of the uniform mass function, in closed form:
///   sum_r P(n,r) (1/(delta-1)) log2((delta-1)(arrangement_count(r)-1)).
/// This is the limit of the entropy series under iterated negation.
inline double uniform_entropy(const frame& f) {
  if (f.size() < 2) {
    throw domain_error("uniform entropy undefined on singleton frame");
  }
  const count_t n = static_cast<count_t>(f.size());
  const double nonempty = static_cast<double>(pes_cardinality(n) - 1);
  double h = 0.0;
  for (count_t r = 1; r <= n; ++r) {
    const double divisor = static_cast<double>(arrangement_count(r) - 1);
    h += static_cast<double>(perm_count(n, r)) / nonempty * std::log2(nonempty * divisor);
  }
  return h;
}

}  // namespace rps
