#pragma once

#include <cstdint>
#include <string>

#include "rps/errors.hpp"

namespace rps {

using count_t = std::uint64_t;

/// Number of r-permutations of n distinct elements, n!/(n-r)!, as an exact
/// integer. Counts feed denominators downstream, so this never goes through
/// floating point and never wraps silently.
inline count_t perm_count(count_t n, count_t r) {
  if (r > n) {
    throw domain_error("perm_count: r = " + std::to_string(r) +
                       " exceeds n = " + std::to_string(n));
  }
  count_t result = 1;
  for (count_t factor = n; factor > n - r; --factor) {
    if (__builtin_mul_overflow(result, factor, &result)) {
      throw overflow_error("perm_count(" + std::to_string(n) + ", " +
                           std::to_string(r) + ") exceeds the 64-bit range");
    }
  }
  return result;
}

/// Number of ordered arrangements of any subset of i elements, the empty
/// arrangement included: sum_{k=0..i} i!/(i-k)!.
inline count_t arrangement_count(count_t i) {
  count_t total = 0;
  for (count_t k = 0; k <= i; ++k) {
    if (__builtin_add_overflow(total, perm_count(i, k), &total)) {
      throw overflow_error("arrangement_count(" + std::to_string(i) +
                           ") exceeds the 64-bit range");
    }
  }
  return total;
}

/// Cardinality of the permutation event space of an n-element frame.
inline count_t pes_cardinality(count_t n) {
  if (n < 1) {
    throw domain_error("pes_cardinality requires a frame of at least one element");
  }
  return arrangement_count(n);
}

}  // namespace rps
