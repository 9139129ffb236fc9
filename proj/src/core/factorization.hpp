#pragma once

#include <cstdint>
#include <vector>

#include "core/semigroup.hpp"

namespace nsgraph {

// One way of writing a value as a non-negative combination of the minimal
// generators; coefficients align with NumericalSemigroup::generators().
struct Factorization {
  std::vector<std::int64_t> coefficients;

  int support_size() const {
    int p = 0;
    for (std::int64_t u : coefficients)
      if (u > 0) ++p;
    return p;
  }
};

// All factorizations of x, deterministic order: coefficients of the largest
// generator vary slowest, ascending. Empty when x is not a member; the zero
// vector alone when x = 0. Throws invalid_argument for x < 0.
std::vector<Factorization> factorizations(const NumericalSemigroup& S,
                                          std::int64_t x);

struct FactorizationProfile {
  std::int64_t x = 0;
  std::vector<Factorization> list;
  std::vector<std::size_t> by_support;  // index p = count with support size p

  std::size_t count(int p) const {
    if (p < 0 || static_cast<std::size_t>(p) >= by_support.size()) return 0;
    return by_support[static_cast<std::size_t>(p)];
  }
  // Any factorization with support size >= p?
  bool any_at_least(int p) const {
    for (std::size_t q = static_cast<std::size_t>(p); q < by_support.size(); ++q)
      if (by_support[q] > 0) return true;
    return false;
  }
};

// Throws not_a_member when x is not in the semigroup.
FactorizationProfile profile(const NumericalSemigroup& S, std::int64_t x);

// Lower bound on the divisor count |B(x)| read off one factorization: the
// product of (coefficient + 1) over the support, minus one. Counts the
// non-zero points of the coefficient grid without deduplicating values, so
// it can overshoot the true bound when partial sums coincide.
// Throws zero_factorization on empty support.
std::int64_t divisor_count_lower_bound(const Factorization& f);

}  // namespace nsgraph
