#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/semigroup.hpp"

namespace nsgraph {

// B(x): the members y with x - y also a member. Contains 0 and x, closed
// under y -> x - y.
struct DivisorSet {
  std::int64_t x = 0;
  std::vector<std::int64_t> elements;  // ascending, 0 and x included

  std::vector<std::int64_t> nonzero() const {
    return {elements.begin() + 1, elements.end()};
  }
};

// Throws not_a_member when x is not in the semigroup.
DivisorSet divisors(const NumericalSemigroup& S, std::int64_t x);

// Membership in the irreducible ideal S \ B(x): t in the ideal iff t is a
// member and x - t is not. Throws not_a_member when x is not a member.
bool irreducible_ideal_contains(const NumericalSemigroup& S, std::int64_t x,
                                std::int64_t t);

// Ideal I = union of g + S over the given generators g (all positive
// members). Proper subset of S with finite complement.
class GeneratedIdeal {
 public:
  // Throws not_a_member for a non-member generator, invalid_argument for a
  // non-positive one, empty_generator_list for none.
  GeneratedIdeal(NumericalSemigroup S, std::vector<std::int64_t> generators);

  const NumericalSemigroup& semigroup() const { return S_; }
  const std::vector<std::int64_t>& raw_generators() const { return raw_; }
  // Reduced system: no generator lies in another generator plus S.
  const std::vector<std::int64_t>& generators() const { return gens_; }
  // S \ I, ascending; always contains 0, always finite.
  const std::vector<std::int64_t>& complement() const { return complement_; }

  bool contains(std::int64_t t) const;

  // x such that the complement equals B(x), when one exists. Only the
  // largest complement element can qualify.
  std::optional<std::int64_t> irreducible_x() const;

 private:
  NumericalSemigroup S_;
  std::vector<std::int64_t> raw_, gens_, complement_;
};

}  // namespace nsgraph
