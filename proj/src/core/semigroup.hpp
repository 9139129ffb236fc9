#pragma once

#include <cstdint>
#include <vector>

#include "core/errors.hpp"

namespace nsgraph {

// Numerical semigroup <a_1,...,a_n>: all non-negative integer combinations of
// the generators, gcd = 1 so the complement in N is finite. Immutable after
// construction; the constructor minimalizes the generating set.
class NumericalSemigroup {
 public:
  // Throws: empty_generator_list, invalid_argument (value < 1),
  // non_coprime_generators.
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  // Minimal generating system, ascending. Unique: the members that are not
  // sums of two positive members.
  const std::vector<std::int64_t>& generators() const { return gens_; }
  // Input generators after sort/dedup, before minimalization.
  const std::vector<std::int64_t>& raw_generators() const { return raw_; }

  // Largest integer not in the semigroup; -1 for <1>.
  std::int64_t frobenius() const { return frobenius_; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  std::int64_t multiplicity() const { return gens_.front(); }

  bool contains(std::int64_t t) const {
    if (t < 0) return false;
    if (t > frobenius_) return true;
    return member_[static_cast<std::size_t>(t)];
  }

  // Least member in each residue class mod m, indexed by residue.
  // Throws not_a_member unless m is a positive member.
  std::vector<std::int64_t> apery_set(std::int64_t m) const;

 private:
  std::vector<std::int64_t> raw_, gens_, gaps_;
  std::int64_t frobenius_ = -1;
  std::vector<bool> member_;  // membership for [0, frobenius], empty for <1>
};

}  // namespace nsgraph
