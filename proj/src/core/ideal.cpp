#include "core/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace nsgraph {

DivisorSet divisors(const NumericalSemigroup& S, std::int64_t x) {
  if (!S.contains(x)) {
    std::ostringstream os;
    os << x << " is not a member of the semigroup";
    throw Error(errc::not_a_member, os.str());
  }
  DivisorSet d;
  d.x = x;
  for (std::int64_t y = 0; y <= x; ++y)
    if (S.contains(y) && S.contains(x - y)) d.elements.push_back(y);
  return d;
}

bool irreducible_ideal_contains(const NumericalSemigroup& S, std::int64_t x,
                                std::int64_t t) {
  if (!S.contains(x)) {
    std::ostringstream os;
    os << x << " is not a member of the semigroup";
    throw Error(errc::not_a_member, os.str());
  }
  return S.contains(t) && !S.contains(x - t);
}

GeneratedIdeal::GeneratedIdeal(NumericalSemigroup S,
                               std::vector<std::int64_t> generators)
    : S_(std::move(S)) {
  if (generators.empty())
    throw Error(errc::empty_generator_list, "ideal generator list is empty");
  for (std::int64_t g : generators) {
    std::ostringstream os;
    if (g < 1) {
      os << "ideal generator " << g << " is not positive";
      throw Error(errc::invalid_argument, os.str());
    }
    if (!S_.contains(g)) {
      os << "ideal generator " << g << " is not a member of the semigroup";
      throw Error(errc::not_a_member, os.str());
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  raw_ = generators;

  // g is redundant when g - g' lands in S for some other generator g'
  for (std::size_t i = 0; i < raw_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (S_.contains(raw_[i] - raw_[j])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(raw_[i]);
  }

  // Everything above frobenius + min(generator) is generator + member, so
  // the complement lives below that.
  const std::int64_t bound = S_.frobenius() + gens_.front() + 1;
  for (std::int64_t t = 0; t < bound; ++t)
    if (S_.contains(t) && !contains(t)) complement_.push_back(t);
}

bool GeneratedIdeal::contains(std::int64_t t) const {
  for (std::int64_t g : gens_)
    if (S_.contains(t - g)) return true;
  return false;
}

std::optional<std::int64_t> GeneratedIdeal::irreducible_x() const {
  const std::int64_t x = complement_.back();
  const DivisorSet b = divisors(S_, x);
  if (b.elements == complement_) return x;
  return std::nullopt;
}

}  // namespace nsgraph
