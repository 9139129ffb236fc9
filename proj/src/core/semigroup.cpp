#include "core/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nsgraph {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::empty_generator_list: return "empty_generator_list";
    case errc::non_coprime_generators: return "non_coprime_generators";
    case errc::not_a_member: return "not_a_member";
    case errc::zero_factorization: return "zero_factorization";
    case errc::order_too_large: return "order_too_large";
    case errc::order_mismatch: return "order_mismatch";
    case errc::missing_type: return "missing_type";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

namespace {

// Membership table for [0, limit] under an arbitrary positive generator list
// (gcd may exceed 1; then the table describes the generated submonoid).
std::vector<bool> membership(const std::vector<std::int64_t>& gens,
                             std::int64_t limit) {
  std::vector<bool> tab(static_cast<std::size_t>(limit) + 1, false);
  tab[0] = true;
  for (std::int64_t t = 1; t <= limit; ++t) {
    for (std::int64_t a : gens) {
      if (t >= a && tab[static_cast<std::size_t>(t - a)]) {
        tab[static_cast<std::size_t>(t)] = true;
        break;
      }
    }
  }
  return tab;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
  if (generators.empty())
    throw Error(errc::empty_generator_list, "generator list is empty");
  for (std::int64_t g : generators) {
    if (g < 1) {
      std::ostringstream os;
      os << "generator " << g << " is not a positive integer";
      throw Error(errc::invalid_argument, os.str());
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::int64_t g = 0;
  for (std::int64_t a : generators) g = std::gcd(g, a);
  if (g != 1) {
    std::ostringstream os;
    os << "generators have gcd " << g;
    throw Error(errc::non_coprime_generators, os.str());
  }
  raw_ = generators;

  // Grow the membership table until a run of min-generator consecutive
  // members appears; past that point every integer is a member.
  const std::int64_t a1 = raw_.front();
  std::int64_t limit = raw_.back() + 1;
  std::vector<bool> tab;
  for (;;) {
    tab = membership(raw_, limit);
    std::int64_t run = 0;
    bool found = false;
    frobenius_ = -1;
    for (std::int64_t t = 0; t <= limit; ++t) {
      if (tab[static_cast<std::size_t>(t)]) {
        if (++run >= a1) {
          found = true;
          break;
        }
      } else {
        run = 0;
        frobenius_ = t;
      }
    }
    if (found) break;
    limit *= 2;
  }
  member_.assign(tab.begin(),
                 tab.begin() + static_cast<std::size_t>(frobenius_) + 1);
  for (std::int64_t t = 1; t <= frobenius_; ++t)
    if (!member_[static_cast<std::size_t>(t)]) gaps_.push_back(t);

  // A raw generator is redundant exactly when it splits as a sum of two
  // positive members; minimal generators all occur among the raw ones.
  for (std::int64_t a : raw_) {
    bool redundant = false;
    for (std::int64_t s = a1; s <= a / 2; ++s) {
      if (contains(s) && contains(a - s)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(a);
  }
}

std::vector<std::int64_t> NumericalSemigroup::apery_set(std::int64_t m) const {
  if (m < 1 || !contains(m)) {
    std::ostringstream os;
    os << m << " is not a positive member of the semigroup";
    throw Error(errc::not_a_member, os.str());
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(m));
  for (std::int64_t r = 0; r < m; ++r) {
    std::int64_t t = r;
    while (!contains(t)) t += m;
    out[static_cast<std::size_t>(r)] = t;
  }
  return out;
}

}  // namespace nsgraph
