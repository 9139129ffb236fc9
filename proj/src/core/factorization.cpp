#include "core/factorization.hpp"

#include <sstream>

namespace nsgraph {

namespace {

void enumerate(const NumericalSemigroup& S, int i, std::int64_t rem,
               std::vector<std::int64_t>& coeff,
               std::vector<Factorization>& out) {
  const auto& gens = S.generators();
  if (i == 0) {
    if (rem % gens[0] == 0) {
      coeff[0] = rem / gens[0];
      out.push_back(Factorization{coeff});
      coeff[0] = 0;
    }
    return;
  }
  // rem must stay representable; any suffix of a factorization is a member
  for (std::int64_t u = 0, r = rem; r >= 0; ++u, r -= gens[static_cast<std::size_t>(i)]) {
    if (!S.contains(r)) continue;
    coeff[static_cast<std::size_t>(i)] = u;
    enumerate(S, i - 1, r, coeff, out);
  }
  coeff[static_cast<std::size_t>(i)] = 0;
}

}  // namespace

std::vector<Factorization> factorizations(const NumericalSemigroup& S,
                                          std::int64_t x) {
  if (x < 0)
    throw Error(errc::invalid_argument, "factorization target is negative");
  std::vector<Factorization> out;
  if (!S.contains(x)) return out;
  std::vector<std::int64_t> coeff(S.generators().size(), 0);
  enumerate(S, static_cast<int>(S.generators().size()) - 1, x, coeff, out);
  return out;
}

FactorizationProfile profile(const NumericalSemigroup& S, std::int64_t x) {
  if (!S.contains(x)) {
    std::ostringstream os;
    os << x << " is not a member of the semigroup";
    throw Error(errc::not_a_member, os.str());
  }
  FactorizationProfile p;
  p.x = x;
  p.list = factorizations(S, x);
  p.by_support.assign(S.generators().size() + 1, 0);
  for (const Factorization& f : p.list)
    ++p.by_support[static_cast<std::size_t>(f.support_size())];
  return p;
}

std::int64_t divisor_count_lower_bound(const Factorization& f) {
  std::int64_t prod = 1;
  bool any = false;
  for (std::int64_t u : f.coefficients) {
    if (u > 0) {
      prod *= u + 1;
      any = true;
    }
  }
  if (!any)
    throw Error(errc::zero_factorization,
                "factorization has empty support");
  return prod - 1;
}

}  // namespace nsgraph
