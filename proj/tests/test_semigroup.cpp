#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/errors.hpp"
#include "core/factorization.hpp"
#include "core/semigroup.hpp"
#include "doctest.h"
#include "oracles.hpp"

using nsgraph::Error;
using nsgraph::errc;
using nsgraph::NumericalSemigroup;

namespace {

using i64 = std::int64_t;
using vec = std::vector<i64>;

std::optional<errc> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return std::nullopt;
}

std::vector<vec> coefficient_set(const NumericalSemigroup& S, i64 x) {
  std::vector<vec> out;
  for (const auto& f : nsgraph::factorizations(S, x)) {
    out.push_back(f.coefficients);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("construction minimalizes the generating set") {
  CHECK(NumericalSemigroup({2, 3}).generators() == vec{2, 3});
  CHECK(NumericalSemigroup({3, 4, 7}).generators() == vec{3, 4});
  CHECK(NumericalSemigroup({3, 7, 4}).generators() == vec{3, 4});
  CHECK(NumericalSemigroup({6, 9, 20}).generators() == vec{6, 9, 20});
  CHECK(NumericalSemigroup({1, 5}).generators() == vec{1});
  CHECK(NumericalSemigroup({5, 5, 3}).raw_generators() == vec{3, 5});
}

TEST_CASE("construction rejects bad input") {
  CHECK(code_of([] { NumericalSemigroup({}); }) ==
        errc::empty_generator_list);
  CHECK(code_of([] { NumericalSemigroup({4, 6}); }) ==
        errc::non_coprime_generators);
  CHECK(code_of([] { NumericalSemigroup({6, 10, 15, 21}); }) ==
        std::nullopt);  // gcd of the whole set is 1
  CHECK(code_of([] { NumericalSemigroup({0, 3}); }) == errc::invalid_argument);
  CHECK(code_of([] { NumericalSemigroup({-2, 3}); }) ==
        errc::invalid_argument);
}

TEST_CASE("membership pins") {
  const NumericalSemigroup S34({3, 4});
  CHECK_FALSE(S34.contains(5));
  CHECK(S34.contains(10));
  CHECK_FALSE(S34.contains(-3));
  const NumericalSemigroup S23({2, 3});
  CHECK(S23.contains(0));
  CHECK_FALSE(S23.contains(1));
  CHECK(S23.contains(2));
}

TEST_CASE("frobenius and gaps pins") {
  CHECK(NumericalSemigroup({2, 3}).frobenius() == 1);
  CHECK(NumericalSemigroup({2, 3}).gaps() == vec{1});
  CHECK(NumericalSemigroup({3, 4}).frobenius() == 5);
  CHECK(NumericalSemigroup({3, 4}).gaps() == vec{1, 2, 5});
  CHECK(NumericalSemigroup({2, 15}).frobenius() == 13);
  CHECK(NumericalSemigroup({2, 15}).gaps() == vec{1, 3, 5, 7, 9, 11, 13});
  CHECK(NumericalSemigroup({1}).frobenius() == -1);
  CHECK(NumericalSemigroup({1}).gaps().empty());
  CHECK(NumericalSemigroup({2, 15}).multiplicity() == 2);
}

TEST_CASE("frobenius and gaps agree with the naive oracle") {
  const std::vector<vec> pool = {{2, 3},  {3, 4},        {2, 15},
                                 {3, 5, 7}, {5, 6, 9, 13}, {4, 6, 9},
                                 {6, 10, 15}, {7, 8, 9, 11, 12, 13}};
  for (const auto& gens : pool) {
    CAPTURE(gens);
    const NumericalSemigroup S(gens);
    CHECK(S.frobenius() == oracles::frobenius(gens));
    CHECK(S.gaps() == oracles::gaps(gens));
    for (i64 t = 0; t <= S.frobenius() + 2 * S.multiplicity(); ++t) {
      CAPTURE(t);
      CHECK(S.contains(t) == oracles::contains(gens, t));
    }
  }
}

TEST_CASE("membership is closed under addition") {
  const NumericalSemigroup S({5, 6, 9, 13});
  std::vector<i64> members;
  for (i64 t = 0; t <= 40; ++t) {
    if (S.contains(t)) members.push_back(t);
  }
  for (i64 s : members) {
    for (i64 t : members) {
      CHECK(S.contains(s + t));
    }
  }
}

TEST_CASE("apery set pins") {
  CHECK(NumericalSemigroup({3, 4}).apery_set(3) == vec{0, 4, 8});
  CHECK(NumericalSemigroup({2, 3}).apery_set(2) == vec{0, 3});
}

TEST_CASE("apery sets cover every residue minimally") {
  const NumericalSemigroup S({5, 6, 9, 13});
  for (i64 m : {5, 6, 9, 13, 15, 18}) {
    REQUIRE(S.contains(m));
    const auto ap = S.apery_set(m);
    REQUIRE(ap.size() == static_cast<std::size_t>(m));
    for (i64 r = 0; r < m; ++r) {
      const i64 w = ap[static_cast<std::size_t>(r)];
      CHECK(w % m == r);
      CHECK(S.contains(w));
      CHECK_FALSE(S.contains(w - m));
    }
  }
}

TEST_CASE("apery set rejects non-members and zero") {
  const NumericalSemigroup S({3, 4});
  CHECK(code_of([&] { S.apery_set(5); }) == errc::not_a_member);
  CHECK(code_of([&] { S.apery_set(0); }) == errc::not_a_member);
}

TEST_CASE("factorization emission order and pins") {
  const NumericalSemigroup S23({2, 3});
  const auto f8 = nsgraph::factorizations(S23, 8);
  REQUIRE(f8.size() == 2);
  CHECK(f8[0].coefficients == vec{4, 0});
  CHECK(f8[1].coefficients == vec{1, 2});

  const NumericalSemigroup S34({3, 4});
  const auto f12 = nsgraph::factorizations(S34, 12);
  REQUIRE(f12.size() == 2);
  CHECK(f12[0].coefficients == vec{4, 0});
  CHECK(f12[1].coefficients == vec{0, 3});

  CHECK(nsgraph::factorizations(S34, 5).empty());
  const auto f0 = nsgraph::factorizations(S34, 0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].coefficients == vec{0, 0});
  CHECK(f0[0].support_size() == 0);
  CHECK(code_of([&] { nsgraph::factorizations(S34, -1); }) ==
        errc::invalid_argument);
}

TEST_CASE("factorizations agree with the odometer oracle") {
  const std::vector<vec> pool = {{2, 3}, {3, 4}, {3, 5, 7}, {5, 6, 9, 13}};
  for (const auto& gens : pool) {
    const NumericalSemigroup S(gens);
    for (i64 x = 0; x <= 60; ++x) {
      CAPTURE(gens);
      CAPTURE(x);
      const auto expected = oracles::factorizations(S.generators(), x);
      CHECK(coefficient_set(S, x) == expected);
      CHECK(S.contains(x) == !expected.empty());
      for (const auto& f : nsgraph::factorizations(S, x)) {
        i64 value = 0;
        for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
          value += f.coefficients[i] * S.generators()[i];
        }
        CHECK(value == x);
      }
    }
  }
}

TEST_CASE("profile pins") {
  const auto p34 = nsgraph::profile(NumericalSemigroup({3, 4}), 12);
  CHECK(p34.count(1) == 2);
  CHECK(p34.count(2) == 0);
  CHECK_FALSE(p34.any_at_least(2));

  const auto p23 = nsgraph::profile(NumericalSemigroup({2, 3}), 8);
  CHECK(p23.count(1) == 1);
  CHECK(p23.count(2) == 1);

  const auto big = nsgraph::profile(NumericalSemigroup({5, 6, 9, 13}), 18);
  CHECK(big.list.size() == 3);
  CHECK(big.count(1) == 2);
  CHECK(big.count(2) == 1);
  CHECK(big.count(3) == 0);
  CHECK(big.any_at_least(2));
  CHECK_FALSE(big.any_at_least(3));

  CHECK(code_of([] {
          nsgraph::profile(NumericalSemigroup({3, 4}), 5);
        }) == errc::not_a_member);
}

TEST_CASE("profile counts are consistent with the list") {
  const NumericalSemigroup S({5, 6, 9, 13});
  for (i64 x = 1; x <= 80; ++x) {
    if (!S.contains(x)) continue;
    const auto p = nsgraph::profile(S, x);
    std::size_t total = 0;
    for (int q = 1; q <= 4; ++q) total += p.count(q);
    CHECK(total == p.list.size());
    for (const auto& f : p.list) CHECK(f.support_size() >= 1);
  }
}

TEST_CASE("divisor count lower bound") {
  using nsgraph::Factorization;
  CHECK(nsgraph::divisor_count_lower_bound(Factorization{{1, 1}}) == 3);
  CHECK(nsgraph::divisor_count_lower_bound(Factorization{{2, 1}}) == 5);
  CHECK(nsgraph::divisor_count_lower_bound(Factorization{{1, 1, 1}}) == 7);
  CHECK(nsgraph::divisor_count_lower_bound(Factorization{{0, 3, 0}}) == 3);
  CHECK(code_of([] {
          nsgraph::divisor_count_lower_bound(Factorization{{0, 0}});
        }) == errc::zero_factorization);
}
