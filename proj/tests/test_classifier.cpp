#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/classifier.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/isomorphism.hpp"
#include "core/render.hpp"
#include "core/semigroup.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using nsgraph::Error;
using nsgraph::errc;
using nsgraph::FactorizationProfile;
using nsgraph::GraphType;
using nsgraph::NumericalSemigroup;
using nsgraph::TypePlanarity;

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

// Profile with the given support-size histogram; the factorization list
// itself is irrelevant to the exclusion rules.
FactorizationProfile histogram(std::vector<std::size_t> by_support) {
  FactorizationProfile p;
  p.by_support = std::move(by_support);
  return p;
}

}  // namespace

TEST_CASE("type representatives regenerate from their pinned instances") {
  for (const auto& spec : nsgraph::type_representative_specs()) {
    CAPTURE(spec.order);
    CAPTURE(spec.index);
    const NumericalSemigroup S(spec.generators);
    const auto G = nsgraph::build_graph(S, spec.x);
    REQUIRE(G.order() == spec.order);
    const auto deg = G.degree_sequence();
    for (int i = 0; i < spec.order; ++i) {
      CHECK(deg[static_cast<std::size_t>(i)] ==
            spec.degree_sequence[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < spec.order; ++i) {
      std::uint8_t row = 0;
      for (int j = 0; j < spec.order; ++j) {
        if (G.adjacent(i, j)) row |= static_cast<std::uint8_t>(1u << j);
      }
      CHECK(row == spec.adjacency_rows[static_cast<std::size_t>(i)]);
    }

    const auto& rep = nsgraph::type_representative(spec.order, spec.index);
    CHECK(rep.order() == spec.order);
    CHECK(nsgraph::isomorphic(rep, G));

    const auto t = nsgraph::table_type(G);
    REQUIRE(t.has_value());
    CHECK(t->order == spec.order);
    CHECK(t->index == spec.index);
    CHECK(t->degree_sequence == deg);
  }
}

TEST_CASE("degree tables") {
  const auto& rows6 = nsgraph::degree_table(6);
  REQUIRE(rows6.size() == 6);
  CHECK(rows6.front() == std::vector<int>{1, 2, 3, 3, 4, 5});
  CHECK(rows6.back() == std::vector<int>{4, 4, 4, 4, 5, 5});
  const auto& rows7 = nsgraph::degree_table(7);
  REQUIRE(rows7.size() == 6);
  CHECK(rows7[2] == std::vector<int>{3, 3, 3, 5, 5, 5, 6});
  CHECK(rows7.back() == std::vector<int>{5, 5, 5, 5, 5, 5, 6});
  CHECK(code_of([] { nsgraph::degree_table(5); }) == errc::order_mismatch);
}

TEST_CASE("table type lookups") {
  const auto t1 = nsgraph::table_type(
      nsgraph::build_graph(NumericalSemigroup({2, 15}), 12));
  REQUIRE(t1.has_value());
  CHECK(t1->order == 6);
  CHECK(t1->index == 1);

  // right order, off-table degree sequence
  CHECK_FALSE(nsgraph::table_type(oracles::cycle_graph(6)).has_value());

  CHECK(code_of([] {
          nsgraph::table_type(oracles::complete_graph(5));
        }) == errc::order_mismatch);
}

TEST_CASE("order six exclusion rules") {
  CHECK(nsgraph::order6_exclusions(histogram({0, 3})) ==
        std::vector<std::string>{"O6.2"});
  CHECK(nsgraph::order6_exclusions(histogram({0, 0, 0, 1})) ==
        std::vector<std::string>{"O6.1"});
  CHECK(nsgraph::order6_exclusions(histogram({0, 1, 1})).empty());
  CHECK(nsgraph::order6_exclusions(histogram({0, 0, 2})) ==
        std::vector<std::string>{"O6.3"});
  CHECK(nsgraph::order6_exclusions(histogram({0, 3, 2})) ==
        std::vector<std::string>{"O6.2", "O6.4"});
}

TEST_CASE("order seven exclusion rules") {
  CHECK(nsgraph::order7_exclusions(histogram({0, 1, 0, 1})) ==
        std::vector<std::string>{"O7.3"});
  CHECK(nsgraph::order7_exclusions(histogram({0, 0, 0, 1})).empty());
  CHECK(nsgraph::order7_exclusions(histogram({0, 0, 4})) ==
        std::vector<std::string>{"O7.4"});
  CHECK(nsgraph::order7_exclusions(histogram({0, 0, 0, 0, 1})) ==
        std::vector<std::string>{"O7.1"});
  CHECK(nsgraph::order7_exclusions(histogram({0, 3, 2})) ==
        std::vector<std::string>{"O7.6", "O7.8"});
  CHECK(nsgraph::order7_exclusions(histogram({0, 1, 1})).empty());
}

TEST_CASE("planarity by type") {
  CHECK(nsgraph::planarity_by_type(4, std::nullopt) ==
        TypePlanarity::planar);
  CHECK(nsgraph::planarity_by_type(9, std::nullopt) ==
        TypePlanarity::nonplanar);
  CHECK(nsgraph::planarity_by_type(6, GraphType{6, 4, {3, 3, 4, 4, 5, 5}}) ==
        TypePlanarity::planar);
  CHECK(nsgraph::planarity_by_type(6, GraphType{6, 5, {3, 4, 4, 4, 4, 5}}) ==
        TypePlanarity::nonplanar);
  CHECK(nsgraph::planarity_by_type(7, GraphType{7, 3, {3, 3, 3, 5, 5, 5, 6}}) ==
        TypePlanarity::planar);
  CHECK(nsgraph::planarity_by_type(7, GraphType{7, 4, {3, 4, 4, 5, 5, 5, 6}}) ==
        TypePlanarity::nonplanar);
  CHECK(code_of([] { nsgraph::planarity_by_type(6, std::nullopt); }) ==
        errc::missing_type);
  CHECK(code_of([] { nsgraph::planarity_by_type(7, std::nullopt); }) ==
        errc::missing_type);
}

TEST_CASE("case matching pins") {
  const NumericalSemigroup S215({2, 15});
  const auto c12 =
      nsgraph::match_case(S215, 12, nsgraph::profile(S215, 12), 6);
  REQUIRE(c12.has_value());
  CHECK(c12->family == 6);
  CHECK(c12->index == 1);  // x = 6*2

  const NumericalSemigroup S34({3, 4});
  const auto c34 = nsgraph::match_case(S34, 12, nsgraph::profile(S34, 12), 6);
  REQUIRE(c34.has_value());
  CHECK(c34->index == 2);  // x = 4*3 = 3*4

  const NumericalSemigroup S23({2, 3});
  const auto c23 = nsgraph::match_case(S23, 8, nsgraph::profile(S23, 8), 6);
  REQUIRE(c23.has_value());
  CHECK(c23->index == 5);  // x = 4*2 with 3*2 = 2*3

  const auto c14 =
      nsgraph::match_case(S215, 14, nsgraph::profile(S215, 14), 7);
  REQUIRE(c14.has_value());
  CHECK(c14->family == 7);
  CHECK(c14->index == 1);  // x = 7*2
  REQUIRE_FALSE(c14->witness.empty());
  CHECK(c14->witness.front().second == 2);

  const NumericalSemigroup S35({3, 5});
  const auto c35 = nsgraph::match_case(S35, 15, nsgraph::profile(S35, 15), 7);
  REQUIRE(c35.has_value());
  CHECK(c35->index == 2);  // x = 5*3 = 3*5

  // every witnessed case also appears in the all-cases list
  const auto all = nsgraph::matching_cases(S23, 8, nsgraph::profile(S23, 8), 6);
  CHECK(std::find(all.begin(), all.end(), 5) != all.end());
}

TEST_CASE("case matching rejects wrong orders") {
  const NumericalSemigroup S({2, 3});
  const auto p8 = nsgraph::profile(S, 8);
  CHECK(code_of([&] { nsgraph::match_case(S, 8, p8, 5); }) ==
        errc::order_mismatch);
  const auto p10 = nsgraph::profile(S, 10);
  CHECK(code_of([&] { nsgraph::match_case(S, 10, p10, 6); }) ==
        errc::order_mismatch);
}

TEST_CASE("classification pins") {
  const auto r1 = nsgraph::classify(NumericalSemigroup({3, 4}), 12);
  CHECK(r1.order == 6);
  REQUIRE(r1.matched_case.has_value());
  CHECK(r1.matched_case->index == 2);
  REQUIRE(r1.type.has_value());
  CHECK(r1.type->index == 5);
  CHECK(r1.predicted == TypePlanarity::nonplanar);
  REQUIRE(r1.oracle.has_value());
  CHECK_FALSE(r1.oracle->planar);
  CHECK(r1.agreement);
  CHECK(r1.divisor_bound_holds);

  const auto r2 = nsgraph::classify(NumericalSemigroup({2, 3}), 8);
  CHECK(r2.order == 6);
  REQUIRE(r2.matched_case.has_value());
  CHECK(r2.matched_case->index == 5);
  REQUIRE(r2.type.has_value());
  CHECK(r2.type->index == 3);
  CHECK(r2.predicted == TypePlanarity::planar);
  REQUIRE(r2.oracle.has_value());
  CHECK(r2.oracle->planar);
  CHECK(r2.agreement);

  const auto r3 = nsgraph::classify(NumericalSemigroup({2, 15}), 14);
  CHECK(r3.order == 7);
  REQUIRE(r3.matched_case.has_value());
  CHECK(r3.matched_case->index == 1);
  REQUIRE(r3.type.has_value());
  CHECK(r3.type->index == 1);
  CHECK(r3.predicted == TypePlanarity::planar);
  CHECK(r3.agreement);

  const auto r4 = nsgraph::classify(NumericalSemigroup({2, 15}), 12);
  CHECK(r4.order == 6);
  REQUIRE(r4.matched_case.has_value());
  CHECK(r4.matched_case->index == 1);
  REQUIRE(r4.type.has_value());
  CHECK(r4.type->index == 1);

  const auto r5 = nsgraph::classify(NumericalSemigroup({5, 6, 9, 13}), 18);
  CHECK(r5.order == 6);
  REQUIRE(r5.matched_case.has_value());
  CHECK(r5.matched_case->index == 7);
  REQUIRE(r5.type.has_value());
  CHECK(r5.type->index == 6);
  CHECK(r5.predicted == TypePlanarity::nonplanar);
  REQUIRE(r5.oracle.has_value());
  CHECK_FALSE(r5.oracle->planar);
  CHECK(r5.agreement);

  CHECK(code_of([] {
          nsgraph::classify(NumericalSemigroup({3, 4}), 5);
        }) == errc::not_a_member);
}

TEST_CASE("an order-7 instance can fire an order-7 exclusion rule") {
  // 15 = 3*5 and 15 = 4+5+6 over <4,5,6>: the support histogram {1:1, 3:1}
  // trips rule O7.3, yet |B*(15)| = 7. The rule is not sound as stated;
  // the sweep reports this as a violation rather than papering over it.
  const auto r = nsgraph::classify(NumericalSemigroup({4, 5, 6}), 15);
  CHECK(r.order == 7);
  CHECK(std::find(r.exclusions.begin(), r.exclusions.end(), "O7.3") !=
        r.exclusions.end());
  REQUIRE(r.matched_case.has_value());
  CHECK(r.matched_case->index == 9);
  REQUIRE(r.type.has_value());
  CHECK(r.type->index == 3);
  CHECK(r.predicted == TypePlanarity::planar);
  REQUIRE(r.oracle.has_value());
  CHECK(r.oracle->planar);
  CHECK(r.agreement);
}

TEST_CASE("an order-7 shape outside the case list") {
  // 11 = 2*3+5 = 3+2*4 over <3,4,5> has order 7 but matches no listed
  // form, and its graph is not isomorphic to the pinned representative of
  // degree row (3,4,4,5,5,5,6).
  const auto r = nsgraph::classify(NumericalSemigroup({3, 4, 5}), 11);
  CHECK(r.order == 7);
  CHECK_FALSE(r.matched_case.has_value());
  CHECK(r.all_cases.empty());
  CHECK(r.graph.degree_sequence() == std::vector<int>{3, 4, 4, 5, 5, 5, 6});
  CHECK_FALSE(r.type.has_value());
  CHECK(r.predicted == TypePlanarity::out_of_range);
  REQUIRE(r.oracle.has_value());
  CHECK_FALSE(r.oracle->planar);
  CHECK(r.agreement);  // nothing to compare against

  // same degree row, structurally different graph
  const auto pinned = nsgraph::classify(NumericalSemigroup({3, 5}), 15);
  REQUIRE(pinned.type.has_value());
  CHECK(pinned.type->index == 4);
  CHECK(pinned.graph.degree_sequence() == r.graph.degree_sequence());
  CHECK_FALSE(nsgraph::isomorphic(pinned.graph, r.graph));
}

TEST_CASE("a product bound that overshoots the divisor count") {
  // 14 = 4*2 + 2*3 over <2,3> claims (4+1)(2+1)-1 = 14 divisors, but
  // |B(14)| = 13: the partial sums collide.
  const auto r = nsgraph::classify(NumericalSemigroup({2, 3}), 14);
  CHECK(r.bound_best == 14);
  CHECK(r.divisor_count == 13);
  CHECK_FALSE(r.divisor_bound_holds);
}

TEST_CASE("classification of orders handled without a full oracle") {
  // order 10: the dichotomy says non-planar, backed by a 5-clique witness
  const auto r = nsgraph::classify(NumericalSemigroup({2, 3}), 12);
  CHECK(r.order == 10);
  CHECK(r.predicted == TypePlanarity::nonplanar);
  REQUIRE(r.oracle.has_value());
  CHECK_FALSE(r.oracle->planar);
  REQUIRE(r.oracle->certificate.has_value());
  CHECK(r.oracle->certificate->kind ==
        nsgraph::KuratowskiWitness::Kind::K5);
  CHECK(nsgraph::validate_witness(r.graph, *r.oracle->certificate));
  CHECK(r.agreement);
}

TEST_CASE("classification json shape") {
  const auto text =
      nsgraph::classification_json(nsgraph::classify(NumericalSemigroup({3, 4}), 12));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["generators"] == nlohmann::json({3, 4}));
  CHECK(j["x"] == 12);
  CHECK(j["order"] == 6);
  CHECK(j["case"]["theorem"] == 1);
  CHECK(j["case"]["index"] == 2);
  CHECK(j["type"]["index"] == 5);
  CHECK(j["planar_theorem"] == false);
  CHECK(j["planar_oracle"] == false);
  CHECK(j["agreement"] == true);
  CHECK(j["divisor_bound"]["holds"] == true);
  CHECK(j["certificate"]["kind"] == "K33");

  const auto off = nlohmann::json::parse(nsgraph::classification_json(
      nsgraph::classify(NumericalSemigroup({3, 4, 5}), 11)));
  CHECK(off["case"].is_null());
  CHECK(off["type"].is_null());
  CHECK(off["planar_theorem"] == "out-of-range");
  CHECK(off["agreement"] == true);
}
